#include "subjetlab/param.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "subjetlab/double_description.hpp"
#include "subjetlab/linalg.hpp"
#include "subjetlab/region.hpp"

namespace subjetlab {

namespace {

std::vector<RatVec> direction_basis(const VRep& V) {
  std::vector<RatVec> dirs;
  for (std::size_t i = 1; i < V.vertices.size(); ++i)
    dirs.push_back(vec_sub(V.vertices[i], V.vertices[0]));
  for (const auto& r : V.rays) dirs.push_back(r);
  for (const auto& l : V.lines) dirs.push_back(l);
  if (dirs.empty()) return {};
  RatMat M(dirs.size(), dirs[0].size());
  for (std::size_t r = 0; r < dirs.size(); ++r)
    for (std::size_t c = 0; c < dirs[r].size(); ++c) M.at(r, c) = dirs[r][c];
  std::vector<std::size_t> pivots = rref(M);
  std::vector<RatVec> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RatVec row(M.cols);
    for (std::size_t c = 0; c < M.cols; ++c) row[c] = M.at(r, c);
    basis.push_back(std::move(row));
  }
  return basis;
}

Rational linf(const RatVec& a, const RatVec& b) {
  Rational m(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = rat_abs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

SolveReport solve_inclusion(const std::vector<GraphPiece>& graph,
                            const std::vector<RatVec>& A, const RatVec& b) {
  const std::size_t n = b.size();
  SolveReport rep;
  bool all_points = true;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& p = graph[i];
    if (!(p.base && p.fiber))
      throw std::runtime_error("solve_inclusion needs product pieces");
    HPolyhedron sys = product(*p.base, *p.fiber);
    for (std::size_t r = 0; r < n; ++r) {
      RatVec row(2 * n, Rational(0));
      for (std::size_t c = 0; c < n; ++c) row[c] = A[r][c];
      row[n + r] = Rational(1);
      sys.add_eq(row, b[r]);
    }
    if (!feasible(sys)) continue;
    VRep V = dd_vrep(sys);
    int d = dim(V);
    if (d > 0) {
      rep.any_infinite = true;
      all_points = false;
    } else {
      rep.points.push_back(V.vertices.at(0));
    }
    rep.outcomes.push_back({i, std::move(V), d});
  }
  rep.empty = rep.outcomes.empty();
  rep.finite = !rep.empty && all_points;
  std::sort(rep.points.begin(), rep.points.end(), rat_vec_less);
  rep.points.erase(std::unique(rep.points.begin(), rep.points.end()), rep.points.end());
  return rep;
}

SensitivityReport sensitivity_experiment(const std::vector<GraphPiece>& graph,
                                         const std::vector<RatVec>& Abar, const RatVec& bbar,
                                         const RatVec& xbar, const RatVec& vbar,
                                         const Rational& eps, const Rational& delta,
                                         std::size_t trials, std::uint64_t seed) {
  const std::size_t n = bbar.size();
  SensitivityReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.eps = eps;
  rep.delta = delta;
  // Max-norm box half-width delta/(n+1): the perturbation has n^2+n
  // entries and ceil(sqrt(n^2+n)) = n+1, so the Euclidean norm of the full
  // perturbation never exceeds delta.
  Rational h = delta / Rational(static_cast<long>(n) + 1);
  rep.grid_step = h / Rational(1000);

  SolveReport anchor = solve_inclusion(graph, Abar, bbar);
  rep.anchor_class = anchor.empty ? "empty" : (anchor.any_infinite ? "infinite" : "finite");

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<RatVec> A = Abar;
    RatVec b = bbar;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        A[i][j] += rep.grid_step * Rational(rng.range(-1000, 1000));
    for (std::size_t i = 0; i < n; ++i)
      b[i] += rep.grid_step * Rational(rng.range(-1000, 1000));
    SolveReport sol = solve_inclusion(graph, A, b);
    if (sol.empty) {
      ++rep.count_empty;
      continue;
    }
    if (sol.any_infinite) {
      ++rep.count_infinite;
      continue;
    }
    ++rep.count_finite;
    bool near = false, joint = false;
    for (const auto& pt : sol.points) {
      RatVec x(pt.begin(), pt.begin() + n);
      RatVec v(pt.begin() + n, pt.end());
      bool v_near = linf(v, vbar) <= eps;
      if (v_near) near = true;
      if (v_near && linf(x, xbar) <= eps) joint = true;
    }
    if (near) ++rep.count_near_subgradient;
    if (joint) ++rep.count_joint_ball;
  }
  if (trials > 0) {
    rep.frac_infinite = static_cast<double>(rep.count_infinite) / static_cast<double>(trials);
    rep.frac_near_subgradient =
        static_cast<double>(rep.count_near_subgradient) / static_cast<double>(trials);
    rep.frac_joint_ball =
        static_cast<double>(rep.count_joint_ball) / static_cast<double>(trials);
  }
  return rep;
}

namespace {

// Exact minimizer of f(x) - y.x + 2m|x - xbar|^2 over the domain of an
// affine-tier f: on each face of each cell the restriction is a strictly
// convex quadratic, whose affine-hull minimizer is kept when it lies in the
// face; the overall minimum is attained among those candidates.
std::pair<RatVec, bool> prox_argmin(const PiecewiseFunction& f, const RatVec& y,
                                    const Rational& m, const RatVec& xbar) {
  bool have = false;
  RatVec best;
  Rational best_val(0);
  for (const auto& cell : f.cells) {
    if (!feasible(cell.region)) continue;
    auto [a, b] = cell.poly.affine_parts();
    for (const auto& face : faces(cell.region)) {
      VRep fv = dd_vrep(face.poly);
      RatVec x0 = relint_point(fv);
      std::vector<RatVec> B = direction_basis(fv);
      RatVec z = x0;
      if (!B.empty()) {
        const std::size_t k = B.size();
        RatMat G(k, k);
        RatVec rhs(k);
        Rational four_m = Rational(4) * m;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) G.at(i, j) = four_m * dot(B[i], B[j]);
          rhs[i] = dot(B[i], vec_sub(y, a)) - four_m * dot(B[i], vec_sub(x0, xbar));
        }
        auto u = solve_linear(G, rhs);
        if (!u) continue;  // cannot happen for independent directions
        for (std::size_t i = 0; i < k; ++i) z = vec_add(z, vec_scale((*u)[i], B[i]));
        if (!contains(face.poly, z)) continue;
      }
      Rational val = dot(a, z) + b - dot(y, z) + Rational(2) * m * norm2_sq(vec_sub(z, xbar));
      if (!have || val < best_val || (val == best_val && rat_vec_less(z, best))) {
        have = true;
        best_val = val;
        best = z;
      }
    }
  }
  return {best, have};
}

Rational triple_dist_sq(const RatVec& x, const Rational& fx, const RatVec& v,
                        const RatVec& xbar, const Rational& f0, const RatVec& vbar) {
  return norm2_sq(vec_sub(x, xbar)) + (fx - f0) * (fx - f0) + norm2_sq(vec_sub(v, vbar));
}

}  // namespace

AccessReport access_point(const PiecewiseFunction& f, const RatVec& xbar, const RatVec& vbar,
                          std::size_t steps, const Rational& tol_sq) {
  const std::size_t n = f.n;
  AccessReport rep;

  SubdiffResult lim = subdifferential(f, Kind::limiting, xbar);
  rep.limiting_member = result_contains(lim, vbar);
  if (!rep.limiting_member) {
    rep.explanation = "the pair is not in the limiting subdifferential graph at the base point";
    return rep;
  }
  ExtVal f0e = evaluate(f, xbar);
  Rational f0 = f0e.v;

  rep.fiber_dim = kDimEmpty;
  for (const auto& P : lim.pieces) rep.fiber_dim = std::max(rep.fiber_dim, dim(P));
  rep.on_boundary = !point_in_union_interior(vbar, lim.pieces);

  SubdiffResult reg = subdifferential(f, Kind::frechet, xbar);
  rep.frechet_member = reg.defined && result_contains(reg, vbar);

  // Proximal route: tilt slightly outside along an outward facet normal and
  // minimize the penalized function exactly; the minimizer escapes the base
  // point because the tilted target is not a subgradient there.
  if (rep.frechet_member && rep.on_boundary && f.tier == Tier::affine) {
    RatVec uhat;
    for (const auto& P : lim.pieces) {
      if (!contains(P, vbar)) continue;
      for (const auto& con : P.ineqs) {
        if (dot(con.a, vbar) != con.b) continue;
        bool outward = true;
        for (const auto& Q : lim.pieces) {
          if (!contains(Q, vbar)) continue;
          if (contains(tangent_cone_at(Q, vbar), con.a)) {
            outward = false;
            break;
          }
        }
        if (outward) {
          uhat = con.a;
          break;
        }
      }
      if (!uhat.empty()) break;
    }
    if (!uhat.empty()) {
      Rational maxabs(0);
      for (const auto& c : uhat) maxabs = std::max(maxabs, rat_abs(c));
      rep.route = AccessRoute::proximal;
      bool all_ok = true;
      Rational m(1);
      for (std::size_t i = 1; i <= steps; ++i) {
        m *= 2;  // multiplier schedule m_i = 2^i
        RatVec y = vec_add(vbar, vec_scale(Rational(1, static_cast<long>(i)) / maxabs, uhat));
        auto [x, ok] = prox_argmin(f, y, m, xbar);
        if (!ok) {
          all_ok = false;
          break;
        }
        RatVec v = vec_sub(y, vec_scale(Rational(4) * m, vec_sub(x, xbar)));
        ExtVal fx = evaluate(f, x);
        bool verified = fx.finite && x != xbar &&
                        result_contains(subdifferential(f, Kind::frechet, x), v);
        if (!verified) {
          all_ok = false;
          break;
        }
        rep.witnesses.push_back({x, fx.v, v, triple_dist_sq(x, fx.v, v, xbar, f0, vbar)});
      }
      rep.distances_decreasing = !rep.witnesses.empty();
      for (std::size_t i = 1; i < rep.witnesses.size(); ++i) {
        if (!(rep.witnesses[i].dist_sq < rep.witnesses[i - 1].dist_sq))
          rep.distances_decreasing = false;
      }
      if (!rep.witnesses.empty()) rep.final_dist_sq = rep.witnesses.back().dist_sq;
      rep.success = all_ok && rep.distances_decreasing && !rep.witnesses.empty() &&
                    rep.final_dist_sq < tol_sq;
      rep.explanation = rep.success
                            ? "proximal tilts produced a verified approach sequence"
                            : "proximal route ran but did not certify the approach sequence";
      if (rep.success) return rep;
      rep.witnesses.clear();
      rep.route = AccessRoute::refused;
    }
  }

  // Piece route: approach through the relative interior of a regular-graph
  // piece whose closure holds the target pair.
  if (rep.fiber_dim < static_cast<int>(n) || rep.on_boundary) {
    std::vector<GraphPiece> G = subjet_graph(f, Kind::frechet);
    for (const auto& piece : G) {
      if (!(piece.base && piece.fiber)) continue;
      if (dim(*piece.base) < 1) continue;
      if (!contains(*piece.base, xbar) || !contains(*piece.fiber, vbar)) continue;
      RatVec p = relint_point(*piece.base);
      RatVec d = vec_sub(p, xbar);
      if (vec_is_zero(d)) {
        VRep bv = dd_vrep(*piece.base);
        if (!bv.rays.empty())
          d = bv.rays[0];
        else if (!bv.lines.empty())
          d = bv.lines[0];
        else {
          for (const auto& vert : bv.vertices) {
            if (vert != xbar) {
              d = vec_sub(vert, xbar);
              break;
            }
          }
        }
        if (vec_is_zero(d)) continue;
      }
      std::vector<AccessWitness> ws;
      Rational t(1, 2);
      for (int it = 0; it < 64; ++it, t /= 2) {
        RatVec x = vec_add(xbar, vec_scale(t, d));
        ExtVal fx = evaluate(f, x);
        if (!fx.finite) continue;
        if (!result_contains(subdifferential(f, Kind::frechet, x), vbar)) continue;
        Rational dsq = triple_dist_sq(x, fx.v, vbar, xbar, f0, vbar);
        if (!ws.empty() && !(dsq < ws.back().dist_sq)) continue;
        ws.push_back({x, fx.v, vbar, dsq});
        if (dsq < tol_sq) break;
      }
      if (!ws.empty() && ws.back().dist_sq < tol_sq) {
        rep.route = AccessRoute::piece;
        rep.witnesses = std::move(ws);
        rep.distances_decreasing = true;
        rep.final_dist_sq = rep.witnesses.back().dist_sq;
        rep.success = true;
        rep.explanation = "walked into the relative interior of a regular-graph piece";
        return rep;
      }
    }
    rep.route = AccessRoute::refused;
    rep.explanation =
        "no regular-subdifferential piece of positive base dimension reaches the target pair";
    return rep;
  }

  rep.route = AccessRoute::refused;
  rep.explanation =
      "the target subgradient is interior to a full-dimensional pointwise subdifferential; "
      "every nearby regular pair stays at the base point";
  return rep;
}

}  // namespace subjetlab
