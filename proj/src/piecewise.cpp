#include "subjetlab/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subjetlab/double_description.hpp"
#include "subjetlab/region.hpp"
#include "subjetlab/special.hpp"

namespace subjetlab {

bool cell_contains(const Cell& c, const RatVec& x) {
  if (!contains(c.region, x)) return false;
  for (const auto& s : c.sign_ineqs) {
    Rational q = s.q.eval(x);
    if (s.strict ? !(q < 0) : !(q <= 0)) return false;
  }
  return true;
}

bool cell_closure_contains(const Cell& c, const RatVec& x) {
  if (!contains(c.region, x)) return false;
  for (const auto& s : c.sign_ineqs)
    if (!(s.q.eval(x) <= 0)) return false;
  return true;
}

ExtVal evaluate(const PiecewiseFunction& f, const RatVec& x) {
  if (x.size() != f.n) throw std::logic_error("evaluate: dimension mismatch");
  bool found = false;
  Rational val;
  for (const auto& c : f.cells) {
    if (!cell_contains(c, x)) continue;
    Rational v = c.poly.eval(x);
    if (found && v != val)
      throw std::runtime_error("evaluate: inconsistent cell values at " + rat_vec_str(x));
    found = true;
    val = std::move(v);
  }
  return found ? ExtVal::fin(val) : ExtVal::infinity();
}

RatVec gradient_on_cell(const Cell& c, const RatVec& x) {
  if (!cell_closure_contains(c, x))
    throw std::logic_error("gradient_on_cell: point outside cell closure");
  return c.poly.gradient_at(x);
}

namespace {

// An affine difference vanishes on a polyhedron iff it vanishes on all
// generators of its V-representation.
bool affine_zero_on(const Polynomial& diff, const VRep& V) {
  auto [a, b] = diff.affine_parts();
  for (const auto& v : V.vertices)
    if (dot(a, v) + b != 0) return false;
  for (const auto& r : V.rays)
    if (dot(a, r) != 0) return false;
  for (const auto& l : V.lines)
    if (dot(a, l) != 0) return false;
  return true;
}

void check_affine_pair(const PiecewiseFunction& f, std::size_t i, std::size_t j,
                       ValidationReport& rep) {
  HPolyhedron D = intersect(f.cells[i].region, f.cells[j].region);
  VRep VD = dd_vrep(D);
  if (VD.empty()) return;
  RatVec p = relint_point(VD);
  if (relint_contains(f.cells[i].region, p) && relint_contains(f.cells[j].region, p)) {
    rep.interiors_disjoint = false;
    rep.issues.push_back({"interior_disjoint",
                          "cells " + std::to_string(i) + " and " + std::to_string(j) +
                              " share relative-interior points",
                          p});
  }
  Polynomial diff = f.cells[i].poly - f.cells[j].poly;
  if (!affine_zero_on(diff, VD)) {
    rep.continuous = false;
    rep.issues.push_back({"continuity",
                          "cells " + std::to_string(i) + " and " + std::to_string(j) +
                              " disagree on their shared set",
                          p});
  }
}

double vec_dist_double(const RatVec& x, const RatVec& y) {
  double s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double d = rat_double(x[k] - y[k]);
    s += d * d;
  }
  return std::sqrt(s);
}

void check_adjacency_decls(const PiecewiseFunction& f, ValidationReport& rep) {
  for (std::size_t i = 0; i < f.cells.size(); ++i) {
    for (const auto& adj : f.cells[i].adjacency_at) {
      const Cell& c = f.cells[i];
      if (!cell_closure_contains(c, adj.point)) {
        rep.continuous = false;
        rep.issues.push_back({"adjacency",
                              "cell " + std::to_string(i) +
                                  " declares adjacency at a point outside its closure",
                              adj.point});
        continue;
      }
      bool seq_ok = !adj.witness_seq.empty();
      double prev = -1;
      for (const auto& w : adj.witness_seq) {
        if (!cell_contains(c, w)) seq_ok = false;
        double d = vec_dist_double(w, adj.point);
        if (prev >= 0 && d >= prev) seq_ok = false;
        prev = d;
      }
      if (seq_ok && prev > 1e-9) seq_ok = false;
      if (!seq_ok) {
        rep.continuous = false;
        rep.issues.push_back({"adjacency",
                              "cell " + std::to_string(i) +
                                  " has a witness sequence that does not converge into the cell",
                              adj.point});
      }
    }
  }
}

void check_poly_point_consistency(const PiecewiseFunction& f, ValidationReport& rep) {
  for (const auto& c : f.cells) {
    for (const auto& adj : c.adjacency_at) {
      bool found = false;
      Rational val;
      for (const auto& d : f.cells) {
        if (!cell_closure_contains(d, adj.point)) continue;
        Rational v = d.poly.eval(adj.point);
        if (found && v != val) {
          rep.continuous = false;
          rep.issues.push_back(
              {"continuity", "cell values disagree at a declared point", adj.point});
          break;
        }
        found = true;
        val = v;
      }
    }
  }
}

}  // namespace

ValidationReport validate(const PiecewiseFunction& f) {
  if (!f.special_oracle.empty()) return special_validate(f);
  return validate_generic(f);
}

ValidationReport validate_generic(const PiecewiseFunction& f) {
  ValidationReport rep;
  rep.proper = false;
  rep.continuous = true;
  rep.lsc = true;
  rep.interiors_disjoint = true;

  if (f.tier == Tier::affine) {
    for (const auto& c : f.cells) {
      if (!c.poly.is_affine()) {
        rep.issues.push_back({"tier", "affine-tier cell carries a nonlinear formula",
                              RatVec(f.n, Rational(0))});
        rep.continuous = false;
      }
      if (feasible(c.region)) rep.proper = true;
    }
    for (std::size_t i = 0; i < f.cells.size(); ++i)
      for (std::size_t j = i + 1; j < f.cells.size(); ++j)
        check_affine_pair(f, i, j, rep);
    // Cells are closed polyhedra and the formulas are continuous, so once
    // the shared-set values agree the function is lsc on all of R^n.
    rep.lsc = rep.continuous;
    if (!rep.lsc)
      rep.issues.push_back({"lsc", "lower semicontinuity fails with the continuity defect",
                            rep.issues.empty() ? RatVec(f.n, Rational(0))
                                               : rep.issues.back().witness});
    return rep;
  }

  // Polynomial tier: certification happens at the declared sample data.
  for (const auto& c : f.cells) {
    bool has_strict = false;
    for (const auto& s : c.sign_ineqs) has_strict = has_strict || s.strict;
    if (has_strict) {
      rep.lsc = false;
      rep.issues.push_back({"lsc",
                            "open sign region without a hand-coded catalog cannot be certified",
                            RatVec(f.n, Rational(0))});
    }
    for (const auto& adj : c.adjacency_at)
      if (cell_contains(c, adj.point) || cell_closure_contains(c, adj.point))
        rep.proper = true;
  }
  if (!rep.proper) {
    // Fall back to the affine parts: a feasible affine region whose sign
    // conditions hold at its relative-interior point witnesses properness.
    for (const auto& c : f.cells) {
      if (!feasible(c.region)) continue;
      RatVec p = relint_point(c.region);
      if (cell_contains(c, p)) {
        rep.proper = true;
        break;
      }
    }
  }
  check_adjacency_decls(f, rep);
  check_poly_point_consistency(f, rep);
  return rep;
}

PiecewiseFunction refine(const PiecewiseFunction& f) {
  if (f.tier != Tier::affine) throw std::logic_error("refine: affine tier only");
  std::vector<HPolyhedron> regions;
  for (const auto& c : f.cells) regions.push_back(c.region);
  std::vector<LinCon> cuts = union_cut_list(regions);

  PiecewiseFunction out;
  out.name = f.name;
  out.n = f.n;
  out.tier = Tier::affine;
  std::vector<VRep> keys;
  for (const auto& c : f.cells) {
    for (auto& rc : refine_against(c.region, cuts)) {
      VRep key = canonical_form(rc.vrep);
      bool dup = false;
      for (const auto& k : keys)
        if (!vrep_less(k, key) && !vrep_less(key, k)) {
          dup = true;
          break;
        }
      if (dup) continue;
      keys.push_back(std::move(key));
      out.cells.push_back(Cell{std::move(rc.poly), {}, c.poly, {}});
    }
  }
  // Canonical cell order keeps refine deterministic and idempotent.
  std::vector<std::size_t> order(out.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return vrep_less(keys[i], keys[j]); });
  PiecewiseFunction sorted = out;
  sorted.cells.clear();
  for (auto i : order) sorted.cells.push_back(std::move(out.cells[i]));
  return sorted;
}

PiecewiseFunction min_of_affine(const std::vector<std::pair<RatVec, Rational>>& pieces) {
  if (pieces.empty()) throw std::logic_error("min_of_affine: empty list");
  std::size_t n = pieces.front().first.size();
  std::vector<std::pair<RatVec, Rational>> uniq;
  for (const auto& p : pieces) {
    if (p.first.size() != n) throw std::logic_error("min_of_affine: dimension mismatch");
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  PiecewiseFunction f;
  f.n = n;
  f.tier = Tier::affine;
  for (std::size_t k = 0; k < uniq.size(); ++k) {
    Cell c;
    c.region = HPolyhedron::whole_space(n);
    for (std::size_t j = 0; j < uniq.size(); ++j) {
      if (j == k) continue;
      c.region.ineqs.push_back(
          LinCon{vec_sub(uniq[k].first, uniq[j].first), uniq[j].second - uniq[k].second});
    }
    if (!feasible(c.region)) continue;
    c.poly = Polynomial::affine(uniq[k].first, uniq[k].second);
    f.cells.push_back(std::move(c));
  }
  return f;
}

PiecewiseFunction indicator(const HPolyhedron& P) {
  PiecewiseFunction f;
  f.n = P.n;
  f.tier = Tier::affine;
  f.cells.push_back(Cell{P, {}, Polynomial::constant(P.n, Rational(0)), {}});
  return f;
}

PiecewiseFunction negate(const PiecewiseFunction& f) {
  PiecewiseFunction g = f;
  for (auto& c : g.cells) c.poly = c.poly.scaled(Rational(-1));
  return g;
}

PiecewiseFunction sum(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  if (f.n != g.n) throw std::logic_error("sum: dimension mismatch");
  if (f.tier != Tier::affine || g.tier != Tier::affine)
    throw std::logic_error("sum: affine tier only");
  PiecewiseFunction h;
  h.n = f.n;
  h.tier = Tier::affine;
  for (const auto& cf : f.cells)
    for (const auto& cg : g.cells) {
      HPolyhedron D = intersect(cf.region, cg.region);
      if (!feasible(D)) continue;
      h.cells.push_back(Cell{std::move(D), {}, cf.poly + cg.poly, {}});
    }
  return h;
}

PiecewiseFunction affine_precompose(const PiecewiseFunction& g,
                                    const std::vector<RatVec>& A, const RatVec& c) {
  if (A.size() != g.n || c.size() != g.n)
    throw std::logic_error("affine_precompose: shape mismatch");
  std::size_t m = A.empty() ? 0 : A[0].size();
  for (const auto& row : A)
    if (row.size() != m) throw std::logic_error("affine_precompose: ragged matrix");

  auto pull_con = [&](const LinCon& con) {
    RatVec a2(m, Rational(0));
    for (std::size_t i = 0; i < A.size(); ++i)
      a2 = vec_add(a2, vec_scale(con.a[i], A[i]));
    return LinCon{std::move(a2), con.b - dot(con.a, c)};
  };

  PiecewiseFunction h;
  h.name = g.name;
  h.n = m;
  h.tier = g.tier;
  for (const auto& cell : g.cells) {
    Cell nc;
    nc.region = HPolyhedron::whole_space(m);
    for (const auto& con : cell.region.ineqs) nc.region.ineqs.push_back(pull_con(con));
    for (const auto& con : cell.region.eqs) nc.region.eqs.push_back(pull_con(con));
    for (const auto& s : cell.sign_ineqs)
      nc.sign_ineqs.push_back(SignCon{s.q.compose_affine(A, c), s.strict});
    nc.poly = cell.poly.compose_affine(A, c);
    if (!feasible(nc.region)) continue;
    h.cells.push_back(std::move(nc));
  }
  return h;
}

}  // namespace subjetlab
