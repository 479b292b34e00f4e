#include "subjetlab/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subjetlab/double_description.hpp"
#include "subjetlab/linalg.hpp"

namespace subjetlab {

namespace {

ExtVal quotient(const PiecewiseFunction& f, const RatVec& x, const Rational& fx,
                const RatVec& d, const Rational& t) {
  ExtVal fv = evaluate(f, vec_add(x, vec_scale(t, d)));
  if (!fv.finite) return ExtVal::infinity();
  ExtVal out;
  out.finite = true;
  out.v = (fv.v - fx) / t;
  return out;
}

// Rotations of a 2D vector; together with the vector itself these cover all
// rays of the arrangement fan that the vector's hyperplane can contribute.
std::vector<RatVec> rotations2(const RatVec& a) {
  return {RatVec{-a[1], a[0]}, RatVec{a[1], -a[0]}};
}

std::vector<RatVec> direction_family(const PiecewiseFunction& f, const RatVec& x) {
  const std::size_t n = f.n;
  std::vector<RatVec> dirs;
  if (n == 1) {
    dirs.push_back({Rational(1)});
    dirs.push_back({Rational(-1)});
  } else if (n == 2) {
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) {
        if (i == 0 && j == 0) continue;
        if (std::gcd(std::abs(i), std::abs(j)) != 1) continue;
        dirs.push_back({Rational(i), Rational(j)});
      }
    }
  } else {
    std::vector<int> e(n, -1);
    while (true) {
      RatVec d(n);
      bool zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = Rational(e[i]);
        if (e[i] != 0) zero = false;
      }
      if (!zero) dirs.push_back(d);
      std::size_t k = 0;
      while (k < n && e[k] == 1) e[k++] = -1;
      if (k == n) break;
      ++e[k];
    }
  }
  for (const auto& cell : f.cells) {
    if (!cell_closure_contains(cell, x)) continue;
    std::vector<LinCon> active;
    for (const auto& con : cell.region.ineqs)
      if (dot(con.a, x) == con.b) active.push_back(con);
    for (const auto& con : cell.region.eqs) active.push_back(con);
    for (const auto& con : active) {
      RatVec a = primitive_direction(con.a);
      if (vec_is_zero(a)) continue;
      dirs.push_back(a);
      dirs.push_back(vec_scale(Rational(-1), a));
      if (n == 2)
        for (auto& r : rotations2(a)) dirs.push_back(std::move(r));
    }
  }
  for (auto& d : dirs) d = primitive_ray(d);
  std::sort(dirs.begin(), dirs.end(), rat_vec_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

}  // namespace

ExtVal directional_derivative(const PiecewiseFunction& f, const RatVec& x, const RatVec& d) {
  if (f.tier != Tier::affine)
    throw std::runtime_error(
        "directional derivatives stabilize exactly only on the affine tier");
  ExtVal fx = evaluate(f, x);
  if (!fx.finite)
    throw std::invalid_argument("directional derivative requires a domain point");
  Rational t(1, 8);
  ExtVal prev = quotient(f, x, fx.v, d, t);
  int agreed = 0;
  for (int it = 0; it < 80; ++it) {
    t /= 2;
    ExtVal cur = quotient(f, x, fx.v, d, t);
    if (cur == prev)
      ++agreed;
    else
      agreed = 0;
    prev = cur;
    if (agreed >= 2) return cur;  // three consecutive equal quotients
  }
  throw std::runtime_error("directional derivative did not stabilize");
}

HPolyhedron frechet_oracle(const PiecewiseFunction& f, const RatVec& x) {
  HPolyhedron O = HPolyhedron::whole_space(f.n);
  for (const auto& d : direction_family(f, x)) {
    ExtVal fd = directional_derivative(f, x, d);
    if (fd.finite) O.add_ineq(d, fd.v);
  }
  return O;
}

std::vector<HPolyhedron> limiting_oracle(const PiecewiseFunction& f, const RatVec& x) {
  PiecewiseFunction rf = refine(f);
  // Collect the faces of the refined cell complex whose closure holds x,
  // deduped canonically; step toward the relative interior of each.
  std::vector<VRep> seen;
  std::vector<RatVec> probes;
  for (const auto& cell : rf.cells) {
    if (!cell_closure_contains(cell, x)) continue;
    for (const auto& face : faces(cell.region)) {
      if (!contains(face.poly, x)) continue;
      VRep key = canonical_form(dd_vrep(face.poly));
      bool dup = false;
      for (const auto& s : seen)
        if (s.vertices == key.vertices && s.rays == key.rays && s.lines == key.lines) {
          dup = true;
          break;
        }
      if (dup) continue;
      seen.push_back(std::move(key));
      RatVec rel = relint_point(face.poly);
      probes.push_back(vec_add(x, vec_scale(Rational(1, 16), vec_sub(rel, x))));
    }
  }
  std::vector<HPolyhedron> out;
  std::vector<VRep> keys;
  for (const auto& q : probes) {
    HPolyhedron O = frechet_oracle(f, q);
    if (!feasible(O)) continue;
    VRep key = canonical_form(dd_vrep(O));
    bool dup = false;
    for (const auto& s : keys)
      if (s.vertices == key.vertices && s.rays == key.rays && s.lines == key.lines) {
        dup = true;
        break;
      }
    if (dup) continue;
    keys.push_back(std::move(key));
    out.push_back(std::move(O));
  }
  return out;
}

HPolyhedron clarke_oracle(const PiecewiseFunction& f, const RatVec& x) {
  const std::size_t n = f.n;
  VRep grads;
  for (const auto& cell : f.cells) {
    if (!cell_closure_contains(cell, x)) continue;
    if (dim(cell.region) != static_cast<int>(n)) continue;
    RatVec rel = relint_point(cell.region);
    RatVec q = vec_add(x, vec_scale(Rational(1, 16), vec_sub(rel, x)));
    RatVec g(n);
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n, Rational(0));
      e[i] = Rational(1);
      ExtVal plus = directional_derivative(f, q, e);
      e[i] = Rational(-1);
      ExtVal minus = directional_derivative(f, q, e);
      if (!plus.finite || !minus.finite || plus.v != -minus.v)
        throw std::runtime_error("gradient sampling hit a nonsmooth point");
      g[i] = plus.v;
    }
    grads.vertices.push_back(std::move(g));
  }
  if (grads.vertices.empty())
    throw std::runtime_error("no full-dimensional cell around the point");
  std::sort(grads.vertices.begin(), grads.vertices.end(), rat_vec_less);
  grads.vertices.erase(std::unique(grads.vertices.begin(), grads.vertices.end()),
                       grads.vertices.end());
  return dd_hrep(grads, n);
}

}  // namespace subjetlab
