#include "subjetlab/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "subjetlab/double_description.hpp"

namespace subjetlab {

HPolyhedron HPolyhedron::empty_set(std::size_t n) {
  HPolyhedron P{n, {}, {}};
  P.add_ineq(RatVec(n, Rational(0)), Rational(-1));
  return P;
}

void HPolyhedron::add_ineq(RatVec a, Rational b) {
  if (a.size() != n) throw std::logic_error("add_ineq: arity mismatch");
  ineqs.push_back(LinCon{std::move(a), std::move(b)});
}

void HPolyhedron::add_eq(RatVec a, Rational b) {
  if (a.size() != n) throw std::logic_error("add_eq: arity mismatch");
  eqs.push_back(LinCon{std::move(a), std::move(b)});
}

bool contains(const HPolyhedron& P, const RatVec& x) {
  if (x.size() != P.n) throw std::logic_error("contains: arity mismatch");
  for (const auto& c : P.ineqs)
    if (dot(c.a, x) > c.b) return false;
  for (const auto& c : P.eqs)
    if (dot(c.a, x) != c.b) return false;
  return true;
}

HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.n != Q.n) throw std::logic_error("intersect: arity mismatch");
  HPolyhedron R = P;
  R.ineqs.insert(R.ineqs.end(), Q.ineqs.begin(), Q.ineqs.end());
  R.eqs.insert(R.eqs.end(), Q.eqs.begin(), Q.eqs.end());
  return R;
}

HPolyhedron translate(const HPolyhedron& P, const RatVec& t) {
  HPolyhedron R = P;
  for (auto& c : R.ineqs) c.b += dot(c.a, t);
  for (auto& c : R.eqs) c.b += dot(c.a, t);
  return R;
}

HPolyhedron product(const HPolyhedron& P, const HPolyhedron& Q) {
  HPolyhedron R = HPolyhedron::whole_space(P.n + Q.n);
  auto lift = [&](const LinCon& c, std::size_t off) {
    RatVec a(R.n, Rational(0));
    for (std::size_t i = 0; i < c.a.size(); ++i) a[off + i] = c.a[i];
    return LinCon{std::move(a), c.b};
  };
  for (const auto& c : P.ineqs) R.ineqs.push_back(lift(c, 0));
  for (const auto& c : P.eqs) R.eqs.push_back(lift(c, 0));
  for (const auto& c : Q.ineqs) R.ineqs.push_back(lift(c, P.n));
  for (const auto& c : Q.eqs) R.eqs.push_back(lift(c, P.n));
  return R;
}

bool feasible(const HPolyhedron& P) { return !dd_vrep(P).empty(); }

int dim(const VRep& V) {
  if (V.empty()) return kDimEmpty;
  std::vector<RatVec> span;
  for (std::size_t i = 1; i < V.vertices.size(); ++i)
    span.push_back(vec_sub(V.vertices[i], V.vertices[0]));
  span.insert(span.end(), V.rays.begin(), V.rays.end());
  span.insert(span.end(), V.lines.begin(), V.lines.end());
  return static_cast<int>(span_rank(span));
}

int dim(const HPolyhedron& P) { return dim(dd_vrep(P)); }

bool bounded(const VRep& V) { return V.rays.empty() && V.lines.empty(); }

RatVec relint_point(const VRep& V) {
  if (V.empty()) throw std::logic_error("relint_point: empty set");
  std::size_t n = V.vertices[0].size();
  RatVec c(n, Rational(0));
  for (const auto& v : V.vertices) c = vec_add(c, v);
  c = vec_scale(Rational(1) / Rational(static_cast<int>(V.vertices.size())), c);
  for (const auto& r : V.rays) c = vec_add(c, r);
  return c;
}

RatVec relint_point(const HPolyhedron& P) { return relint_point(dd_vrep(P)); }

namespace {

bool implicit_on(const LinCon& c, const VRep& V) {
  for (const auto& v : V.vertices)
    if (dot(c.a, v) != c.b) return false;
  for (const auto& r : V.rays)
    if (dot(c.a, r) != 0) return false;
  for (const auto& l : V.lines)
    if (dot(c.a, l) != 0) return false;
  return true;
}

std::vector<std::size_t> implicit_ineqs(const HPolyhedron& P, const VRep& V) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.ineqs.size(); ++i)
    if (implicit_on(P.ineqs[i], V)) out.push_back(i);
  return out;
}

HPolyhedron with_tight(const HPolyhedron& P, const std::vector<std::size_t>& T) {
  HPolyhedron Q = P;
  for (auto i : T) Q.add_eq(P.ineqs[i].a, P.ineqs[i].b);
  return Q;
}

}  // namespace

bool relint_contains(const HPolyhedron& P, const RatVec& x) {
  if (!contains(P, x)) return false;
  VRep V = dd_vrep(P);
  for (const auto& c : P.ineqs)
    if (dot(c.a, x) == c.b && !implicit_on(c, V)) return false;
  return true;
}

std::vector<Face> faces(const HPolyhedron& P) {
  std::vector<Face> out;
  VRep V0 = dd_vrep(P);
  if (V0.empty()) return out;
  std::map<std::vector<std::size_t>, bool> seen;
  std::vector<std::vector<std::size_t>> stack;
  std::vector<std::size_t> T0 = implicit_ineqs(P, V0);
  seen[T0] = true;
  out.push_back(Face{T0, with_tight(P, T0), dim(V0)});
  stack.push_back(std::move(T0));
  while (!stack.empty()) {
    std::vector<std::size_t> T = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < P.ineqs.size(); ++i) {
      if (std::binary_search(T.begin(), T.end(), i)) continue;
      std::vector<std::size_t> Tc = T;
      Tc.insert(std::lower_bound(Tc.begin(), Tc.end(), i), i);
      VRep V = dd_vrep(with_tight(P, Tc));
      if (V.empty()) continue;
      std::vector<std::size_t> Tcl = implicit_ineqs(P, V);
      if (seen.count(Tcl)) continue;
      seen[Tcl] = true;
      out.push_back(Face{Tcl, with_tight(P, Tcl), dim(V)});
      stack.push_back(std::move(Tcl));
    }
  }
  return out;
}

HPolyhedron normal_cone_at(const HPolyhedron& P, const RatVec& x) {
  if (!contains(P, x)) throw std::logic_error("normal_cone_at: point outside");
  std::vector<RatVec> gens, lin;
  for (const auto& c : P.ineqs)
    if (dot(c.a, x) == c.b) gens.push_back(c.a);
  for (const auto& c : P.eqs) lin.push_back(c.a);
  ConeGen cc = cone_constraints(gens, lin, P.n);
  HPolyhedron N = HPolyhedron::whole_space(P.n);
  for (auto& r : cc.rays) N.add_ineq(std::move(r), Rational(0));
  for (auto& l : cc.lines) N.add_eq(std::move(l), Rational(0));
  return N;
}

HPolyhedron normal_cone(const HPolyhedron& P, const HPolyhedron& F) {
  if (F.n != P.n) throw std::logic_error("normal_cone: dimension mismatch");
  VRep VF = dd_vrep(F);
  if (VF.empty()) throw std::logic_error("normal_cone: F is empty");
  // F is a face of P iff F equals P restricted to the inequalities tight at
  // a relative-interior point of F.
  RatVec p = relint_point(VF);
  if (!contains(P, p)) throw std::logic_error("normal_cone: F is not a face of P");
  std::vector<std::size_t> T;
  for (std::size_t i = 0; i < P.ineqs.size(); ++i)
    if (dot(P.ineqs[i].a, p) == P.ineqs[i].b) T.push_back(i);
  if (!same_set(F, with_tight(P, T)))
    throw std::logic_error("normal_cone: F is not a face of P");
  return normal_cone_at(P, p);
}

HPolyhedron tangent_cone_at(const HPolyhedron& P, const RatVec& x) {
  if (!contains(P, x)) throw std::logic_error("tangent_cone_at: point outside");
  HPolyhedron T = HPolyhedron::whole_space(P.n);
  for (const auto& c : P.ineqs)
    if (dot(c.a, x) == c.b) T.add_ineq(c.a, Rational(0));
  for (const auto& c : P.eqs) T.add_eq(c.a, Rational(0));
  return T;
}

RatVec project(const HPolyhedron& P, const RatVec& x) {
  std::vector<Face> fs = faces(P);
  if (fs.empty()) throw std::logic_error("project: empty polyhedron");
  std::optional<RatVec> best;
  Rational bd(0);
  for (const auto& f : fs) {
    RatVec y;
    const auto& eqs = f.poly.eqs;
    if (eqs.empty()) {
      y = x;
    } else {
      // Least squares onto the affine hull {y : C y = d}: y = x + C^T u
      // with (C C^T) u = d - C x; the system is always consistent.
      std::size_t m = eqs.size();
      RatMat G(m, m);
      RatVec rhs(m, Rational(0));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) G.at(i, j) = dot(eqs[i].a, eqs[j].a);
        rhs[i] = eqs[i].b - dot(eqs[i].a, x);
      }
      auto u = solve_linear(G, rhs);
      if (!u) throw std::logic_error("project: inconsistent normal equations");
      y = x;
      for (std::size_t i = 0; i < m; ++i) y = vec_add(y, vec_scale((*u)[i], eqs[i].a));
    }
    if (!contains(P, y)) continue;
    Rational d2 = norm2_sq(vec_sub(y, x));
    if (!best || d2 < bd) {
      best = y;
      bd = d2;
    }
  }
  if (!best) throw std::logic_error("project: no candidate survived");
  return *best;
}

Rational dist_sq(const HPolyhedron& P, const RatVec& x) {
  return norm2_sq(vec_sub(project(P, x), x));
}

std::vector<LinCon> affine_hull_eqs(const VRep& V) {
  if (V.empty()) throw std::logic_error("affine_hull_eqs: empty set");
  std::vector<RatVec> span;
  for (std::size_t i = 1; i < V.vertices.size(); ++i)
    span.push_back(vec_sub(V.vertices[i], V.vertices[0]));
  span.insert(span.end(), V.rays.begin(), V.rays.end());
  span.insert(span.end(), V.lines.begin(), V.lines.end());
  std::size_t n = V.vertices[0].size();
  std::vector<LinCon> out;
  if (span.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVec a(n, Rational(0));
      a[i] = 1;
      out.push_back(LinCon{a, V.vertices[0][i]});
    }
    return out;
  }
  RatMat M(span.size(), n);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) M.at(i, j) = span[i][j];
  for (auto& c : null_space(M)) {
    Rational b = dot(c, V.vertices[0]);
    out.push_back(LinCon{std::move(c), std::move(b)});
  }
  return out;
}

VRep affine_image(const VRep& V, const std::vector<RatVec>& A, const RatVec& c) {
  auto apply = [&](const RatVec& x) {
    RatVec y = c;
    for (std::size_t i = 0; i < A.size(); ++i) y[i] += dot(A[i], x);
    return y;
  };
  auto apply_lin = [&](const RatVec& x) {
    RatVec y(A.size(), Rational(0));
    for (std::size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x);
    return y;
  };
  VRep out;
  for (const auto& v : V.vertices) out.vertices.push_back(apply(v));
  for (const auto& r : V.rays) {
    RatVec y = apply_lin(r);
    if (!vec_is_zero(y)) out.rays.push_back(std::move(y));
  }
  for (const auto& l : V.lines) {
    RatVec y = apply_lin(l);
    if (!vec_is_zero(y)) out.lines.push_back(std::move(y));
  }
  return out;
}

VRep minkowski_sum(const VRep& V, const VRep& W) {
  VRep out;
  for (const auto& v : V.vertices)
    for (const auto& w : W.vertices) out.vertices.push_back(vec_add(v, w));
  out.rays = V.rays;
  out.rays.insert(out.rays.end(), W.rays.begin(), W.rays.end());
  out.lines = V.lines;
  out.lines.insert(out.lines.end(), W.lines.begin(), W.lines.end());
  return out;
}

VRep canonical_form(const VRep& V) {
  VRep out;
  if (V.empty()) return out;
  std::size_t n = V.vertices[0].size();
  if (!V.lines.empty()) {
    RatMat M(V.lines.size(), n);
    for (std::size_t i = 0; i < V.lines.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = V.lines[i][j];
    rref(M);
    for (std::size_t i = 0; i < M.rows; ++i) {
      RatVec row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = M.at(i, j);
      if (!vec_is_zero(row)) out.lines.push_back(primitive_direction(row));
    }
  }
  // Reduce a generator modulo the line span (orthogonal projection).
  auto reduce = [&](const RatVec& g) -> RatVec {
    if (out.lines.empty()) return g;
    std::size_t m = out.lines.size();
    RatMat G(m, m);
    RatVec rhs(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) G.at(i, j) = dot(out.lines[i], out.lines[j]);
      rhs[i] = dot(out.lines[i], g);
    }
    auto u = solve_linear(G, rhs);
    RatVec y = g;
    for (std::size_t i = 0; i < m; ++i)
      y = vec_sub(y, vec_scale((*u)[i], out.lines[i]));
    return y;
  };
  for (const auto& v : V.vertices) out.vertices.push_back(reduce(v));
  for (const auto& r : V.rays) {
    RatVec y = reduce(r);
    if (!vec_is_zero(y)) out.rays.push_back(primitive_ray(y));
  }
  auto tidy = [](std::vector<RatVec>& xs) {
    std::sort(xs.begin(), xs.end(), rat_vec_less);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  tidy(out.vertices);
  tidy(out.rays);
  tidy(out.lines);
  return out;
}

namespace {
bool vrep_equal(const VRep& A, const VRep& B) {
  return A.vertices == B.vertices && A.rays == B.rays && A.lines == B.lines;
}
}  // namespace

bool vrep_less(const VRep& A, const VRep& B) {
  auto list_less = [](const std::vector<RatVec>& x, const std::vector<RatVec>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        rat_vec_less);
  };
  if (A.vertices != B.vertices) return list_less(A.vertices, B.vertices);
  if (A.rays != B.rays) return list_less(A.rays, B.rays);
  return list_less(A.lines, B.lines);
}

bool same_set(const VRep& A, const VRep& B) {
  if (A.empty() || B.empty()) return A.empty() == B.empty();
  std::size_t n = A.vertices[0].size();
  // Round-trip both through the conversions so redundant generators in
  // hand-built inputs cannot affect the comparison.
  VRep A2 = dd_vrep(dd_hrep(A, n));
  VRep B2 = dd_vrep(dd_hrep(B, n));
  return vrep_equal(canonical_form(A2), canonical_form(B2));
}

bool same_set(const HPolyhedron& P, const HPolyhedron& Q) {
  return vrep_equal(canonical_form(dd_vrep(P)), canonical_form(dd_vrep(Q)));
}

std::string poly_str(const HPolyhedron& P) {
  std::ostringstream os;
  os << "{x in R^" << P.n;
  for (const auto& c : P.ineqs) os << "; " << rat_vec_str(c.a) << "<=" << rat_str(c.b);
  for (const auto& c : P.eqs) os << "; " << rat_vec_str(c.a) << "=" << rat_str(c.b);
  os << "}";
  return os.str();
}

}  // namespace subjetlab
