#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subjetlab/double_description.hpp"
#include "subjetlab/polyhedron.hpp"
#include "subjetlab/region.hpp"
#include "subjetlab/rng.hpp"

using namespace subjetlab;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

HPolyhedron unit_box(std::size_t n) {
  HPolyhedron P = HPolyhedron::whole_space(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = Rational(1);
    P.add_ineq(e, Rational(1));
    e[i] = Rational(-1);
    P.add_ineq(e, Rational(1));
  }
  return P;
}

HPolyhedron orthant(std::size_t n) {
  HPolyhedron P = HPolyhedron::whole_space(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = Rational(-1);
    P.add_ineq(e, Rational(0));
  }
  return P;
}

// Random point of the box [-3,3]^n with denominator up to 4.
RatVec random_point(Rng& rng, std::size_t n) {
  RatVec x(n);
  for (auto& c : x) c = Rational(rng.range(-12, 12), rng.range(1, 4));
  return x;
}

}  // namespace

TEST_CASE("membership and feasibility") {
  HPolyhedron B = unit_box(2);
  CHECK(contains(B, rv({0, 0})));
  CHECK(contains(B, rv({1, 1})));
  CHECK(!contains(B, rv({2, 0})));
  CHECK(feasible(B));
  CHECK(!feasible(HPolyhedron::empty_set(2)));
  CHECK(feasible(HPolyhedron::whole_space(3)));

  HPolyhedron line = HPolyhedron::whole_space(2);
  line.add_eq(rv({1, -1}), Rational(0));
  CHECK(contains(line, rv({2, 2})));
  CHECK(!contains(line, rv({2, 1})));
}

TEST_CASE("dimension of standard sets") {
  CHECK(dim(unit_box(3)) == 3);
  CHECK(dim(HPolyhedron::whole_space(4)) == 4);
  CHECK(dim(HPolyhedron::empty_set(2)) == kDimEmpty);

  HPolyhedron pt = HPolyhedron::whole_space(2);
  pt.add_eq(rv({1, 0}), Rational(1));
  pt.add_eq(rv({0, 1}), Rational(2));
  CHECK(dim(pt) == 0);

  HPolyhedron seg = unit_box(2);
  seg.add_eq(rv({0, 1}), Rational(0));
  CHECK(dim(seg) == 1);

  // Product dimension adds.
  CHECK(dim(product(unit_box(2), seg)) == 3);
  CHECK(dim(product(pt, pt)) == 0);
}

TEST_CASE("intersection and translation") {
  HPolyhedron B = unit_box(2);
  HPolyhedron O = orthant(2);
  HPolyhedron Q = intersect(B, O);
  CHECK(contains(Q, rv({1, 1})));
  CHECK(!contains(Q, rv({-1, 0})));
  CHECK(dim(Q) == 2);

  HPolyhedron T = translate(B, rv({5, 0}));
  CHECK(contains(T, rv({6, 1})));
  CHECK(!contains(T, rv({0, 0})));
}

TEST_CASE("relative interior points and membership") {
  HPolyhedron B = unit_box(2);
  RatVec c = relint_point(B);
  CHECK(relint_contains(B, c));
  CHECK(relint_contains(B, rv({0, 0})));
  CHECK(!relint_contains(B, rv({1, 0})));

  HPolyhedron seg = unit_box(2);
  seg.add_eq(rv({0, 1}), Rational(0));
  RatVec m = relint_point(seg);
  CHECK(relint_contains(seg, m));
  CHECK(!relint_contains(seg, rv({1, 0})));
  CHECK(relint_contains(seg, rv({0, 0})));

  HPolyhedron pt = HPolyhedron::whole_space(1);
  pt.add_eq(rv({1}), Rational(4));
  CHECK(relint_point(pt) == rv({4}));
  CHECK(relint_contains(pt, rv({4})));
}

TEST_CASE("face lattice of a box and a cone") {
  auto F = faces(unit_box(2));
  CHECK(F.size() == 9);  // 4 vertices, 4 edges, the box itself
  int by_dim[3] = {0, 0, 0};
  for (const auto& f : F) {
    REQUIRE(f.dim >= 0);
    REQUIRE(f.dim <= 2);
    ++by_dim[f.dim];
  }
  CHECK(by_dim[0] == 4);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 1);

  auto C = faces(orthant(2));
  CHECK(C.size() == 4);  // vertex, two rays, the cone itself

  HPolyhedron line = HPolyhedron::whole_space(2);
  line.add_eq(rv({1, -1}), Rational(0));
  CHECK(faces(line).size() == 1);
}

TEST_CASE("normal cone polarity against the tangent cone") {
  Rng rng(3);
  HPolyhedron B = unit_box(2);
  std::vector<RatVec> probes = {rv({1, 1}), rv({1, 0}), rv({0, 0}), rv({-1, 1})};
  for (const auto& x : probes) {
    HPolyhedron N = normal_cone_at(B, x);
    HPolyhedron T = tangent_cone_at(B, x);
    VRep NV = dd_vrep(N), TV = dd_vrep(T);
    // Every normal generator pairs nonpositively with every tangent generator.
    auto gens = [](const VRep& V) {
      std::vector<RatVec> g = V.rays;
      for (const auto& l : V.lines) {
        g.push_back(l);
        RatVec neg = vec_scale(Rational(-1), l);
        g.push_back(neg);
      }
      return g;
    };
    for (const auto& nv : gens(NV))
      for (const auto& tv : gens(TV)) CHECK(dot(nv, tv) <= 0);
    // Normal vectors certify first-order optimality of x for the linear
    // functional they define.
    VRep BV = dd_vrep(B);
    for (const auto& nv : gens(NV))
      for (const auto& y : BV.vertices) CHECK(dot(nv, vec_sub(y, x)) <= 0);
  }
  // Interior point: the normal cone collapses to the origin.
  VRep NI = dd_vrep(normal_cone_at(B, rv({0, 0})));
  CHECK(NI.rays.empty());
  CHECK(NI.lines.empty());
  REQUIRE(NI.vertices.size() == 1);
  CHECK(vec_is_zero(NI.vertices[0]));
}

TEST_CASE("normal cone along a face matches the pointwise cone") {
  HPolyhedron B = unit_box(2);
  for (const auto& f : faces(B)) {
    HPolyhedron Nf = normal_cone(B, f.poly);
    RatVec p = relint_point(f.poly);
    CHECK(same_set(Nf, normal_cone_at(B, p)));
  }
}

TEST_CASE("projection is exact and optimal") {
  HPolyhedron B = unit_box(2);
  CHECK(project(B, rv({5, 0})) == rv({1, 0}));
  CHECK(project(B, rv({5, 7})) == rv({1, 1}));
  CHECK(project(B, rv({0, 0})) == rv({0, 0}));
  CHECK(dist_sq(B, rv({5, 7})) == Rational(52));
  CHECK(dist_sq(B, rv({1, 1})) == Rational(0));

  HPolyhedron line = HPolyhedron::whole_space(2);
  line.add_eq(rv({1, -1}), Rational(0));
  RatVec p = project(line, rv({3, 1}));
  CHECK(p == rv({2, 2}));

  // Variational inequality at random queries: x - proj makes an obtuse
  // angle with every feasible direction from proj.
  Rng rng(17);
  HPolyhedron Q = intersect(unit_box(2), orthant(2));
  VRep QV = dd_vrep(Q);
  for (int t = 0; t < 40; ++t) {
    RatVec x = random_point(rng, 2);
    RatVec pr = project(Q, x);
    CHECK(contains(Q, pr));
    RatVec d = vec_sub(x, pr);
    for (const auto& y : QV.vertices) CHECK(dot(d, vec_sub(y, pr)) <= 0);
    CHECK(dist_sq(Q, x) == norm2_sq(d));
  }
}

TEST_CASE("double description round trips") {
  Rng rng(23);
  std::vector<HPolyhedron> cases;
  cases.push_back(unit_box(2));
  cases.push_back(orthant(3));
  cases.push_back(HPolyhedron::whole_space(2));
  {
    HPolyhedron seg = unit_box(2);
    seg.add_eq(rv({0, 1}), Rational(0));
    cases.push_back(seg);
  }
  {
    HPolyhedron wedge = HPolyhedron::whole_space(2);  // unbounded, with vertex off origin
    wedge.add_ineq(rv({-1, 0}), Rational(-1));
    wedge.add_ineq(rv({0, -1}), Rational(2));
    cases.push_back(wedge);
  }
  {
    HPolyhedron strip = HPolyhedron::whole_space(3);  // has a line
    strip.add_ineq(rv({1, 0, 0}), Rational(1));
    strip.add_ineq(rv({-1, 0, 0}), Rational(1));
    cases.push_back(strip);
  }
  for (const auto& P : cases) {
    VRep V = dd_vrep(P);
    HPolyhedron back = dd_hrep(V, P.n);
    CHECK(same_set(P, back));
    // All generators really belong: vertices lie in P, rays and lines recede.
    for (const auto& v : V.vertices) CHECK(contains(P, v));
    for (const auto& r : V.rays)
      for (const auto& v : V.vertices) {
        RatVec far = vec_add(v, vec_scale(Rational(1000), r));
        CHECK(contains(P, far));
      }
    for (const auto& l : V.lines)
      for (const auto& v : V.vertices) {
        CHECK(contains(P, vec_add(v, vec_scale(Rational(1000), l))));
        CHECK(contains(P, vec_add(v, vec_scale(Rational(-1000), l))));
      }
  }
  CHECK(dd_vrep(HPolyhedron::empty_set(2)).empty());
  CHECK(!feasible(dd_hrep(VRep{}, 2)));
}

TEST_CASE("canonical forms decide set equality") {
  HPolyhedron A = unit_box(2);
  HPolyhedron B = HPolyhedron::whole_space(2);
  // Same box with scaled and reordered constraints plus a redundant row.
  B.add_ineq(rv({0, 2}), Rational(2));
  B.add_ineq(rv({-3, 0}), Rational(3));
  B.add_ineq(rv({0, -1}), Rational(1));
  B.add_ineq(rv({5, 0}), Rational(5));
  B.add_ineq(rv({1, 1}), Rational(2));
  CHECK(same_set(A, B));
  CHECK(!same_set(A, orthant(2)));
  CHECK(!vrep_less(canonical_form(dd_vrep(A)), canonical_form(dd_vrep(B))));
  CHECK(!vrep_less(canonical_form(dd_vrep(B)), canonical_form(dd_vrep(A))));
}

TEST_CASE("affine hull equations") {
  HPolyhedron seg = unit_box(2);
  seg.add_eq(rv({0, 1}), Rational(0));
  auto eqs = affine_hull_eqs(dd_vrep(seg));
  REQUIRE(eqs.size() == 1);
  // The hull is the x-axis: the equation vanishes on it.
  CHECK(dot(eqs[0].a, rv({1, 0})) == eqs[0].b * 1);
  CHECK(dot(eqs[0].a, rv({-1, 0})) == eqs[0].b * 1);
  CHECK(affine_hull_eqs(dd_vrep(unit_box(2))).empty());
}

TEST_CASE("generator-side constructions") {
  VRep V = dd_vrep(unit_box(1));
  std::vector<RatVec> A = {rv({1}), rv({1})};  // embed t -> (t, t)
  VRep img = affine_image(V, A, rv({0, 1}));
  HPolyhedron H = dd_hrep(img, 2);
  CHECK(contains(H, rv({1, 2})));
  CHECK(contains(H, rv({-1, 0})));
  CHECK(!contains(H, rv({0, 0})));
  CHECK(dim(img) == 1);

  VRep sum = minkowski_sum(dd_vrep(unit_box(1)), dd_vrep(unit_box(1)));
  HPolyhedron S = dd_hrep(sum, 1);
  CHECK(contains(S, rv({2})));
  CHECK(!contains(S, rv({3})));
}

TEST_CASE("region helpers: refinement and union tests") {
  HPolyhedron B = unit_box(2);
  std::vector<LinCon> cuts = {{rv({1, 0}), Rational(0)}};
  auto cells = refine_against(B, cuts);
  CHECK(cells.size() == 2);
  for (const auto& cell : cells) CHECK(dim(cell.poly) == 2);

  std::vector<HPolyhedron> halves;
  for (auto& cell : cells) halves.push_back(cell.poly);
  CHECK(union_contains(B, halves).contained);
  CHECK(union_member(rv({0, 0}), halves));
  CHECK(!union_member(rv({2, 0}), halves));

  // Remove one half: the inclusion fails with a witness outside the rest.
  std::vector<HPolyhedron> left{halves[0]};
  auto inc = union_contains(B, left);
  CHECK(!inc.contained);
  REQUIRE(inc.witness.has_value());
  CHECK(contains(B, *inc.witness));
  CHECK(!contains(left[0], *inc.witness));
  CHECK(point_in_union_interior(rv({0, 0}), halves));
  CHECK(!point_in_union_interior(rv({1, 0}), halves));
}

TEST_CASE("sign cones of an arrangement") {
  std::vector<RatVec> normals = {rv({1, 0}), rv({0, 1})};
  auto cones = full_dim_sign_cones(normals, 2);
  CHECK(cones.size() == 4);
  for (const auto& c : cones) CHECK(dim(c.poly) == 2);
}
