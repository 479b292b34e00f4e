#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "subjetlab/double_description.hpp"
#include "subjetlab/fixture_io.hpp"
#include "subjetlab/region.hpp"
#include "subjetlab/special.hpp"
#include "subjetlab/subdiff.hpp"

using namespace subjetlab;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::string fixtures_dir() {
  const char* env = std::getenv("SUBJET_CORPUS");
  return env ? env : "fixtures";
}

PiecewiseFunction load(const std::string& name) {
  return load_fixture(fixtures_dir() + "/" + name + ".json").fn;
}

bool result_equals(const SubdiffResult& r, const std::vector<HPolyhedron>& want) {
  if (!r.defined) return false;
  for (const auto& P : r.pieces)
    if (!union_contains(P, want).contained) return false;
  for (const auto& Q : want)
    if (!union_contains(Q, r.pieces).contained) return false;
  return true;
}

HPolyhedron hull_of(const std::vector<RatVec>& pts) {
  VRep V;
  V.vertices = pts;
  return dd_hrep(V, pts.at(0).size());
}

}  // namespace

TEST_CASE("catalog dispatch") {
  CHECK(has_special(load("clarke3d")));
  CHECK(has_special(load("disc_plus_point")));
  CHECK(!has_special(load("abs")));
}

TEST_CASE("composite fixture evaluates as a pointwise minimum") {
  auto f = load("clarke3d");
  CHECK(evaluate(f, rv({2, 3, 1})) == ExtVal::fin(Rational(1)));   // z^2 wins
  CHECK(evaluate(f, rv({1, 3, 2})) == ExtVal::fin(Rational(1)));   // x wins
  CHECK(evaluate(f, rv({-2, -3, -1})) == ExtVal::fin(Rational(1)));  // mirrored
  CHECK(evaluate(f, rv({1, -1, 5})) == ExtVal::fin(Rational(0)));  // mixed orthant
  CHECK(evaluate(f, rv({0, 0, 0})) == ExtVal::fin(Rational(0)));
  RatVec p{Rational(1), Rational(1), Rational(1, 2)};
  CHECK(evaluate(f, p) == ExtVal::fin(Rational(1, 4)));
  CHECK(validate(f).ok());
  CHECK(locally_lipschitz_at(f, rv({0, 0, 0})));
}

TEST_CASE("composite subdifferentials at the origin") {
  auto f = load("clarke3d");
  CHECK(result_equals(subdifferential(f, Kind::frechet, rv({0, 0, 0})),
                      {hull_of({rv({0, 0, 0})})}));
  // Limits along the two coordinate hinge planes: two crossing segments.
  CHECK(result_equals(subdifferential(f, Kind::limiting, rv({0, 0, 0})),
                      {hull_of({rv({1, 0, 0}), RatVec{Rational(-1), Rational(0), Rational(0)}}),
                       hull_of({rv({0, 1, 0}), RatVec{Rational(0), Rational(-1), Rational(0)}})}));
  // Convexification fills the square spanned by the four unit subgradients.
  auto cla = subdifferential(f, Kind::clarke, rv({0, 0, 0}));
  REQUIRE(cla.defined);
  REQUIRE(cla.pieces.size() == 1);
  VRep V = canonical_form(dd_vrep(cla.pieces[0]));
  CHECK(V.vertices.size() == 4);
  CHECK(V.rays.empty());
  CHECK(V.lines.empty());
  CHECK(result_equals(cla, {hull_of({rv({1, 0, 0}), RatVec{Rational(-1), Rational(0), Rational(0)},
                                     rv({0, 1, 0}), RatVec{Rational(0), Rational(-1), Rational(0)}})}));
}

TEST_CASE("composite subdifferentials away from the origin") {
  auto f = load("clarke3d");
  CHECK(result_equals(subdifferential(f, Kind::clarke, rv({2, 3, 1})),
                      {hull_of({rv({0, 0, 2})})}));
  CHECK(result_equals(subdifferential(f, Kind::frechet, rv({1, 3, 2})),
                      {hull_of({rv({1, 0, 0})})}));
  CHECK(result_equals(subdifferential(f, Kind::frechet, rv({-2, -3, -1})),
                      {hull_of({RatVec{Rational(0), Rational(0), Rational(-2)}})}));
  CHECK(result_equals(subdifferential(f, Kind::frechet, rv({1, -1, 0})),
                      {hull_of({rv({0, 0, 0})})}));
  // Triple tie: three isolated gradients, convexified by the Clarke hull.
  CHECK(result_equals(subdifferential(f, Kind::limiting, rv({1, 1, 1})),
                      {hull_of({rv({1, 0, 0})}), hull_of({rv({0, 1, 0})}),
                       hull_of({rv({0, 0, 2})})}));
  CHECK(result_equals(subdifferential(f, Kind::clarke, rv({1, 1, 1})),
                      {hull_of({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 2})})}));
}

TEST_CASE("composite graphs and the Clarke pinch") {
  auto f = load("clarke3d");
  auto gf = subjet_graph(f, Kind::frechet);
  auto gl = subjet_graph(f, Kind::limiting);
  auto gc = subjet_graph(f, Kind::clarke);
  CHECK(gf.size() == 16);
  CHECK(gl.size() == 16);
  CHECK(gc.size() == 27);
  for (const auto& p : gl) CHECK(p.dim == 3);
  for (const auto& p : gf) CHECK(p.dim == 3);
  int dim2 = 0;
  for (const auto& p : gc) {
    if (p.dim == 2)
      ++dim2;
    else
      CHECK(p.dim == 3);
  }
  CHECK(dim2 == 1);  // the square over the origin

  RatVec half{Rational(1, 2), Rational(-1, 2), Rational(0)};
  CHECK(graph_member(gc, rv({0, 0, 0}), half));
  CHECK(!graph_member(gl, rv({0, 0, 0}), half));
  CHECK(graph_member(gl, rv({0, 0, 0}), rv({1, 0, 0})));
  CHECK(graph_member(gl, rv({0, 0, 0}), RatVec{Rational(1, 2), Rational(0), Rational(0)}));

  // Quadratic branch: the fiber follows the gradient (0, 0, 2z).
  RatVec qx{Rational(1), Rational(1), Rational(1, 2)};
  CHECK(graph_member(gl, qx, rv({0, 0, 1})));
  CHECK(!graph_member(gl, qx, rv({0, 0, 2})));
  CHECK(graph_member(gc, qx, rv({0, 0, 1})));
  CHECK(graph_member(gf, qx, rv({0, 0, 1})));

  // Hinge face x = 0 inside the first orthant: fiber conv{0, e1}.
  RatVec hx{Rational(0), Rational(2), Rational(1)};
  CHECK(graph_member(gl, hx, RatVec{Rational(1, 2), Rational(0), Rational(0)}));
  CHECK(graph_member(gl, hx, rv({1, 0, 0})));
  CHECK(graph_member(gl, hx, rv({0, 0, 0})));
  CHECK(!graph_member(gl, hx, RatVec{Rational(0), Rational(1, 2), Rational(0)}));
}

TEST_CASE("disc fixture: validation fails lsc with an exact witness") {
  auto f = load("disc_plus_point");
  auto rep = validate(f);
  CHECK(rep.proper);
  CHECK(!rep.lsc);
  CHECK(!rep.ok());
  REQUIRE(rep.issues.size() == 1);
  CHECK(rep.issues[0].check == "lsc");
  CHECK(rep.issues[0].witness == RatVec{Rational(3, 5), Rational(4, 5)});
}

TEST_CASE("disc fixture: subdifferentials and the ray at the kept point") {
  auto f = load("disc_plus_point");
  CHECK(result_equals(subdifferential(f, Kind::frechet, rv({0, 0})),
                      {hull_of({rv({0, 0})})}));

  HPolyhedron ray = HPolyhedron::whole_space(2);  // t*(1,0), t >= 0
  ray.add_eq(rv({0, 1}), Rational(0));
  ray.add_ineq(RatVec{Rational(-1), Rational(0)}, Rational(0));
  CHECK(result_equals(subdifferential(f, Kind::frechet, rv({1, 0})), {ray}));
  CHECK(result_equals(subdifferential(f, Kind::limiting, rv({1, 0})), {ray}));

  auto cla = subdifferential(f, Kind::clarke, rv({1, 0}));
  CHECK(!cla.defined);
  CHECK(!locally_lipschitz_at(f, rv({1, 0})));
  RatVec inner{Rational(1, 2), Rational(0)};
  CHECK(locally_lipschitz_at(f, inner));

  auto outside = subdifferential(f, Kind::limiting, RatVec{Rational(3, 5), Rational(4, 5)});
  CHECK(outside.defined);
  CHECK(outside.pieces.empty());
}

TEST_CASE("disc fixture: graph pieces and the curved membership callbacks") {
  auto f = load("disc_plus_point");
  auto gl = subjet_graph(f, Kind::limiting);
  REQUIRE(gl.size() == 2);
  int dims[3] = {0, 0, 0};
  for (const auto& p : gl) ++dims[p.dim];
  CHECK(dims[1] == 1);
  CHECK(dims[2] == 1);

  RatVec inner{Rational(1, 2), Rational(0)};
  CHECK(graph_member(gl, inner, rv({0, 0})));
  CHECK(!graph_member(gl, inner, rv({1, 0})));
  CHECK(graph_member(gl, rv({1, 0}), rv({7, 0})));
  CHECK(!graph_member(gl, rv({1, 0}), rv({-1, 0})));
  RatVec circ{Rational(3, 5), Rational(4, 5)};
  CHECK(!graph_member(gl, circ, rv({0, 0})));

  auto gc = subjet_graph(f, Kind::clarke);
  REQUIRE(gc.size() == 1);
  CHECK(gc[0].dim == 2);
  CHECK(graph_member(gc, inner, rv({0, 0})));
  CHECK(!graph_member(gc, rv({1, 0}), rv({0, 0})));  // not Lipschitz there

  auto gf = subjet_graph(f, Kind::frechet);
  CHECK(gf.size() == 2);
}
