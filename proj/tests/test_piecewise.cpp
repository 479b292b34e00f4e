#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "subjetlab/fixture_io.hpp"
#include "subjetlab/gen.hpp"
#include "subjetlab/piecewise.hpp"
#include "subjetlab/rng.hpp"
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

}  // namespace

TEST_CASE("evaluation of the named affine fixtures") {
  auto abs_f = load("abs");
  CHECK(evaluate(abs_f, rv({3})) == ExtVal::fin(Rational(3)));
  CHECK(evaluate(abs_f, rv({-3})) == ExtVal::fin(Rational(3)));
  CHECK(evaluate(abs_f, rv({0})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(abs_f, RatVec{Rational(-1, 2)}) == ExtVal::fin(Rational(1, 2)));

  auto box = load("indicator_box");
  CHECK(evaluate(box, rv({0, 0})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(box, rv({1, 1})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(box, rv({2, 0})) == ExtVal::infinity());

  auto kink = load("min_kink");
  CHECK(evaluate(kink, rv({0})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(kink, rv({1})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(kink, RatVec{Rational(1, 2)}) == ExtVal::fin(Rational(1, 2)));
  CHECK(evaluate(kink, rv({5})) == ExtVal::fin(Rational(-4)));
}

TEST_CASE("cell membership honors strict sign conditions") {
  auto disc = load("disc_plus_point");
  REQUIRE(disc.cells.size() == 2);
  const Cell& open_disc = disc.cells[0];
  CHECK(cell_contains(open_disc, rv({0, 0})));
  RatVec half{Rational(1, 2), Rational(0)};
  CHECK(cell_contains(open_disc, half));
  RatVec boundary{Rational(3, 5), Rational(4, 5)};
  CHECK(!cell_contains(open_disc, boundary));
  CHECK(cell_closure_contains(open_disc, boundary));
  CHECK(!cell_contains(open_disc, rv({2, 0})));
  CHECK(!cell_closure_contains(open_disc, rv({2, 0})));

  const Cell& kept_point = disc.cells[1];
  CHECK(cell_contains(kept_point, rv({1, 0})));
  CHECK(!cell_contains(kept_point, rv({0, 0})));

  CHECK(evaluate(disc, rv({0, 0})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(disc, rv({1, 0})) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(disc, boundary) == ExtVal::infinity());
}

TEST_CASE("gradients on cells") {
  auto abs_f = load("abs");
  bool saw_pos = false, saw_neg = false;
  for (const auto& c : abs_f.cells) {
    RatVec g = gradient_on_cell(c, rv({0}));
    if (g == rv({1})) saw_pos = true;
    if (g == RatVec{Rational(-1)}) saw_neg = true;
  }
  CHECK(saw_pos);
  CHECK(saw_neg);

  auto c3 = load("clarke3d");
  // Quadratic branch: the gradient varies with the point.
  bool saw_quad = false;
  for (const auto& c : c3.cells) {
    RatVec p{Rational(1), Rational(1), Rational(1, 2)};
    if (!cell_contains(c, p)) continue;
    RatVec g = gradient_on_cell(c, p);
    if (g == RatVec{Rational(0), Rational(0), Rational(1)}) saw_quad = true;
  }
  CHECK(saw_quad);
}

TEST_CASE("validation of the named corpus") {
  for (const char* name : {"abs", "neg_abs", "min_kink", "indicator_box",
                           "indicator_orthant", "pullback_sum", "clarke3d"}) {
    auto f = load(name);
    auto rep = validate(f);
    INFO(name);
    CHECK(rep.ok());
    CHECK(rep.issues.empty());
  }
  auto disc = validate(load("disc_plus_point"));
  CHECK(disc.proper);
  CHECK(!disc.lsc);
  REQUIRE(disc.issues.size() == 1);
  CHECK(disc.issues[0].check == "lsc");
  CHECK(disc.issues[0].witness == RatVec{Rational(3, 5), Rational(4, 5)});
}

TEST_CASE("validation rejects a continuity break") {
  auto f = load("abs");
  // Shift one branch value: the two cells now disagree along their shared face.
  REQUIRE(!f.cells.empty());
  f.cells[0].poly = f.cells[0].poly + Polynomial::constant(f.n, Rational(1, 2));
  auto rep = validate(f);
  CHECK(!rep.ok());
  CHECK(!rep.issues.empty());
}

TEST_CASE("validation rejects an improper function") {
  PiecewiseFunction f;
  f.name = "nowhere";
  f.n = 1;
  f.tier = Tier::affine;
  auto rep = validate(f);
  CHECK(!rep.proper);
  CHECK(!rep.ok());
}

TEST_CASE("refinement is idempotent and preserves values") {
  Rng rng(31);
  for (std::uint64_t seed : {1, 4, 9}) {
    auto f = generate_fixture(seed, 2, 2, seed % 2 == 0).fn;
    auto rf = refine(f);
    CHECK(refine(rf).cells.size() == rf.cells.size());
    CHECK(validate(rf).ok());
    for (int t = 0; t < 40; ++t) {
      RatVec x{Rational(rng.range(-300, 300), 100), Rational(rng.range(-300, 300), 100)};
      CHECK(evaluate(f, x) == evaluate(rf, x));
    }
  }
}

TEST_CASE("min builder covers every sampled point") {
  std::vector<std::pair<RatVec, Rational>> affs = {
      {rv({1, 0}), Rational(0)}, {rv({0, 1}), Rational(1)}, {rv({-1, -1}), Rational(2)}};
  PiecewiseFunction f = min_of_affine(affs);
  CHECK(f.n == 2);
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    RatVec x{Rational(rng.range(-40, 40), 8), Rational(rng.range(-40, 40), 8)};
    Rational want = dot(affs[0].first, x) + affs[0].second;
    for (const auto& [a, b] : affs) {
      Rational v = dot(a, x) + b;
      if (v < want) want = v;
    }
    CHECK(evaluate(f, x) == ExtVal::fin(want));
  }
}

TEST_CASE("indicator, negate, sum, and precompose builders") {
  HPolyhedron seg = HPolyhedron::whole_space(1);
  seg.add_ineq(rv({1}), Rational(1));
  seg.add_ineq(RatVec{Rational(-1)}, Rational(0));
  PiecewiseFunction ind = indicator(seg);
  CHECK(evaluate(ind, RatVec{Rational(1, 2)}) == ExtVal::fin(Rational(0)));
  CHECK(evaluate(ind, rv({2})) == ExtVal::infinity());

  auto abs_f = load("abs");
  PiecewiseFunction neg = negate(abs_f);
  CHECK(evaluate(neg, rv({3})) == ExtVal::fin(Rational(-3)));

  PiecewiseFunction s = sum(abs_f, ind);
  CHECK(evaluate(s, RatVec{Rational(1, 2)}) == ExtVal::fin(Rational(1, 2)));
  CHECK(evaluate(s, rv({-1})) == ExtVal::infinity());
  CHECK(validate(s).ok());

  // g(Ax + c) with g = |.| on R, A = [2], c = (1): x -> |2x + 1|.
  PiecewiseFunction pre = affine_precompose(abs_f, {rv({2})}, rv({1}));
  CHECK(evaluate(pre, rv({0})) == ExtVal::fin(Rational(1)));
  CHECK(evaluate(pre, rv({-1})) == ExtVal::fin(Rational(1)));
  RatVec kink{Rational(-1, 2)};
  CHECK(evaluate(pre, kink) == ExtVal::fin(Rational(0)));
  CHECK(validate(pre).ok());
}

TEST_CASE("local Lipschitz locus") {
  auto box = load("indicator_box");
  RatVec mid{Rational(1, 2), Rational(1, 2)};
  CHECK(locally_lipschitz_at(box, mid));
  CHECK(!locally_lipschitz_at(box, rv({1, 0})));
  CHECK(!locally_lipschitz_at(box, rv({2, 0})));

  auto abs_f = load("abs");
  CHECK(locally_lipschitz_at(abs_f, rv({0})));
  CHECK(locally_lipschitz_at(abs_f, rv({5})));
}

TEST_CASE("inconsistent overlapping cells are reported, not silently merged") {
  PiecewiseFunction f;
  f.n = 1;
  f.tier = Tier::affine;
  f.name = "clash";
  Cell a, b;
  a.region = HPolyhedron::whole_space(1);
  a.poly = Polynomial::affine(rv({1}), Rational(0));
  b.region = HPolyhedron::whole_space(1);
  b.poly = Polynomial::affine(rv({2}), Rational(0));
  f.cells = {a, b};
  CHECK_THROWS(evaluate(f, rv({1})));
  CHECK(!validate(f).interiors_disjoint);
}
