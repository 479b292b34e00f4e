#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <stdexcept>

#include "subjetlab/fixture_io.hpp"
#include "subjetlab/oracle.hpp"
#include "subjetlab/region.hpp"
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

bool unions_equal(const std::vector<HPolyhedron>& a, const std::vector<HPolyhedron>& b) {
  for (const auto& P : a)
    if (!union_contains(P, b).contained) return false;
  for (const auto& Q : b)
    if (!union_contains(Q, a).contained) return false;
  return true;
}

// Engine and oracle must agree as sets at x, for every kind that applies.
void check_agreement(const PiecewiseFunction& f, const RatVec& x) {
  if (!evaluate(f, x).finite) return;
  CAPTURE(rat_vec_str(x));

  auto reg = subdifferential(f, Kind::frechet, x);
  REQUIRE(reg.defined);
  CHECK(unions_equal({frechet_oracle(f, x)}, reg.pieces));

  auto lim = subdifferential(f, Kind::limiting, x);
  REQUIRE(lim.defined);
  CHECK(unions_equal(limiting_oracle(f, x), lim.pieces));

  if (locally_lipschitz_at(f, x)) {
    auto cla = subdifferential(f, Kind::clarke, x);
    REQUIRE(cla.defined);
    CHECK(unions_equal({clarke_oracle(f, x)}, cla.pieces));
  }
}

}  // namespace

TEST_CASE("directional derivatives stabilize to exact values") {
  auto abs = load("abs");
  CHECK(directional_derivative(abs, rv({0}), rv({1})) == ExtVal::fin(Rational(1)));
  CHECK(directional_derivative(abs, rv({0}), rv({-1})) == ExtVal::fin(Rational(1)));
  CHECK(directional_derivative(abs, rv({-2}), rv({1})) == ExtVal::fin(Rational(-1)));
  CHECK(directional_derivative(abs, rv({0}), rv({2})) == ExtVal::fin(Rational(2)));

  auto box = load("indicator_box");
  CHECK(directional_derivative(box, rv({1, 1}), rv({1, 0})) == ExtVal::infinity());
  CHECK(directional_derivative(box, rv({1, 1}), RatVec{Rational(-1), Rational(-1)}) ==
        ExtVal::fin(Rational(0)));
  CHECK(directional_derivative(box, rv({0, 0}), rv({1, 1})) == ExtVal::fin(Rational(0)));

  CHECK_THROWS_AS(directional_derivative(box, rv({5, 5}), rv({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(directional_derivative(load("clarke3d"), rv({0, 0, 0}), rv({1, 0, 0})),
                  std::runtime_error);
}

TEST_CASE("regular oracle is exact, including unbounded normal cones") {
  auto box = load("indicator_box");
  HPolyhedron corner = HPolyhedron::whole_space(2);
  corner.add_ineq(RatVec{Rational(-1), Rational(0)}, Rational(0));
  corner.add_ineq(RatVec{Rational(0), Rational(-1)}, Rational(0));
  CHECK(same_set(frechet_oracle(box, rv({1, 1})), corner));

  auto kink = load("min_kink");
  auto none = subdifferential(kink, Kind::frechet, RatVec{Rational(1, 2)});
  CHECK(none.pieces.empty());
  CHECK(!feasible(frechet_oracle(kink, RatVec{Rational(1, 2)})));
}

TEST_CASE("limiting and convexified oracles match the engine at kinks") {
  auto neg = load("neg_abs");
  auto pieces = limiting_oracle(neg, rv({0}));
  auto lim = subdifferential(neg, Kind::limiting, rv({0}));
  CHECK(unions_equal(pieces, lim.pieces));
  REQUIRE(pieces.size() == 2);

  HPolyhedron seg = HPolyhedron::whole_space(1);
  seg.add_ineq(rv({1}), Rational(1));
  seg.add_ineq(RatVec{Rational(-1)}, Rational(1));
  CHECK(same_set(clarke_oracle(load("abs"), rv({0})), seg));
  CHECK(same_set(clarke_oracle(neg, rv({0})), seg));
}

TEST_CASE("engine agreement sweep on one-dimensional fixtures") {
  for (const char* name : {"abs", "neg_abs", "min_kink"}) {
    auto f = load(name);
    for (long num = -8; num <= 8; ++num) check_agreement(f, RatVec{Rational(num, 4)});
  }
}

TEST_CASE("engine agreement sweep on two-dimensional fixtures") {
  for (const char* name : {"indicator_box", "indicator_orthant", "pullback_sum"}) {
    auto f = load(name);
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) check_agreement(f, RatVec{Rational(a, 2), Rational(b, 2)});
  }
}
