#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>

#include "subjetlab/dimension.hpp"
#include "subjetlab/fixture_io.hpp"
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

Fixture load(const std::string& name) {
  return load_fixture(fixtures_dir() + "/" + name + ".json");
}

}  // namespace

TEST_CASE("local dimension on the absolute value graph") {
  auto gl = subjet_graph(load("abs").fn, Kind::limiting);
  REQUIRE(gl.size() == 3);
  CHECK(global_dim(gl) == 1);

  auto at_kink = local_dim_at(gl, rv({0}), RatVec{Rational(1, 2)});
  CHECK(at_kink.member);
  CHECK(at_kink.local_dim == 1);
  CHECK(!at_kink.witnesses.empty());
  CHECK(!at_kink.witness_label.empty());

  auto smooth = local_dim_at(gl, rv({3}), rv({1}));
  CHECK(smooth.member);
  CHECK(smooth.local_dim == 1);

  auto off = local_dim_at(gl, rv({3}), rv({-1}));
  CHECK(!off.member);
  CHECK(off.closure_pieces.empty());
  CHECK(off.local_dim == kDimEmpty);

  CHECK(global_dim({}) == kDimEmpty);
}

TEST_CASE("covering points verify the dimension law on indicator graphs") {
  auto box = subjet_graph(load("indicator_box").fn, Kind::limiting);
  REQUIRE(box.size() == 9);
  CHECK(global_dim(box) == 2);
  auto cov = covering_points(box, 2);
  CHECK(cov.size() == 25);
  CHECK(verify_local_dim(box, cov, 2).empty());

  auto boxf = subjet_graph(load("indicator_box").fn, Kind::frechet);
  auto covf = covering_points(boxf, 2);
  CHECK(!covf.empty());
  CHECK(verify_local_dim(boxf, covf, 2).empty());

  auto orth = subjet_graph(load("indicator_orthant").fn, Kind::limiting);
  REQUIRE(orth.size() == 4);
  CHECK(global_dim(orth) == 2);
  auto covo = covering_points(orth, 2);
  CHECK(covo.size() == 9);
  CHECK(verify_local_dim(orth, covo, 2).empty());
}

TEST_CASE("multiplier pullback graph carries an isolated low-dimensional pair") {
  auto fx = load("pullback_sum");
  REQUIRE(fx.pullback.has_value());
  auto mg = pullback_graph(fx.fn, fx.pullback->A, fx.pullback->c);
  REQUIRE(mg.size() == 3);
  std::vector<int> dims;
  for (const auto& p : mg) dims.push_back(p.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{0, 1, 1});
  CHECK(global_dim(mg) == 1);

  auto cov = covering_points(mg, 1);
  CHECK(cov.size() == 5);
  auto viol = verify_local_dim(mg, cov, 1);
  REQUIRE(viol.size() == 1);
  CHECK(viol[0].x == rv({0}));
  CHECK(viol[0].v == rv({0}));
  CHECK(viol[0].local_dim == 0);

  auto iso = local_dim_at(mg, rv({0}), rv({0}));
  CHECK(iso.member);
  CHECK(iso.local_dim == 0);
  // The ambient-side pairs over the same base point stay one-dimensional.
  CHECK(local_dim_at(mg, rv({0}), rv({2})).local_dim == 1);
  CHECK(local_dim_at(mg, rv({0}), rv({-2})).local_dim == 1);
}

TEST_CASE("composite Clarke graph pinches to dimension two over the origin") {
  auto f = load("clarke3d").fn;
  auto gc = subjet_graph(f, Kind::clarke);
  CHECK(global_dim(gc) == 3);

  RatVec sq{Rational(1, 2), Rational(-1, 2), Rational(0)};
  auto pinch = local_dim_at(gc, rv({0, 0, 0}), sq);
  CHECK(pinch.member);
  CHECK(pinch.local_dim == 2);

  // Square vertices touch the closures of full-dimensional pieces.
  CHECK(local_dim_at(gc, rv({0, 0, 0}), rv({1, 0, 0})).local_dim == 3);

  RatVec qx{Rational(1), Rational(1), Rational(1, 2)};
  auto quad = local_dim_at(gc, qx, rv({0, 0, 1}));
  CHECK(quad.member);
  CHECK(quad.local_dim == 3);

  auto gl = subjet_graph(f, Kind::limiting);
  CHECK(global_dim(gl) == 3);
  auto covl = covering_points(gl, 3);
  CHECK(verify_local_dim(gl, covl, 3).empty());
}

TEST_CASE("disc graph local dimensions at the boundary pair") {
  auto f = load("disc_plus_point").fn;
  auto gl = subjet_graph(f, Kind::limiting);
  CHECK(global_dim(gl) == 2);
  CHECK(local_dim_at(gl, rv({1, 0}), rv({1, 0})).local_dim == 1);
  CHECK(local_dim_at(gl, rv({1, 0}), rv({0, 0})).local_dim == 2);
  RatVec inner{Rational(1, 2), Rational(0)};
  CHECK(local_dim_at(gl, inner, rv({0, 0})).local_dim == 2);
}

TEST_CASE("numeric estimator confirms exact local dimensions on product pieces") {
  auto box = subjet_graph(load("indicator_box").fn, Kind::limiting);
  auto est = estimate_local_dim_numeric(box, rv({1, 1}), rv({1, 1}), 1);
  CHECK(est.supported);
  CHECK(!est.partial);
  CHECK(est.stable);
  CHECK(est.dim == 2);

  auto fx = load("pullback_sum");
  auto mg = pullback_graph(fx.fn, fx.pullback->A, fx.pullback->c);
  auto iso = estimate_local_dim_numeric(mg, rv({0}), rv({0}), 1);
  CHECK(iso.supported);
  CHECK(!iso.partial);
  CHECK(iso.stable);
  CHECK(iso.dim == 0);

  auto gc = subjet_graph(load("clarke3d").fn, Kind::clarke);
  RatVec sq{Rational(1, 2), Rational(-1, 2), Rational(0)};
  auto pinch = estimate_local_dim_numeric(gc, rv({0, 0, 0}), sq, 1);
  CHECK(pinch.supported);
  CHECK(!pinch.partial);
  CHECK(pinch.stable);
  CHECK(pinch.dim == 2);

  // Curved pieces are skipped and flagged rather than silently sampled.
  auto gl = subjet_graph(load("disc_plus_point").fn, Kind::limiting);
  auto part = estimate_local_dim_numeric(gl, rv({1, 0}), rv({0, 0}), 1);
  CHECK(part.supported);
  CHECK(part.partial);
  CHECK(part.dim == 1);  // only the ray piece is sampled, underestimating 2

  auto none = estimate_local_dim_numeric(box, rv({5, 5}), rv({0, 0}), 1);
  CHECK(!none.supported);
  CHECK(none.dim == kDimEmpty);
}
