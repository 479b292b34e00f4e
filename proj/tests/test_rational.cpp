#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subjetlab/linalg.hpp"
#include "subjetlab/rational.hpp"
#include "subjetlab/rng.hpp"

using namespace subjetlab;

TEST_CASE("rational parsing and canonical text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(parse_rational("4/-6") == Rational(-2, 3));
  CHECK(rat_str(Rational(1, 2)) == "1/2");
  CHECK(rat_str(Rational(-5)) == "-5");
  CHECK(rat_str(Rational(6, 4)) == "3/2");
  CHECK(rat_str(parse_rational("100000000000000000001/3")) == "100000000000000000001/3");

  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("0/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
  CHECK_THROWS_AS(parse_rational("a/b"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1.5"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), SchemaError);
}

TEST_CASE("csv vectors") {
  RatVec v = parse_rat_csv("1,2/3,-4");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rational(1));
  CHECK(v[1] == Rational(2, 3));
  CHECK(v[2] == Rational(-4));
  CHECK(rat_vec_str(v) == "(1, 2/3, -4)");
  CHECK_THROWS_AS(parse_rat_csv("1,,2"), SchemaError);
  CHECK_THROWS_AS(parse_rat_csv("1,1/0"), SchemaError);
}

TEST_CASE("numerator, denominator, sign, abs") {
  Rational r(-6, 8);
  CHECK(rat_num(r) == BigInt(-3));
  CHECK(rat_den(r) == BigInt(4));
  CHECK(rat_sign(r) == -1);
  CHECK(rat_sign(Rational(0)) == 0);
  CHECK(rat_sign(Rational(2, 7)) == 1);
  CHECK(rat_abs(r) == Rational(3, 4));
  CHECK(rat_double(Rational(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("extended values") {
  ExtVal a = ExtVal::fin(Rational(3, 2));
  ExtVal b = ExtVal::infinity();
  CHECK(a == ExtVal::fin(Rational(3, 2)));
  CHECK(b == ExtVal::infinity());
  CHECK(!(a == b));
  CHECK(ext_val_str(a) == "3/2");
  CHECK(ext_val_str(b) == "+inf");
}

TEST_CASE("vector arithmetic") {
  RatVec x{Rational(1), Rational(-2), Rational(1, 2)};
  RatVec y{Rational(3), Rational(1), Rational(4)};
  CHECK(dot(x, y) == Rational(3));
  CHECK(vec_add(x, y) == RatVec{Rational(4), Rational(-1), Rational(9, 2)});
  CHECK(vec_sub(x, y) == RatVec{Rational(-2), Rational(-3), Rational(-7, 2)});
  CHECK(vec_scale(Rational(2), x) == RatVec{Rational(2), Rational(-4), Rational(1)});
  CHECK(norm2_sq(x) == Rational(21, 4));
  CHECK(vec_is_zero(RatVec{Rational(0), Rational(0)}));
  CHECK(!vec_is_zero(x));
}

TEST_CASE("rref, rank, and linear solving") {
  RatMat A(2, 2);
  A.at(0, 0) = Rational(2);
  A.at(0, 1) = Rational(1);
  A.at(1, 0) = Rational(1);
  A.at(1, 1) = Rational(3);
  auto x = solve_linear(A, RatVec{Rational(5), Rational(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(3));

  RatMat S(2, 2);
  S.at(0, 0) = Rational(1);
  S.at(0, 1) = Rational(2);
  S.at(1, 0) = Rational(2);
  S.at(1, 1) = Rational(4);
  CHECK(rank(S) == 1);
  CHECK(!solve_linear(S, RatVec{Rational(1), Rational(3)}).has_value());
  CHECK(solve_linear(S, RatVec{Rational(1), Rational(2)}).has_value());

  // Random square systems with a planted solution stay exact.
  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 2 + rng.below(3);
    RatMat M(n, n);
    RatVec sol(n);
    for (std::size_t i = 0; i < n; ++i) {
      sol[i] = Rational(rng.range(-9, 9), rng.range(1, 4));
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = Rational(rng.range(-5, 5));
    }
    RatVec b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += M.at(i, j) * sol[j];
    auto got = solve_linear(M, b);
    REQUIRE(got.has_value());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] -= M.at(i, j) * (*got)[j];
    CHECK(vec_is_zero(b));
  }
}

TEST_CASE("null space and rank-nullity") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 1 + rng.below(3), c = 1 + rng.below(4);
    RatMat M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) M.at(i, j) = Rational(rng.range(-3, 3));
    auto N = null_space(M);
    CHECK(rank(M) + N.size() == c);
    for (const auto& v : N) {
      RatVec Mv = mat_vec(M, v);
      CHECK(vec_is_zero(Mv));
    }
  }
}

TEST_CASE("matrix-vector products") {
  RatMat A(2, 3);
  A.at(0, 0) = Rational(1); A.at(0, 1) = Rational(2); A.at(0, 2) = Rational(3);
  A.at(1, 0) = Rational(0); A.at(1, 1) = Rational(-1); A.at(1, 2) = Rational(1);
  RatVec x{Rational(1), Rational(1), Rational(1)};
  CHECK(mat_vec(A, x) == RatVec{Rational(6), Rational(0)});
  RatVec y{Rational(1), Rational(2)};
  CHECK(mat_t_vec(A, y) == RatVec{Rational(1), Rational(0), Rational(5)});
}

TEST_CASE("span rank") {
  std::vector<RatVec> vs{{Rational(1), Rational(0)}, {Rational(2), Rational(0)},
                         {Rational(0), Rational(1)}};
  CHECK(span_rank(vs) == 2);
  CHECK(span_rank({}) == 0);
  CHECK(span_rank({{Rational(0), Rational(0)}}) == 0);
}

TEST_CASE("primitive directions") {
  CHECK(primitive_direction({Rational(2, 3), Rational(-4, 3)}) ==
        RatVec{Rational(1), Rational(-2)});
  CHECK(primitive_direction({Rational(-1, 2), Rational(1)}) ==
        RatVec{Rational(1), Rational(-2)});
  CHECK(primitive_ray({Rational(-1, 2), Rational(1)}) == RatVec{Rational(-1), Rational(2)});
  CHECK(primitive_ray({Rational(4), Rational(6)}) == RatVec{Rational(2), Rational(3)});
  CHECK(primitive_direction({Rational(0), Rational(0)}) == RatVec{Rational(0), Rational(0)});
}

TEST_CASE("lexicographic vector order") {
  RatVec a{Rational(1), Rational(2)};
  RatVec b{Rational(1), Rational(3)};
  CHECK(rat_vec_less(a, b));
  CHECK(!rat_vec_less(b, a));
  CHECK(!rat_vec_less(a, a));
}

TEST_CASE("rng determinism and ranges") {
  Rng r1(42), r2(42);
  for (int i = 0; i < 100; ++i) CHECK(r1.next() == r2.next());
  Rng r3(42);
  for (int i = 0; i < 200; ++i) {
    long v = r3.range(-7, 7);
    CHECK(v >= -7);
    CHECK(v <= 7);
  }
  // Substreams decorrelate from the parent sequence but stay reproducible.
  Rng base(5);
  Rng s1 = base.stream(3);
  Rng s2 = Rng(5).stream(3);
  for (int i = 0; i < 20; ++i) CHECK(s1.next() == s2.next());
}
