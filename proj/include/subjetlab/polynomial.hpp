#pragma once

#include <map>
#include <string>
#include <vector>

#include "subjetlab/linalg.hpp"
#include "subjetlab/rational.hpp"

namespace subjetlab {

// Sparse multivariate polynomial over Q with nonnegative integer exponents.
// Terms are kept in a sorted map keyed by exponent vector, so equal
// polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}
  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  // a·x + b as a polynomial.
  static Polynomial affine(const RatVec& a, const Rational& b);

  std::size_t ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_affine() const { return degree() <= 1; }

  void add_term(const std::vector<int>& exp, const Rational& coef);

  Rational eval(const RatVec& x) const;
  double eval_double(const std::vector<double>& x) const;

  Polynomial partial(std::size_t i) const;
  std::vector<Polynomial> gradient() const;
  RatVec gradient_at(const RatVec& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;

  // Substitution x_i := sum_j A[i][j] y_j + c[i]; result lives in y space
  // with dimension A[i].size().
  Polynomial compose_affine(const std::vector<RatVec>& A, const RatVec& c) const;

  // For affine polynomials: (linear coefficients, constant).
  std::pair<RatVec, Rational> affine_parts() const;

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

}  // namespace subjetlab
