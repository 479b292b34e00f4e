#include "subjetlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace subjetlab {

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(std::vector<int>(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  Polynomial p(n);
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::affine(const RatVec& a, const Rational& b) {
  Polynomial p(a.size());
  std::vector<int> e(a.size(), 0);
  p.add_term(e, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    e[i] = 1;
    p.add_term(e, a[i]);
    e[i] = 0;
  }
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int k : e) t += k;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::add_term(const std::vector<int>& exp, const Rational& coef) {
  if (exp.size() != n_) throw std::invalid_argument("polynomial term arity mismatch");
  for (int k : exp)
    if (k < 0) throw std::invalid_argument("negative exponent");
  if (coef == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::eval(const RatVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("polynomial eval arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

double Polynomial::eval_double(const std::vector<double>& x) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = rat_double(c);
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] != 0) t *= std::pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::partial(std::size_t i) const {
  Polynomial p(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    std::vector<int> d = e;
    d[i] -= 1;
    p.add_term(d, c * Rational(e[i]));
  }
  return p;
}

std::vector<Polynomial> Polynomial::gradient() const {
  std::vector<Polynomial> g;
  g.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) g.push_back(partial(i));
  return g;
}

RatVec Polynomial::gradient_at(const RatVec& x) const {
  RatVec g(n_, Rational(0));
  for (std::size_t i = 0; i < n_; ++i) g[i] = partial(i).eval(x);
  return g;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(Rational(-1));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial p(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(n_);
      for (std::size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      p.add_term(e, c1 * c2);
    }
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(n_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.add_term(e, k * c);
  return p;
}

Polynomial Polynomial::compose_affine(const std::vector<RatVec>& A, const RatVec& c) const {
  if (A.size() != n_ || c.size() != n_)
    throw std::invalid_argument("compose_affine arity mismatch");
  std::size_t m = A.empty() ? 0 : A[0].size();
  // Images of the variables as polynomials in y.
  std::vector<Polynomial> img;
  img.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) img.push_back(Polynomial::affine(A[i], c[i]));
  Polynomial out(m);
  for (const auto& [e, k] : terms_) {
    Polynomial t = Polynomial::constant(m, k);
    for (std::size_t i = 0; i < n_; ++i)
      for (int j = 0; j < e[i]; ++j) t = t * img[i];
    out = out + t;
  }
  return out;
}

std::pair<RatVec, Rational> Polynomial::affine_parts() const {
  if (!is_affine()) throw std::logic_error("affine_parts on nonlinear polynomial");
  RatVec a(n_, Rational(0));
  Rational b(0);
  for (const auto& [e, c] : terms_) {
    int tot = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      tot += e[i];
      if (e[i] == 1) var = i;
    }
    if (tot == 0)
      b = c;
    else
      a[var] = c;
  }
  return {a, b};
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace subjetlab
