#include "subjetlab/linalg.hpp"

#include <stdexcept>

namespace subjetlab {

Rational dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::logic_error("dot: size mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RatVec vec_add(const RatVec& x, const RatVec& y) {
  RatVec z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

RatVec vec_sub(const RatVec& x, const RatVec& y) {
  RatVec z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

RatVec vec_scale(const Rational& c, const RatVec& x) {
  RatVec z(x);
  for (auto& e : z) e *= c;
  return z;
}

bool vec_is_zero(const RatVec& x) {
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

Rational norm2_sq(const RatVec& x) { return dot(x, x); }

RatVec mat_vec(const RatMat& A, const RatVec& x) {
  if (x.size() != A.cols) throw std::logic_error("mat_vec: size mismatch");
  RatVec y(A.rows, Rational(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
  return y;
}

RatVec mat_t_vec(const RatMat& A, const RatVec& x) {
  if (x.size() != A.rows) throw std::logic_error("mat_t_vec: size mismatch");
  RatVec y(A.cols, Rational(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) y[j] += A.at(i, j) * x[i];
  return y;
}

std::vector<std::size_t> rref(RatMat& M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
    std::size_t p = r;
    while (p < M.rows && M.at(p, c) == 0) ++p;
    if (p == M.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
    Rational inv = Rational(1) / M.at(r, c);
    for (std::size_t j = 0; j < M.cols; ++j) M.at(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      Rational f = M.at(i, c);
      for (std::size_t j = 0; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat M) { return rref(M).size(); }

std::size_t span_rank(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return 0;
  RatMat M(vecs.size(), vecs[0].size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < vecs[i].size(); ++j) M.at(i, j) = vecs[i][j];
  return rank(std::move(M));
}

std::vector<RatVec> null_space(const RatMat& A) {
  RatMat M = A;
  std::vector<std::size_t> piv = rref(M);
  std::vector<bool> is_pivot(M.cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < M.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(M.cols, Rational(0));
    v[f] = 1;
    for (std::size_t pr = 0; pr < piv.size(); ++pr) v[piv[pr]] = -M.at(pr, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b) {
  RatMat M(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  std::vector<std::size_t> piv = rref(M);
  for (auto c : piv)
    if (c == A.cols) return std::nullopt;  // pivot in augmented column
  RatVec x(A.cols, Rational(0));
  for (std::size_t pr = 0; pr < piv.size(); ++pr) x[piv[pr]] = M.at(pr, A.cols);
  return x;
}

RatVec primitive_direction(const RatVec& v) {
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& e : v) {
    den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(e));
  }
  RatVec scaled = vec_scale(Rational(den_lcm), v);
  for (const auto& e : scaled) num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(e));
  if (num_gcd == 0) return RatVec(v.size(), Rational(0));
  int lead = 0;
  for (const auto& e : scaled) {
    if (e != 0) {
      lead = rat_sign(e);
      break;
    }
  }
  Rational f = Rational(lead, 1) / Rational(num_gcd);
  return vec_scale(f, scaled);
}

RatVec primitive_ray(const RatVec& v) {
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& e : v) den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(e));
  RatVec scaled = vec_scale(Rational(den_lcm), v);
  for (const auto& e : scaled) num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(e));
  if (num_gcd == 0) return RatVec(v.size(), Rational(0));
  return vec_scale(Rational(1) / Rational(num_gcd), scaled);
}

bool rat_vec_less(const RatVec& x, const RatVec& y) {
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return x.size() < y.size();
}

}  // namespace subjetlab
