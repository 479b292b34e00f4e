#pragma once

#include <optional>
#include <vector>

#include "subjetlab/rational.hpp"

namespace subjetlab {

// Dense exact matrix, row major.
struct RatMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMat() = default;
  RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}
  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Rational dot(const RatVec& x, const RatVec& y);
RatVec vec_add(const RatVec& x, const RatVec& y);
RatVec vec_sub(const RatVec& x, const RatVec& y);
RatVec vec_scale(const Rational& c, const RatVec& x);
bool vec_is_zero(const RatVec& x);
Rational norm2_sq(const RatVec& x);

// A*x for row-major A with x.size()==A.cols.
RatVec mat_vec(const RatMat& A, const RatVec& x);
// A^T*x with x.size()==A.rows.
RatVec mat_t_vec(const RatMat& A, const RatVec& x);

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMat& M);

std::size_t rank(RatMat M);

// Rank of the span of a list of vectors.
std::size_t span_rank(const std::vector<RatVec>& vecs);

// Basis of the null space of A (vectors with A*v = 0).
std::vector<RatVec> null_space(const RatMat& A);

// One solution of A*x = b, empty if inconsistent.
std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b);

// Scales a rational vector to a canonical primitive integer direction:
// entries coprime integers, first nonzero entry positive. Zero stays zero.
RatVec primitive_direction(const RatVec& v);

// Same reduction by a positive scalar only; orientation is preserved.
RatVec primitive_ray(const RatVec& v);

// Lexicographic order on equal-length rational vectors.
bool rat_vec_less(const RatVec& x, const RatVec& y);

}  // namespace subjetlab
