#pragma once

/// @file dimension.hpp
/// @brief Exact local and global dimension of piece unions, plus a numeric
///        cross-check estimator driven by sampling and PCA rank.

#include <cstdint>
#include <string>
#include <vector>

#include "subjetlab/subdiff.hpp"

namespace subjetlab {

// Local dimension of a finite union of equidimensional pieces at a point:
// the maximum piece dimension over the pieces whose closure contains the
// point. Every piece carries a constant local dimension at each closure
// point, so the maximum is exact, not an estimate.
struct LocalDimReport {
  bool member = false;  // the point lies in the union itself
  int local_dim = kDimEmpty;
  std::vector<std::size_t> closure_pieces;  // all pieces whose closure holds the point
  std::vector<std::size_t> witnesses;       // closure pieces attaining local_dim
  std::string witness_label;                // label of the first witnessing piece
};

LocalDimReport local_dim_at(const std::vector<GraphPiece>& pieces, const RatVec& x,
                            const RatVec& v);

// Dimension of the whole union: max over piece dimensions (kDimEmpty if no
// pieces).
int global_dim(const std::vector<GraphPiece>& pieces);

// Finite point set meeting every face of every product piece and every
// pairwise closure intersection, so a property constant on relative
// interiors of the induced complex is verified everywhere by checking these
// points. Only product pieces contribute; pieces given by membership
// predicates alone need hand-chosen points.
std::vector<std::pair<RatVec, RatVec>> covering_points(const std::vector<GraphPiece>& pieces,
                                                       std::size_t n);

struct DimViolation {
  RatVec x;
  RatVec v;
  int local_dim = kDimEmpty;
};

// Checks local_dim == expected at every supplied point of the union;
// returns the points where it fails.
std::vector<DimViolation> verify_local_dim(const std::vector<GraphPiece>& pieces,
                                           const std::vector<std::pair<RatVec, RatVec>>& points,
                                           int expected);

// Numeric cross-check of the exact local dimension. Samples each product
// piece whose closure holds the point by exact projection of random
// perturbations at >= 4 radii (factor 2 apart, >= 200 samples per piece),
// runs PCA per piece with a 1e-6 relative eigenvalue cutoff, and reports
// the max rank when it is stable across radii.
struct NumericDimEstimate {
  bool supported = false;  // at least one product piece was sampled
  bool partial = false;    // non-product pieces also hold the point but were skipped
  bool stable = false;     // per-piece PCA ranks agree across all radii
  int dim = kDimEmpty;
};

NumericDimEstimate estimate_local_dim_numeric(const std::vector<GraphPiece>& pieces,
                                              const RatVec& x, const RatVec& v,
                                              std::uint64_t seed);

}  // namespace subjetlab
