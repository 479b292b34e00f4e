#pragma once

/// @file minty.hpp
/// @brief Certification that the affine projection (x, v) -> Ax + v is
///        finite-to-one on a subdifferential graph and a local
///        homeomorphism around a dense subset, for generic matrices A.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "subjetlab/rng.hpp"
#include "subjetlab/subdiff.hpp"

namespace subjetlab {

struct PieceInjectivity {
  std::size_t piece = 0;
  int piece_dim = kDimEmpty;
  bool injective = false;  // (x,v) -> Ax+v is injective on this piece
};

struct MintyCertificate {
  bool finite_to_one = false;     // every piece injective, so preimages are finite
  std::size_t preimage_bound = 0; // each injective piece contributes at most one point
  std::vector<PieceInjectivity> pieces;
};

struct DenseDiffeoReport {
  bool dense = false;
  std::vector<std::size_t> injective_pieces;
  std::optional<std::size_t> failing_piece;  // piece not covered by the closure
  std::optional<RatVec> failure_witness;     // point of that piece outside the closure
};

// Analyzer over a graph of product pieces. The closure of each piece's
// relative interior minus the other pieces' closures decomposes into closed
// atoms that do not depend on A; per-matrix queries then reduce to an
// injectivity bitmask over pieces, and density verdicts are cached per
// bitmask so repeated random trials stay cheap.
class MintyAnalyzer {
 public:
  // Requires every piece to carry product factors; throws otherwise.
  MintyAnalyzer(std::vector<GraphPiece> graph, std::size_t n);

  // Injectivity of (x,v) -> Ax+v piece by piece; finite-to-one when all hold.
  MintyCertificate certify(const std::vector<RatVec>& A) const;

  // Checks that points around which the projection restricts to an affine
  // homeomorphism of a single piece are dense in the whole graph.
  DenseDiffeoReport dense_local_diffeo(const std::vector<RatVec>& A);

  std::size_t piece_count() const { return graph_.size(); }
  const std::vector<GraphPiece>& graph() const { return graph_; }
  std::size_t ambient() const { return n_; }

 private:
  bool injective_on_piece(const std::vector<RatVec>& A, std::size_t i) const;

  std::size_t n_;
  std::vector<GraphPiece> graph_;
  std::vector<HPolyhedron> products_;
  std::vector<std::vector<RatVec>> directions_;       // basis of each piece's direction space
  std::vector<std::vector<HPolyhedron>> good_atoms_;  // per piece: single-piece closure cover
  std::map<std::vector<bool>, DenseDiffeoReport> cache_;
};

// Square matrix (rows) with nonzero rational entries, used as a generic trial.
std::vector<RatVec> sample_generic_matrix(std::size_t n, Rng& rng);

// True when (x,v) -> Ax+v maps every product piece to an image of the same
// dimension; holds whenever the projection is injective on every piece.
bool dimension_preserved(const std::vector<GraphPiece>& graph, const std::vector<RatVec>& A);

}  // namespace subjetlab
