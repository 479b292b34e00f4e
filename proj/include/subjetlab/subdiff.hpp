#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subjetlab/piecewise.hpp"
#include "subjetlab/polyhedron.hpp"
#include "subjetlab/rational.hpp"

namespace subjetlab {

enum class Kind { frechet, limiting, clarke };

const char* kind_name(Kind k);
std::optional<Kind> parse_kind(const std::string& s);

// Pointwise subdifferential query result: a finite union of polyhedra in
// gradient space, or a refusal when the notion does not apply at the point
// (Clarke construction away from the locally Lipschitz locus).
struct SubdiffResult {
  bool defined = true;
  std::string refusal;
  std::vector<HPolyhedron> pieces;
};

// Union membership for a pointwise result.
bool result_contains(const SubdiffResult& r, const RatVec& v);

// One piece of a subdifferential graph in R^{2n}.
//
// Product pieces carry base and fiber factors; the exact set is
// (relint of base when base_relint, else base) x fiber. Hand-coded catalog
// pieces describe curved sets and carry only the membership callbacks.
// Every piece has a constant local dimension equal to dim at each point of
// its closure, which is what makes local-dimension queries a max over the
// closures containing the point.
struct GraphPiece {
  std::string label;
  int dim = kDimEmpty;
  std::function<bool(const RatVec&, const RatVec&)> member;
  std::function<bool(const RatVec&, const RatVec&)> closure_member;
  std::optional<HPolyhedron> base;   // x-space closure of the base factor
  std::optional<HPolyhedron> fiber;  // v-space factor, closed
  bool base_relint = false;
};

// Builds a product piece with membership callbacks wired to the factors.
GraphPiece product_piece(HPolyhedron base, HPolyhedron fiber, bool base_relint,
                         std::string label);

bool graph_member(const std::vector<GraphPiece>& pieces, const RatVec& x, const RatVec& v);

// True when f is Lipschitz on a neighborhood of x in ambient space; on the
// affine tier this is exactly "x lies in the interior of the domain union".
bool locally_lipschitz_at(const PiecewiseFunction& f, const RatVec& x);

// Subdifferential of f at a rational point. The regular (Frechet)
// subdifferential intersects, over all cells whose closure contains x, the
// cell gradient translated by the cell's normal cone at x. The limiting
// subdifferential is the union of face fibers over faces whose closure
// contains x, where the fiber on a face F intersects the translated normal
// cones of the cells containing F. The Clarke construction additionally
// convexifies over the gradients of full-dimensional cells and is only
// offered on the locally Lipschitz locus.
SubdiffResult subdifferential(const PiecewiseFunction& f, Kind k, const RatVec& x);

// The graph of the chosen subdifferential as an explicit finite union of
// pieces. Pieces contained in another piece are pruned.
std::vector<GraphPiece> subjet_graph(const PiecewiseFunction& f, Kind k);

// Graph of the multiplier set map x -> A^T (limiting subdifferential of g
// at Ax + c), computed piecewise: bases pull back through the affine map
// and fibers push forward through A^T.
std::vector<GraphPiece> pullback_graph(const PiecewiseFunction& g,
                                       const std::vector<RatVec>& A, const RatVec& c);

}  // namespace subjetlab
