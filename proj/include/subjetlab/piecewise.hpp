#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subjetlab/polyhedron.hpp"
#include "subjetlab/polynomial.hpp"
#include "subjetlab/rational.hpp"

namespace subjetlab {

// Polynomial side condition q(x) <= 0 (or q(x) < 0 when strict) used by
// polynomial-tier cells on top of the affine region.
struct SignCon {
  Polynomial q;
  bool strict = false;
};

// Declared adjacency of a polynomial-tier cell at a boundary point: the
// witness sequence lies in the cell and converges to the point.
struct AdjacencyDecl {
  RatVec point;
  std::vector<RatVec> witness_seq;
};

// One cell: where the formula applies. Affine tier: region alone.
// Polynomial tier: region plus polynomial sign conditions.
struct Cell {
  HPolyhedron region;
  std::vector<SignCon> sign_ineqs;
  Polynomial poly;
  std::vector<AdjacencyDecl> adjacency_at;
};

enum class Tier { affine, polynomial };

struct PiecewiseFunction {
  std::string name;
  std::size_t n = 0;
  Tier tier = Tier::affine;
  std::vector<Cell> cells;
  // Names a hand-coded catalog that answers queries the generic engines
  // cannot (non-polyhedral region, discontinuity). Empty otherwise.
  std::string special_oracle;
};

// Membership in the cell (exact; strict sign conditions honored) and in its
// closure (strict conditions relaxed to non-strict).
bool cell_contains(const Cell& c, const RatVec& x);
bool cell_closure_contains(const Cell& c, const RatVec& x);

// f(x): the common cell value at x, +infinity off the domain.
// Throws on inconsistent cell values (invalid fixture).
ExtVal evaluate(const PiecewiseFunction& f, const RatVec& x);

// Exact gradient of the cell formula; x must lie in the cell closure.
RatVec gradient_on_cell(const Cell& c, const RatVec& x);

struct ValidationIssue {
  std::string check;
  std::string message;
  RatVec witness;
};

struct ValidationReport {
  bool proper = false;
  bool continuous = false;
  bool lsc = false;
  bool interiors_disjoint = false;
  std::vector<ValidationIssue> issues;

  bool ok() const { return proper && continuous && lsc && interiors_disjoint; }
};

// Checks properness, continuity across shared faces, lower semicontinuity,
// and pairwise disjointness of cell relative interiors. Violations are
// report entries with witness points, never exceptions.
ValidationReport validate(const PiecewiseFunction& f);
// Validation without the hand-coded catalog dispatch; used by catalogs that
// only need the generic certificates.
ValidationReport validate_generic(const PiecewiseFunction& f);

// Common refinement of an affine-tier cell complex: every pair of refined
// cells meets in a shared face; values unchanged; idempotent.
PiecewiseFunction refine(const PiecewiseFunction& f);

// Builders (affine tier).
PiecewiseFunction min_of_affine(const std::vector<std::pair<RatVec, Rational>>& pieces);
PiecewiseFunction indicator(const HPolyhedron& P);
PiecewiseFunction negate(const PiecewiseFunction& f);
PiecewiseFunction sum(const PiecewiseFunction& f, const PiecewiseFunction& g);
// x |-> g(Ax + c) with A given as rows (size = ambient of g, each of the
// new ambient dimension).
PiecewiseFunction affine_precompose(const PiecewiseFunction& g,
                                    const std::vector<RatVec>& A, const RatVec& c);

}  // namespace subjetlab
