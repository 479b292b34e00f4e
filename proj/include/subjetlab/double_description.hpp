#pragma once

#include <cstddef>
#include <vector>

#include "subjetlab/polyhedron.hpp"
#include "subjetlab/rational.hpp"

namespace subjetlab {

// Generators of the homogeneous cone {y : r_i·y ≤ 0, s_j·y = 0}.
struct ConeGen {
  std::vector<RatVec> rays;
  std::vector<RatVec> lines;
};

// Double description on a cone given by homogeneous constraints.
ConeGen cone_generators(const std::vector<RatVec>& ineq_rows,
                        const std::vector<RatVec>& eq_rows, std::size_t n);

// Constraint form of a cone given by generators (rays and lines through 0).
// Returns rows r (inequalities r·y ≤ 0) and s (equalities s·y = 0).
ConeGen cone_constraints(const std::vector<RatVec>& rays,
                         const std::vector<RatVec>& lines, std::size_t n);

// Generator representation of an H-polyhedron, via homogenization.
VRep dd_vrep(const HPolyhedron& P);

// H-representation of a generator form (empty input yields an empty H-poly).
HPolyhedron dd_hrep(const VRep& V, std::size_t n);

}  // namespace subjetlab
