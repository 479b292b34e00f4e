#pragma once

#include <optional>
#include <vector>

#include "subjetlab/polyhedron.hpp"

namespace subjetlab {

// Cell of a refinement, with its generator form kept alongside.
struct RefCell {
  HPolyhedron poly;
  VRep vrep;
};

// Canonical key for the hyperplane {x : a·x = b}, sign and scale free.
RatVec hyperplane_key(const RatVec& a, const Rational& b);

// Deduplicated hyperplane list carried by the members of a union.
std::vector<LinCon> union_cut_list(const std::vector<HPolyhedron>& U);

// Splits P along each cut; the returned closed cells cover P exactly and
// each is contained in one closed side of every cut.
std::vector<RefCell> refine_against(const HPolyhedron& P,
                                    const std::vector<LinCon>& cuts);

// Exact inclusion P ⊆ Q via generators of P.
bool poly_subset(const VRep& V, const HPolyhedron& Q);

bool union_member(const RatVec& x, const std::vector<HPolyhedron>& U);

struct InclusionResult {
  bool contained = false;
  // A point of Q outside the union when not contained.
  std::optional<RatVec> witness;
};

// Exact test Q ⊆ U_1 ∪ ... ∪ U_k (members are closed polyhedra).
InclusionResult union_contains(const HPolyhedron& Q,
                               const std::vector<HPolyhedron>& U);

// Full-dimensional closed sign cells of the arrangement of hyperplanes
// {d : a·d = 0}, a running over the given normals.
std::vector<RefCell> full_dim_sign_cones(const std::vector<RatVec>& normals,
                                         std::size_t n);

// Exact test x ∈ int(U_1 ∪ ... ∪ U_k) in the members' ambient space.
bool point_in_union_interior(const RatVec& x, const std::vector<HPolyhedron>& U);

}  // namespace subjetlab
