#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "subjetlab/linalg.hpp"
#include "subjetlab/rational.hpp"

namespace subjetlab {

// One linear condition a·x ≤ b (or a·x = b when used as an equality).
struct LinCon {
  RatVec a;
  Rational b;
};

// Convex polyhedron {x : a_i·x ≤ b_i, c_j·x = d_j} with exact coefficients.
struct HPolyhedron {
  std::size_t n = 0;
  std::vector<LinCon> ineqs;
  std::vector<LinCon> eqs;

  static HPolyhedron whole_space(std::size_t n) { return HPolyhedron{n, {}, {}}; }
  static HPolyhedron empty_set(std::size_t n);

  void add_ineq(RatVec a, Rational b);
  void add_eq(RatVec a, Rational b);
};

// Generator form: conv(vertices) + cone(rays) + span(lines).
// The set is empty iff vertices is empty.
struct VRep {
  std::vector<RatVec> vertices;
  std::vector<RatVec> rays;
  std::vector<RatVec> lines;

  bool empty() const { return vertices.empty(); }
};

bool contains(const HPolyhedron& P, const RatVec& x);
HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q);
HPolyhedron translate(const HPolyhedron& P, const RatVec& t);
// Cartesian product P x Q, living in R^{P.n + Q.n}.
HPolyhedron product(const HPolyhedron& P, const HPolyhedron& Q);

bool feasible(const HPolyhedron& P);

// Distinguished "dimension of the empty set" value, standing in for -inf:
// strictly below every attainable dimension and absorbing under max.
inline constexpr int kDimEmpty = std::numeric_limits<int>::min();

// Affine dimension; kDimEmpty for the empty set.
int dim(const HPolyhedron& P);
int dim(const VRep& V);
bool bounded(const VRep& V);

// A point in the relative interior (requires nonempty input).
RatVec relint_point(const HPolyhedron& P);
RatVec relint_point(const VRep& V);

// Exact relative-interior membership test.
bool relint_contains(const HPolyhedron& P, const RatVec& x);

// Nonempty face of P, identified by the closed set of tight inequality
// indices (every inequality that holds with equality on all of the face).
struct Face {
  std::vector<std::size_t> tight;
  HPolyhedron poly;
  int dim = kDimEmpty;
};

// All nonempty faces of P, including P itself, excluding the empty face.
std::vector<Face> faces(const HPolyhedron& P);

// Normal cone of P at x ∈ P, as an H-polyhedron with zero offsets.
HPolyhedron normal_cone_at(const HPolyhedron& P, const RatVec& x);
// Normal cone of P along a face F (constant over relint F).
// Throws if F is not a face of P.
HPolyhedron normal_cone(const HPolyhedron& P, const HPolyhedron& F);
// Tangent cone of P at x ∈ P: {d : a_i·d ≤ 0 for tight i, c_j·d = 0}.
HPolyhedron tangent_cone_at(const HPolyhedron& P, const RatVec& x);

// Euclidean projection onto a nonempty polyhedron, exact.
RatVec project(const HPolyhedron& P, const RatVec& x);
// Squared distance from x to P.
Rational dist_sq(const HPolyhedron& P, const RatVec& x);

// Equalities cutting out the affine hull (b-side in .b), from a V-rep.
std::vector<LinCon> affine_hull_eqs(const VRep& V);

// Generator-side constructions.
VRep affine_image(const VRep& V, const std::vector<RatVec>& A, const RatVec& c);
VRep minkowski_sum(const VRep& V, const VRep& W);

// Canonical generator form: rays primitive and sorted, lines an rref basis,
// vertices and rays reduced modulo the line span, duplicates removed.
// Two H-polyhedra describe the same set iff canonical forms are equal.
VRep canonical_form(const VRep& V);
bool same_set(const VRep& A, const VRep& B);
bool same_set(const HPolyhedron& P, const HPolyhedron& Q);

// Strict total order on canonical-form inputs; ties exactly on equal sets.
bool vrep_less(const VRep& A, const VRep& B);

std::string poly_str(const HPolyhedron& P);

}  // namespace subjetlab
