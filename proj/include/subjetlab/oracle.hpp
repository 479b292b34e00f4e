#pragma once

/// @file oracle.hpp
/// @brief Independent cross-checks built from stabilized exact directional
///        derivatives and sampled difference-quotient gradients. These paths
///        share no code with the normal-cone construction, so agreement is
///        evidence rather than tautology.

#include <vector>

#include "subjetlab/piecewise.hpp"
#include "subjetlab/polyhedron.hpp"

namespace subjetlab {

// Exact one-sided directional derivative of an affine-tier function,
// stabilized by halving the step until three consecutive exact difference
// quotients agree. Infinite when the function is +infinity along the
// direction near x. Throws on the polynomial tier, where quotients do not
// stabilize exactly.
ExtVal directional_derivative(const PiecewiseFunction& f, const RatVec& x, const RatVec& d);

// Outer polyhedral estimate of the regular subdifferential from the
// constraints v.d <= f'(x; d) over a direction family: a primitive integer
// grid plus the active cell constraint normals and their rotations. Always
// a superset of the regular subdifferential; in one and two dimensions the
// family contains every ray of the local linearity fan of f'(x; .), which
// makes the estimate exact on the affine tier.
HPolyhedron frechet_oracle(const PiecewiseFunction& f, const RatVec& x);

// Union of regular-oracle sets at exact points stepping into the relative
// interior of every refined-complex face whose closure holds x; values on
// the domain converge automatically because affine-tier functions are
// continuous there. Cross-checks the limiting subdifferential.
std::vector<HPolyhedron> limiting_oracle(const PiecewiseFunction& f, const RatVec& x);

// Convex hull of difference-quotient gradients sampled inside the
// full-dimensional cells around a locally Lipschitz point; cross-checks
// the Clarke construction.
HPolyhedron clarke_oracle(const PiecewiseFunction& f, const RatVec& x);

}  // namespace subjetlab
