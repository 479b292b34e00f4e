#pragma once

#include <string>
#include <vector>

#include "subjetlab/piecewise.hpp"
#include "subjetlab/subdiff.hpp"

namespace subjetlab {

// Hand-coded catalogs for the two shipped functions whose subdifferential
// geometry the generic polyhedral engine cannot express: the planar
// min/quadratic composite on R^3 ("min_quadratic_composite") and the
// indicator of the open unit disc with one boundary point kept
// ("open_disc_plus_point"). Each catalog answers validation, pointwise
// subdifferential, and graph-piece queries with exact rational case
// analysis derived by hand.

bool has_special(const PiecewiseFunction& f);

ValidationReport special_validate(const PiecewiseFunction& f);

SubdiffResult special_subdiff(const PiecewiseFunction& f, Kind k, const RatVec& x);

std::vector<GraphPiece> special_graph(const PiecewiseFunction& f, Kind k);

bool special_locally_lipschitz(const PiecewiseFunction& f, const RatVec& x);

}  // namespace subjetlab
