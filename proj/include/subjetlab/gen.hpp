#pragma once

/// @file gen.hpp
/// @brief Seeded random fixture generation.

#include <cstdint>

#include "subjetlab/fixture_io.hpp"
#include "subjetlab/rng.hpp"

namespace subjetlab {

// Deterministic random fixture: a pointwise minimum of affine functions on
// R^n, optionally summed with the indicator of a centered box, then split
// along extra random hyperplanes. Splitting changes the cell list but not
// the function, which makes generated fixtures useful for invariance
// checks across refinements.
Fixture generate_fixture(std::uint64_t seed, std::size_t n, std::size_t cuts, bool with_box);

}  // namespace subjetlab
