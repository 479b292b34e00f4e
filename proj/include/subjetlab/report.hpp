#pragma once

/// @file report.hpp
/// @brief Canonical JSON rendering of tool results. Output is
///        byte-deterministic for fixed inputs and seeds: keys keep
///        insertion order, rationals print exactly, and nothing
///        time-dependent is ever written.

#include <string>
#include <vector>

#include "json.hpp"
#include "subjetlab/dimension.hpp"
#include "subjetlab/minty.hpp"
#include "subjetlab/param.hpp"
#include "subjetlab/piecewise.hpp"
#include "subjetlab/subdiff.hpp"

namespace subjetlab {

using Json = nlohmann::ordered_json;

Json vec_json(const RatVec& v);
Json hpoly_json(const HPolyhedron& P);
Json vrep_json(const VRep& V);

Json subdiff_json(const SubdiffResult& r);
Json graph_json(const std::vector<GraphPiece>& pieces);
Json local_dim_json(const LocalDimReport& rep, const std::vector<GraphPiece>& pieces);
Json numeric_dim_json(const NumericDimEstimate& est);
Json validation_json(const ValidationReport& rep);
Json minty_certificate_json(const MintyCertificate& cert);
Json dense_diffeo_json(const DenseDiffeoReport& rep);
Json solve_json(const SolveReport& rep, std::size_t n);
Json sensitivity_json(const SensitivityReport& rep);
Json access_json(const AccessReport& rep);

// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

}  // namespace subjetlab
