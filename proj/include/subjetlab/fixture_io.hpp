#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subjetlab/piecewise.hpp"

namespace subjetlab {

// Declared affine substitution x -> Ax + c carried by composite fixtures.
// The fixture's cells describe the outer function g; tools compare the
// subdifferential graph of x -> g(Ax + c) against the multiplier pullback
// of the graph of g.
struct PullbackDecl {
  std::vector<RatVec> A;  // one row per ambient dimension of g
  RatVec c;               // length = ambient dimension of g
};

struct Fixture {
  PiecewiseFunction fn;
  std::optional<PullbackDecl> pullback;
};

// Parses the JSON fixture format. Every malformed input, including zero
// denominators, raises SchemaError naming the offending field path.
Fixture parse_fixture(const std::string& json_text);
Fixture load_fixture(const std::string& path);

// Canonical serialization: fixed key order, rationals in lowest terms,
// empty optional sections omitted. parse(serialize(fx)) reproduces fx.
std::string fixture_to_json(const Fixture& fx);
void save_fixture(const Fixture& fx, const std::string& path);

// Resolves a --fixture argument: an existing path wins; otherwise the name
// (with .json appended if needed) is looked up under $SUBJET_CORPUS.
std::string resolve_fixture_path(const std::string& arg);

// FNV-1a digest of the canonical serialization; reports echo it so a run
// can be tied to its exact input.
std::uint64_t fixture_digest(const Fixture& fx);

}  // namespace subjetlab
