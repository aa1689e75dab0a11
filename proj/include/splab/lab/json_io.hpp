#pragma once

#include "splab/extension.hpp"
#include "splab/symplectic.hpp"

#include <json.hpp>

#include <filesystem>

namespace splab::lab {

using Json = nlohmann::json;

// Matrix:     {"g": G, "rows": [["p/q", ...], ...]}
// Lagrangian: {"g": G, "basis": [["p/q", ...], ...]}
// Entries are exact rational strings; JSON integers are accepted on input,
// floating-point numbers never are.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const SymplecticMap& f);
/// Throws std::invalid_argument on malformed input or a non-symplectic matrix.
SymplecticMap matrix_from_json(const Json& j);

/// Matrix object with an extra "level" field.
Json ext_to_json(const ExtElement& e);

Json lagrangian_to_json(const OrientedLagrangian& l);
OrientedLagrangian lagrangian_from_json(const Json& j);

/// Parses a whole file; throws std::runtime_error when it cannot be read.
Json read_json_file(const std::filesystem::path& path);

}  // namespace splab::lab
