#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "jacobi2d/coefficients.hpp"

namespace jacobi2d {

// Coefficient document layout:
//   { "p1": int, "p2": int,
//     "a0": [[[re, im], ... p2], ... p1], "a1": ..., "b0": ...,
//     "b1": [[real, ... p2], ... p1] }
// Outer index is n, inner is m. A b1 entry may also be given as [re, im]
// so that a nonzero imaginary part reaches validate() and is reported as
// NonRealDiagonal rather than as a parse failure.

/// Structural decoding only (types, nesting). Throws Error(Parse).
RawCoefficients raw_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const CoefficientField& field);

/// Parse + validate. Throws Error(Parse) or one of the validation codes.
CoefficientField field_from_json(const nlohmann::json& doc);

/// Reads a whole file into memory. Throws Error(Io).
std::string read_file(const std::filesystem::path& path);

/// Writes `text` to `path`, or to stdout when `path` is empty. Throws Error(Io).
void write_output(const std::filesystem::path& path, const std::string& text);

}  // namespace jacobi2d
