#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jacobi2d/tolerances.hpp"

namespace jacobi2d::cli {

enum class Command { Validate, Bands, Envelope, Bounds, Measure, Verify, Example };
enum class OutputFormat { Csv, Json };

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;            // I/O, parse or usage error
inline constexpr int kExitValidation = 2;    // coefficient validation failed
inline constexpr int kExitVerification = 3;  // a verify check failed
inline constexpr int kExitPrecondition = 4;  // e.g. torus dimension cap

struct RunConfig {
  Command command = Command::Validate;
  std::filesystem::path input_path;
  std::filesystem::path output_path;  // empty: stdout
  int grid_nx = 64;
  int grid_ny = 64;
  int torus_n1 = 3;
  int torus_n2 = 3;
  std::uint64_t seed = 0;
  std::size_t sandwich_samples = 100;
  Tolerances tolerances;
  std::optional<OutputFormat> format;  // csv for bands, json otherwise
  bool sharp = false;
  std::string example_name;  // shifted-schrodinger | diagonal-hopping
  int example_p1 = 3;
  int example_p2 = 3;
};

std::string_view command_name(Command command);

/// Executes one command. Reports go to config.output_path (or `out` when
/// empty); diagnostics go to `err`. Returns one of the kExit* statuses.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Usage errors return kExitIo.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacobi2d::cli
