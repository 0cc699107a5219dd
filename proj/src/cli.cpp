#include "jacobi2d/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "jacobi2d/bounds.hpp"
#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/coefficients_io.hpp"
#include "jacobi2d/errors.hpp"
#include "jacobi2d/fiber.hpp"
#include "jacobi2d/oracle.hpp"
#include "jacobi2d/spectrum.hpp"

namespace jacobi2d::cli {

using nlohmann::json;

namespace {

// Thrown for bad flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Io, "SHA-256 computation failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json config_echo(const RunConfig& config, const std::string& input_sha) {
  json echo;
  echo["command"] = command_name(config.command);
  echo["grid"] = {config.grid_nx, config.grid_ny};
  echo["torus"] = {config.torus_n1, config.torus_n2};
  echo["seed"] = config.seed;
  echo["sandwich_samples"] = config.sandwich_samples;
  echo["sharp"] = config.sharp;
  echo["tolerances"] = {{"psd", config.tolerances.psd},
                        {"enclosure", config.tolerances.enclosure},
                        {"direct_integral", config.tolerances.direct_integral},
                        {"bound_chain", config.tolerances.bound_chain}};
  echo["input_sha256"] = input_sha;
  return echo;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output_path.empty()) {
    out << text;
    out.flush();
  } else {
    write_output(config.output_path, text);
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

OutputFormat resolve_format(const RunConfig& config) {
  const OutputFormat fallback = config.command == Command::Bands ? OutputFormat::Csv : OutputFormat::Json;
  const OutputFormat format = config.format.value_or(fallback);
  if (format == OutputFormat::Csv && config.command != Command::Bands) {
    throw UsageError("--format csv is only available for the bands command");
  }
  return format;
}

json band_table_json(const BandTable& table) {
  json values = json::array();
  for (int k = 0; k < table.grid().nx(); ++k) {
    json row = json::array();
    for (int l = 0; l < table.grid().ny(); ++l) {
      const auto v = table.at(k, l);
      row.push_back(std::vector<double>(v.begin(), v.end()));
    }
    values.push_back(std::move(row));
  }
  return {{"grid", {table.grid().nx(), table.grid().ny()}},
          {"bands", table.bands()},
          {"values", std::move(values)}};
}

json intervals_json(const IntervalSet& set) {
  json out = json::array();
  for (const Interval& iv : set.intervals()) out.push_back({iv.lo, iv.hi});
  return out;
}

int run_validate(const CoefficientField& field, std::ostream& out) {
  out << "valid coefficient field: p1=" << field.p1() << " p2=" << field.p2()
      << " sites=" << field.sites()
      << " diagonal_hopping=" << (field.has_diagonal_hopping() ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_bands(const RunConfig& config, const CoefficientField& field, std::ostream& out) {
  const BandTable table = sweep_bands(field, MomentumGrid(config.grid_nx, config.grid_ny));
  if (resolve_format(config) == OutputFormat::Csv) {
    emit(config, out, band_table_csv(table));
  } else {
    emit(config, out, dump(band_table_json(table)));
  }
  return kExitOk;
}

CoefficientField envelope_target(const RunConfig& config, const CoefficientField& field, json& doc) {
  if (!config.sharp) return field;
  const BoundArgmin best = r_min(field);
  doc["relabeled_to"] = {{"alpha", best.alpha}, {"beta", best.beta}};
  return relabel(field, best.alpha, best.beta);
}

int run_envelope(const RunConfig& config, const CoefficientField& field, const json& echo,
                 std::ostream& out) {
  resolve_format(config);
  json doc;
  const BandEnvelope env = band_envelope(envelope_target(config, field, doc));
  doc["lower"] = env.lower;
  doc["upper"] = env.upper;
  doc["envelope_sum"] = envelope_sum(env);
  doc["config"] = echo;
  emit(config, out, dump(doc));
  return kExitOk;
}

int run_bounds(const RunConfig& config, const CoefficientField& field, const json& echo,
               std::ostream& out) {
  resolve_format(config);
  const BoundReport report = make_bound_report(field, config.sharp);
  json doc;
  doc["r_table"] = report.r_table;
  doc["r_min"] = {{"alpha", report.r_min.alpha},
                  {"beta", report.r_min.beta},
                  {"value", report.r_min.value}};
  doc["norm_bound"] = report.norm_bound;
  // null, not an error, when a0 != 0: the report lists what applies.
  doc["schrodinger_bound"] =
      report.schrodinger_bound ? json(*report.schrodinger_bound) : json(nullptr);
  doc["envelope_sum"] = report.envelope_sum;
  doc["config"] = echo;
  emit(config, out, dump(doc));
  return kExitOk;
}

int run_measure(const RunConfig& config, const CoefficientField& field, const json& echo,
                std::ostream& out) {
  resolve_format(config);
  const IntervalSet spectrum = spectrum_estimate(field, MomentumGrid(config.grid_nx, config.grid_ny));
  const BoundReport bounds = make_bound_report(field, config.sharp);
  const double measure = spectrum.measure();

  const double slack = config.tolerances.bound_chain * spectrum.scale();
  const double tightest = std::min({bounds.r_min.value, bounds.envelope_sum, bounds.norm_bound});

  json doc;
  doc["intervals"] = intervals_json(spectrum);
  doc["measure"] = measure;
  doc["bounds"] = {{"r_min", bounds.r_min.value},
                   {"envelope_sum", bounds.envelope_sum},
                   {"norm_bound", bounds.norm_bound}};
  doc["satisfied"] = measure <= tightest + slack;
  doc["config"] = echo;
  emit(config, out, dump(doc));
  return kExitOk;
}

int run_verify(const RunConfig& config, const CoefficientField& field, const json& echo,
               std::ostream& out) {
  resolve_format(config);
  const MomentumGrid grid(config.grid_nx, config.grid_ny);
  const EnclosureReport enclosure =
      check_enclosure(sweep_bands(field, grid), band_envelope(field), config.tolerances);
  const SandwichReport sandwich =
      check_sandwich(field, config.sandwich_samples, config.seed, config.tolerances);
  const oracle::DirectIntegralReport direct = oracle::verify_direct_integral(
      field, config.torus_n1, config.torus_n2, config.tolerances.direct_integral);

  const bool pass = enclosure.pass && sandwich.pass && direct.pass;
  json doc;
  doc["enclosure_check"] = {{"pass", enclosure.pass},
                            {"points", enclosure.points},
                            {"worst_margin", enclosure.worst_margin},
                            {"tolerance", enclosure.tolerance}};
  doc["sandwich_check"] = {{"pass", sandwich.pass},
                           {"samples", sandwich.samples},
                           {"seed", sandwich.seed},
                           {"worst_min_eigenvalue", sandwich.worst_min_eigenvalue},
                           {"worst_tolerance", sandwich.worst_tolerance},
                           {"worst_at", {sandwich.worst_at.x, sandwich.worst_at.y}}};
  doc["direct_integral_check"] = {
      {"pass", direct.pass},
      {"max_abs_diff", direct.max_abs_diff},
      {"tolerance", direct.tolerance},
      {"dimensions", {{"n1", direct.n1}, {"n2", direct.n2}, {"matrix", direct.dimension}}}};
  doc["pass"] = pass;
  doc["config"] = echo;
  emit(config, out, dump(doc));
  return pass ? kExitOk : kExitVerification;
}

int run_example(const RunConfig& config, std::ostream& out) {
  CoefficientField field = [&] {
    if (config.example_name == "shifted-schrodinger") {
      return example_shifted_schrodinger(config.example_p1, config.example_p2);
    }
    if (config.example_name == "diagonal-hopping") {
      return example_diagonal_hopping(config.example_p1, config.example_p2);
    }
    throw UsageError("unknown example '" + config.example_name +
                     "' (expected shifted-schrodinger or diagonal-hopping)");
  }();
  emit(config, out, dump(to_json(field)));
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.command == Command::Example) return run_example(config, out);

  if (config.input_path.empty()) throw UsageError("--input is required");
  const std::string bytes = read_file(config.input_path);
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("input is not valid JSON: ") + e.what());
  }
  const CoefficientField field = field_from_json(doc);
  const json echo = config_echo(config, sha256_hex(bytes));

  switch (config.command) {
    case Command::Validate: return run_validate(field, out);
    case Command::Bands: return run_bands(config, field, out);
    case Command::Envelope: return run_envelope(config, field, echo, out);
    case Command::Bounds: return run_bounds(config, field, echo, out);
    case Command::Measure: return run_measure(config, field, echo, out);
    case Command::Verify: return run_verify(config, field, echo, out);
    case Command::Example: break;
  }
  return kExitOk;
}

std::pair<int, int> parse_pair(const std::string& text, const char* flag) {
  int a = 0;
  int b = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> a >> comma >> b) || comma != ',' || !in.eof() || a < 1 || b < 1) {
    throw UsageError(std::string(flag) + " expects two positive integers 'A,B', got '" + text + "'");
  }
  return {a, b};
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Validate: return "validate";
    case Command::Bands: return "bands";
    case Command::Envelope: return "envelope";
    case Command::Bounds: return "bounds";
    case Command::Measure: return "measure";
    case Command::Verify: return "verify";
    case Command::Example: return "example";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Io:
      case ErrorCode::Parse:
        return kExitIo;
      default:
        return is_validation_error(e.code()) ? kExitValidation : kExitPrecondition;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and spectral-measure bounds of 2D periodic Jacobi operators"};
  app.require_subcommand(1);

  RunConfig config;
  std::string grid = "64,64";
  std::string torus = "3,3";
  std::string format;

  const std::map<Command, std::string> help = {
      {Command::Validate, "check a coefficient file"},
      {Command::Bands, "sample band functions over the momentum grid"},
      {Command::Envelope, "band envelopes from J0 -+ C"},
      {Command::Bounds, "r table, r_min, norm and diagonal-hopping bounds"},
      {Command::Measure, "grid estimate of the spectrum and its measure"},
      {Command::Verify, "enclosure, sandwich and torus checks"},
      {Command::Example, "write a built-in coefficient file"},
  };
  for (const auto& [command, description] : help) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(command)), description);
    sub->callback([&config, command] { config.command = command; });
    sub->add_option("--output", config.output_path, "output file (default: stdout)");
    if (command == Command::Example) {
      sub->add_option("--name", config.example_name, "shifted-schrodinger | diagonal-hopping")
          ->required();
      sub->add_option("--p1", config.example_p1, "period in the first direction");
      sub->add_option("--p2", config.example_p2, "period in the second direction");
      continue;
    }
    sub->add_option("--input", config.input_path, "coefficient file (JSON)")->required();
    sub->add_option("--grid", grid, "momentum grid NX,NY (default 64,64)");
    sub->add_option("--torus", torus, "torus periods N1,N2 for verify (default 3,3)");
    sub->add_option("--seed", config.seed, "seed for sampled checks (default 0)");
    sub->add_option("--samples", config.sandwich_samples, "sandwich samples for verify (default 100)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-psd", config.tolerances.psd, "relative tolerance of the sandwich check");
    sub->add_option("--tol-enclosure", config.tolerances.enclosure,
                    "relative tolerance of the enclosure check");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--sharp", config.sharp, "relabel to the r_min argmin before the envelope");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    std::tie(config.grid_nx, config.grid_ny) = parse_pair(grid, "--grid");
    std::tie(config.torus_n1, config.torus_n2) = parse_pair(torus, "--torus");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (!format.empty()) config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  return run(config, out, err);
}

}  // namespace jacobi2d::cli
