#pragma once

// JSON problem parsing and report generation behind the coamoeba CLI.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "coamoeba/integer_geometry.hpp"
#include "coamoeba/numeric_kernel.hpp"

namespace coamoeba::reports {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct ProblemSpec {
  std::optional<json> config;
  std::optional<json> coeffs;
  std::optional<json> system;
  std::optional<json> grid;
  int resolution = 1024;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  double tolerance = 1e-9;
  std::string out;     // output file for render / sweep
  bool lopsided = false;  // render the lopsided coamoeba instead
  std::string method = "exact";  // area: exact | pushforward
};

/// Angle as a multiple of π, with an exact "p/q" string when one fits.
json angle(double radians);
json complex_value(Complex z);

/// {"points": [[...], ...]} or a bare list of points.
PointConfiguration parse_config(const json& j);
/// Entries are numbers, {"re", "im"} or {"modulus", "argument_over_pi"}.
CoefficientVector parse_coeffs(const json& j);

struct Output {
  json report;
  std::string text;  // non-JSON payload (CSV) printed instead of the report when set
};

/// Runs one subcommand. Throws coamoeba::Error for library failures.
Output run(const std::string& command, const ProblemSpec& spec);

}  // namespace coamoeba::reports
