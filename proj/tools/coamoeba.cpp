#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "coamoeba/error.hpp"
#include "reports.hpp"

namespace {

using coamoeba::reports::json;

// A value is either inline JSON or a path to a JSON file.
json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw coamoeba::Error(coamoeba::ErrorCode::InvalidInput, "cannot open " + arg);
  return json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coamoebae of circuit polynomials"};
  app.set_version_flag("--version", coamoeba::reports::kToolVersion);
  app.require_subcommand(1);

  std::string config, coeffs, system, grid;
  coamoeba::reports::ProblemSpec spec;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--tolerance", spec.tolerance, "congruence tolerance");
    sub->add_option("--seed", spec.seed, "random seed");
    return sub;
  };
  auto with_config = [&](CLI::App* sub) { sub->add_option("--config", config, "points (JSON or file)")->required(); };
  auto with_coeffs = [&](CLI::App* sub) {
    sub->add_option("--coeffs", coeffs, "coefficients (JSON or file)")->required();
  };

  auto* profile = add("profile", "Gale vector, volumes, triangulations, discriminant, normal forms");
  with_config(profile);
  for (const char* name : {"index-set", "shell", "classify", "critical"}) {
    auto* sub = add(name, name);
    with_config(sub);
    with_coeffs(sub);
  }
  app.get_subcommand("index-set")->description("Order values of the complement components");
  app.get_subcommand("shell")->description("Line families of the coamoeba shell");
  app.get_subcommand("classify")->description("U0/U1 label of the coefficient vector");
  app.get_subcommand("critical")->description("Arguments of the critical points and index-set check");

  auto* sweep = add("sweep", "Classify over a grid of one coefficient (CSV)");
  with_config(sweep);
  with_coeffs(sweep);
  sweep->add_option("--grid", grid, "{index, moduli, arguments_over_pi}")->required();
  sweep->add_option("--out", spec.out, "CSV file; the JSON summary goes to stdout");

  auto* area = add("area", "Raster area of the coamoeba and the lopsided coamoeba");
  with_config(area);
  with_coeffs(area);
  area->add_option("--resolution", spec.resolution)->check(CLI::Range(8, 8192));
  area->add_option("--method", spec.method)->check(CLI::IsMember({"exact", "pushforward"}));

  auto* render = add("render", "Write the raster as a PPM image");
  with_config(render);
  with_coeffs(render);
  render->add_option("--resolution", spec.resolution)->check(CLI::Range(8, 8192));
  render->add_option("--out", spec.out)->required();
  render->add_flag("--lopsided", spec.lopsided);

  auto* solve = add("solve-system", "Roots and sector census of a two-equation circuit system");
  solve->add_option("--system", system, "{points, first, second} or {points, trinomial}")->required();

  auto* campaign = add("fewnomial-campaign", "Random simplex-circuit systems");
  campaign->add_option("--trials", spec.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (campaign->parsed() && campaign->count("--seed") == 0) spec.seed = 7;
    if (!config.empty()) spec.config = load(config);
    if (!coeffs.empty()) spec.coeffs = load(coeffs);
    if (!system.empty()) spec.system = load(system);
    if (!grid.empty()) spec.grid = load(grid);
    const auto out = coamoeba::reports::run(app.get_subcommands().front()->get_name(), spec);
    if (out.text.empty())
      std::cout << out.report.dump(2) << '\n';
    else
      std::cout << out.text;
    return 0;
  } catch (const coamoeba::Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.category()) {
      case coamoeba::ErrorCategory::Validation: return 1;
      case coamoeba::ErrorCategory::Degeneracy: return 2;
      case coamoeba::ErrorCategory::Numerical: return 3;
    }
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "InvalidInput: " << e.what() << '\n';
    return 1;
  }
}
