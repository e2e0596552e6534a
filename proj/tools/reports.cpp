#include "reports.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "coamoeba/critical_arguments.hpp"
#include "coamoeba/discriminant.hpp"
#include "coamoeba/error.hpp"
#include "coamoeba/phase_engine.hpp"
#include "coamoeba/planar_raster.hpp"
#include "coamoeba/system_solver.hpp"

namespace coamoeba::reports {

namespace {

constexpr double kPi = std::numbers::pi;

json torus_point(const TorusPoint& t) {
  json out = json::array();
  for (double x : t) out.push_back(angle(x));
  return out;
}

json int_vector(const IntVector& v) { return json(v); }

const json& require(const std::optional<json>& j, const char* what) {
  if (!j) throw Error(ErrorCode::InvalidInput, std::string("missing --") + what);
  return *j;
}

json base_report(const std::string& command, const ProblemSpec& spec) {
  json r;
  r["tool"] = {{"name", "coamoeba"}, {"version", kToolVersion}};
  r["command"] = command;
  r["seed"] = spec.seed;
  r["tolerances"] = {{"angle", kAngleTolerance}, {"congruence", spec.tolerance}};
  if (spec.config) r["config"] = *spec.config;
  if (spec.coeffs) r["coefficients"] = *spec.coeffs;
  return r;
}

json verdict_json(const ColopsidednessVerdict& v) {
  json j{{"kind", std::string(to_string(v.kind))}};
  if (v.kind == ColopsidednessVerdict::Kind::Colopsided) j["witness"] = angle(v.witness);
  if (v.kind == ColopsidednessVerdict::Kind::RealDegenerate) j["line_direction"] = angle(v.line_direction);
  return j;
}

json profile_report(const PointConfiguration& config) {
  const CircuitProfile p = profile(config);
  json j;
  j["raw_gale"] = int_vector(p.raw_gale);
  j["primitive_gale"] = int_vector(p.primitive_gale);
  j["gale_gcd"] = p.gale_gcd;
  j["volumes"] = int_vector(p.volumes);
  j["signs"] = p.signs;
  j["total_volume"] = p.total_volume;
  j["normalized_volume"] = p.normalized_volume();
  j["kind"] = std::string(to_string(p.kind));
  j["lattice_index"] = p.lattice_index;
  j["interior_point"] = p.interior_point ? json(*p.interior_point) : json(nullptr);
  if (p.degenerate()) return j;

  auto simplices = [](const std::vector<Simplex>& s) {
    json a = json::array();
    for (const auto& x : s) a.push_back({{"omitted", x.omitted}, {"vertices", x.vertices}, {"volume", x.volume}});
    return a;
  };
  j["triangulations"] = {{"plus", simplices(p.triangulations.plus)}, {"minus", simplices(p.triangulations.minus)}};
  const auto eq = equimodular_check(p);
  j["equimodular"] = eq.equimodular;
  if (eq.witness_sign) j["equimodular_sign"] = *eq.witness_sign;

  const auto d = discriminant(config);
  std::ostringstream reduced;
  reduced << d.plus_constant << (d.minus_constant < 0 ? " + " : " - ")
          << (d.minus_constant < 0 ? BigInt(-d.minus_constant) : d.minus_constant) << "*xi";
  j["discriminant"] = d.to_string();
  j["reduced_discriminant"] = reduced.str();

  const auto norm = normalize_lattice(config);
  j["normalized_points"] = norm.config.points;
  j["normalization"] = {{"linear", norm.transform.linear},
                        {"translation", norm.transform.translation},
                        {"denominator", norm.transform.denominator}};
  try {
    const auto of = orthogonal_form(norm.config);
    j["orthogonal_form"] = {{"points", of.config.points}, {"order", of.order}, {"m1", of.m1},
                            {"m2", of.m2},               {"special", of.special}};
  } catch (const Error& e) {
    j["orthogonal_form"] = {{"error", std::string(error_name(e.code()))}, {"message", e.what()}};
  }
  return j;
}

json roots_json(const std::vector<SystemRoot>& roots) {
  json a = json::array();
  for (const auto& r : roots)
    a.push_back({{"z", {complex_value(r.point[0]), complex_value(r.point[1])}},
                 {"argument", torus_point(r.argument)},
                 {"residual", r.residual}});
  return a;
}

CircuitSystem parse_system(const json& j) {
  const PointConfiguration support = parse_config(j);
  if (j.contains("trinomial")) {
    const auto c = parse_coeffs(j.at("trinomial"));
    if (c.size() != 4) throw Error(ErrorCode::InvalidInput, "trinomial form takes [c1, c2, c3, c4]");
    return make_system(support, c[0], c[1], c[2], c[3]);
  }
  if (!j.contains("first") || !j.contains("second"))
    throw Error(ErrorCode::InvalidInput, "system needs \"first\" and \"second\" or \"trinomial\"");
  return reduce_to_trinomials(support, parse_coeffs(j.at("first")), parse_coeffs(j.at("second")));
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

json angle(double radians) {
  const double over_pi = radians / kPi;
  json j{{"over_pi", over_pi}};
  for (std::int64_t q = 1; q <= 64; ++q) {
    const double p = std::round(over_pi * static_cast<double>(q));
    if (std::abs(over_pi - p / static_cast<double>(q)) <= 1e-12) {
      const auto num = static_cast<std::int64_t>(p);
      const std::int64_t g = std::gcd(num < 0 ? -num : num, q);
      j["exact"] = q / g == 1 ? std::to_string(num / g) : std::to_string(num / g) + "/" + std::to_string(q / g);
      break;
    }
  }
  return j;
}

json complex_value(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

PointConfiguration parse_config(const json& j) {
  const json& pts = j.is_object() ? j.at("points") : j;
  if (!pts.is_array() || pts.empty()) throw Error(ErrorCode::InvalidInput, "points must be a nonempty array");
  std::vector<IntVector> points;
  for (const auto& p : pts) {
    if (p.is_number_integer()) {
      points.push_back({p.get<std::int64_t>()});
      continue;
    }
    if (!p.is_array()) throw Error(ErrorCode::InvalidInput, "each point is an integer array");
    IntVector v;
    for (const auto& x : p) {
      if (!x.is_number_integer()) throw Error(ErrorCode::InvalidInput, "point coordinates must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    points.push_back(std::move(v));
  }
  const int dim = static_cast<int>(points.front().size());
  if (j.is_object() && j.contains("dimension") && j.at("dimension").get<int>() != dim)
    throw Error(ErrorCode::InvalidInput, "dimension does not match the points");
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(dim)) throw Error(ErrorCode::InvalidInput, "points have unequal length");
  // trinomials and other non-circuits are allowed for phase-only commands
  return PointConfiguration{dim, std::move(points)};
}

CoefficientVector parse_coeffs(const json& j) {
  const json& list = j.is_object() ? j.at("coefficients") : j;
  if (!list.is_array()) throw Error(ErrorCode::InvalidInput, "coefficients must be an array");
  CoefficientVector out;
  for (const auto& c : list) {
    Complex z;
    if (c.is_number()) {
      z = c.get<double>();
    } else if (c.is_object() && c.contains("re")) {
      z = {c.at("re").get<double>(), c.value("im", 0.0)};
    } else if (c.is_object() && c.contains("modulus")) {
      z = std::polar(c.at("modulus").get<double>(), kPi * c.value("argument_over_pi", 0.0));
    } else {
      throw Error(ErrorCode::InvalidInput, "coefficient must be a number, {re, im} or {modulus, argument_over_pi}");
    }
    if (z == Complex(0)) throw Error(ErrorCode::InvalidInput, "coefficients must be nonzero");
    out.push_back(z);
  }
  return out;
}

Output run(const std::string& command, const ProblemSpec& spec) {
  Output out;
  json r = base_report(command, spec);

  if (command == "profile") {
    const auto config = validate(parse_config(require(spec.config, "config")).points);
    r["profile"] = profile_report(config);
  } else if (command == "index-set") {
    const auto config = validate(parse_config(require(spec.config, "config")).points);
    const auto is = complement_index_set(config, parse_coeffs(require(spec.coeffs, "coeffs")));
    json values = json::array();
    for (double v : is.order_values) values.push_back(angle(v));
    r["order_values"] = values;
    r["cardinality"] = is.cardinality();
    r["degenerate_alignment"] = is.degenerate_alignment;
    r["normalized_volume"] = is.normalized_volume;
    r["components_on_torus"] = is.components_on_torus();
  } else if (command == "shell") {
    const auto config = parse_config(require(spec.config, "config"));
    json families = json::array();
    for (const auto& f : shell(config, parse_coeffs(require(spec.coeffs, "coeffs"))))
      families.push_back({{"normal", f.normal}, {"offset", angle(f.offset)}, {"edge", f.edge}});
    r["families"] = families;
  } else if (command == "classify") {
    const auto config = validate(parse_config(require(spec.config, "config")).points);
    const auto coeffs = parse_coeffs(require(spec.coeffs, "coeffs"));
    const auto c = classify_space(config, coeffs);
    r["class"] = std::string(to_string(c.label));
    r["certificate"] = c.certificate;
    r["witness"] = c.witness ? torus_point(*c.witness) : json(nullptr);
    if (c.restriction_minimum) r["restriction_minimum"] = *c.restriction_minimum;
    if (c.signed_discriminant) r["signed_discriminant"] = *c.signed_discriminant;
    r["expected_components"] = c.expected_components;
  } else if (command == "sweep") {
    const auto config = validate(parse_config(require(spec.config, "config")).points);
    auto coeffs = parse_coeffs(require(spec.coeffs, "coeffs"));
    const json& grid = require(spec.grid, "grid");
    const auto index = grid.value("index", coeffs.size() - 1);
    if (index >= coeffs.size()) throw Error(ErrorCode::InvalidInput, "grid index out of range");
    std::ostringstream csv;
    csv << "modulus,argument_over_pi,class,certificate\n";
    std::size_t u0 = 0, u1 = 0, indeterminate = 0;
    for (const auto& m : grid.at("moduli"))
      for (const auto& a : grid.at("arguments_over_pi")) {
        coeffs[index] = std::polar(m.get<double>(), kPi * a.get<double>());
        std::string label, certificate;
        try {
          const auto c = classify_space(config, coeffs);
          label = std::string(to_string(c.label));
          certificate = c.certificate;
          (c.label == SpaceLabel::U0 ? u0 : u1)++;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NumericallyIndeterminate) throw;
          label = "indeterminate";
          certificate = "NumericallyIndeterminate";
          ++indeterminate;
        }
        csv << format_number(m.get<double>()) << ',' << format_number(a.get<double>()) << ',' << label << ','
            << certificate << '\n';
      }
    r["grid"] = grid;
    r["counts"] = {{"U0", u0}, {"U1", u1}, {"indeterminate", indeterminate}};
    if (spec.out.empty()) {
      out.text = csv.str();
    } else {
      std::ofstream(spec.out, std::ios::binary) << csv.str();
      r["out"] = spec.out;
    }
  } else if (command == "area") {
    const auto config = parse_config(require(spec.config, "config"));
    const auto coeffs = parse_coeffs(require(spec.coeffs, "coeffs"));
    if (spec.method != "exact" && spec.method != "pushforward")
      throw Error(ErrorCode::InvalidInput, "method is exact or pushforward");
    const auto image = raster_coamoeba(config, coeffs, spec.resolution,
                                       spec.method == "exact" ? RasterMethod::Exact : RasterMethod::Pushforward);
    const auto lopsided = raster_lopsided(config, coeffs, spec.resolution);
    r["resolution"] = spec.resolution;
    r["method"] = spec.method;
    r["pixels"] = image.covered();
    r["area"] = area(image);
    r["area_over_pi_squared"] = area(image) / (kPi * kPi);
    r["lopsided_area"] = area(lopsided);
    r["lopsided_area_over_pi_squared"] = area(lopsided) / (kPi * kPi);
  } else if (command == "render") {
    const auto config = parse_config(require(spec.config, "config"));
    const auto coeffs = parse_coeffs(require(spec.coeffs, "coeffs"));
    if (spec.out.empty()) throw Error(ErrorCode::InvalidInput, "render needs --out");
    const auto image = spec.lopsided ? raster_lopsided(config, coeffs, spec.resolution)
                                     : raster_coamoeba(config, coeffs, spec.resolution);
    std::ofstream(spec.out, std::ios::binary) << image.to_ppm();
    r["out"] = spec.out;
    r["resolution"] = spec.resolution;
    r["lopsided"] = spec.lopsided;
    r["pixels"] = image.covered();
    r["covered_fraction"] = static_cast<double>(image.covered()) / static_cast<double>(image.bits.size());
  } else if (command == "critical") {
    const auto config = validate(parse_config(require(spec.config, "config")).points);
    const auto coeffs = parse_coeffs(require(spec.coeffs, "coeffs"));
    const auto cs = critical_set(config, coeffs);
    const auto report = verify_index_set(config, coeffs);
    json points = json::array(), arguments = json::array(), verdicts = json::array(), orders = json::array();
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
      json z = json::array();
      for (auto c : cs.points[i].point) z.push_back(complex_value(c));
      points.push_back(z);
      arguments.push_back(torus_point(cs.points[i].argument));
      verdicts.push_back(verdict_json(report.arguments[i].verdict));
      orders.push_back(report.arguments[i].order_value ? angle(*report.arguments[i].order_value) : json(nullptr));
    }
    r["critical_points"] = points;
    r["arguments"] = arguments;
    r["verdicts"] = verdicts;
    r["order_values"] = orders;
    r["index_set_check"] = {{"colopsided_count", report.colopsided_count},
                            {"index_set_cardinality", report.index_set.cardinality()},
                            {"orders_distinct", report.orders_distinct},
                            {"counts_match", report.counts_match},
                            {"non_colopsided_aligned", report.non_colopsided_aligned}};
  } else if (command == "solve-system") {
    const json& sj = require(spec.system, "system");
    r["system"] = sj;
    const auto system = parse_system(sj);
    const auto roots = solve_system(system);
    const auto census = sector_census(system, roots);
    r["reduced"] = {{"points", system.support.points},
                    {"roles", system.roles},
                    {"coefficients",
                     {complex_value(system.c1), complex_value(system.c2), complex_value(system.c3),
                      complex_value(system.c4)}},
                    {"interior_line", system.interior_line}};
    r["roots"] = roots_json(roots);
    r["root_count"] = roots.size();
    r["volume"] = profile(system.support).total_volume;
    json clusters = json::array();
    for (const auto& c : census.clusters)
      clusters.push_back({{"members", c.members}, {"argument", torus_point(c.argument)}, {"nonreal", c.nonreal}});
    r["sector_clusters"] = clusters;
    r["max_cluster"] = census.max_cluster;
  } else if (command == "fewnomial-campaign") {
    const auto s = fewnomial_campaign(spec.trials, spec.seed);
    r["trials"] = s.trials;
    r["solved"] = s.solved;
    r["skipped"] = s.skipped;
    r["generic"] = s.generic;
    r["generic_rate"] = s.solved ? static_cast<double>(s.generic) / static_cast<double>(s.solved) : 0.0;
    r["real_systems"] = s.real_systems;
    r["conjugation_failures"] = s.conjugation_failures;
    r["max_cluster"] = s.max_cluster;
    r["oversized_clusters"] = s.oversized_clusters;
    r["nonreal_violations"] = s.nonreal_violations;
    r["refined_pairs"] = s.refined_pairs;
    r["max_residual"] = s.max_residual;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown command " + command);
  }
  out.report = std::move(r);
  return out;
}

}  // namespace coamoeba::reports
