#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coamoeba/critical_arguments.hpp"
#include "coamoeba/discriminant.hpp"
#include "coamoeba/error.hpp"
#include "coamoeba/phase_engine.hpp"
#include "coamoeba/planar_raster.hpp"
#include "coamoeba/system_solver.hpp"
#include "reports.hpp"

namespace py = pybind11;
using namespace coamoeba;

namespace {

PointConfiguration circuit(const std::vector<IntVector>& points) { return validate(points); }

PointConfiguration planar(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "no points");
  return {static_cast<int>(points.front().size()), points};
}

py::dict profile_dict(const std::vector<IntVector>& points) {
  const auto p = profile(circuit(points));
  py::dict d;
  d["raw_gale"] = p.raw_gale;
  d["primitive_gale"] = p.primitive_gale;
  d["volumes"] = p.volumes;
  d["signs"] = p.signs;
  d["total_volume"] = p.total_volume;
  d["normalized_volume"] = p.normalized_volume();
  d["lattice_index"] = p.lattice_index;
  d["kind"] = std::string(to_string(p.kind));
  d["interior_point"] = p.interior_point ? py::cast(*p.interior_point) : py::none();
  return d;
}

py::dict classify_dict(const std::vector<IntVector>& points, const CoefficientVector& coeffs) {
  const auto c = classify_space(circuit(points), coeffs);
  py::dict d;
  d["label"] = std::string(to_string(c.label));
  d["certificate"] = c.certificate;
  d["witness"] = c.witness ? py::cast(*c.witness) : py::none();
  d["expected_components"] = c.expected_components;
  d["signed_discriminant"] = c.signed_discriminant ? py::cast(*c.signed_discriminant) : py::none();
  return d;
}

py::array_t<std::uint8_t> image_array(const RasterImage& img) {
  py::array_t<std::uint8_t> out({img.resolution, img.resolution});
  std::copy(img.bits.begin(), img.bits.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coamoebae of circuit polynomials";

  static py::exception<Error> error(m, "CoamoebaError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error)(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      py::set_error(error, exc);
    }
  });

  m.def("profile", &profile_dict, py::arg("points"));
  m.def("discriminant", [](const std::vector<IntVector>& pts) { return discriminant(circuit(pts)).to_string(); },
        py::arg("points"));
  m.def("classify", &classify_dict, py::arg("points"), py::arg("coeffs"));
  m.def(
      "in_discriminant_coamoeba",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c) {
        return in_discriminant_coamoeba(circuit(pts), c).member;
      },
      py::arg("points"), py::arg("coeffs"));
  m.def(
      "index_set",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c) {
        return complement_index_set(circuit(pts), c).order_values;
      },
      py::arg("points"), py::arg("coeffs"));
  m.def(
      "order_map",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c, const TorusPoint& theta) {
        return order_map(planar(pts), c, theta);
      },
      py::arg("points"), py::arg("coeffs"), py::arg("theta"));
  m.def(
      "colopsided",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c, const TorusPoint& theta) {
        return colopsided_at(planar(pts), c, theta).colopsided();
      },
      py::arg("points"), py::arg("coeffs"), py::arg("theta"));
  m.def(
      "critical_arguments",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c) {
        std::vector<TorusPoint> out;
        for (const auto& p : critical_set(circuit(pts), c).points) out.push_back(p.argument);
        return out;
      },
      py::arg("points"), py::arg("coeffs"));
  m.def(
      "raster",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c, int resolution, bool lopsided) {
        const auto cfg = planar(pts);
        return image_array(lopsided ? raster_lopsided(cfg, c, resolution) : raster_coamoeba(cfg, c, resolution));
      },
      py::arg("points"), py::arg("coeffs"), py::arg("resolution") = 256, py::arg("lopsided") = false);
  m.def(
      "area",
      [](const std::vector<IntVector>& pts, const CoefficientVector& c, int resolution) {
        return area(raster_coamoeba(planar(pts), c, resolution));
      },
      py::arg("points"), py::arg("coeffs"), py::arg("resolution") = 256);
  m.def(
      "solve_system",
      [](const std::vector<IntVector>& pts, const CoefficientVector& p, const CoefficientVector& q) {
        std::vector<std::vector<Complex>> out;
        for (const auto& r : solve_system(reduce_to_trinomials(planar(pts), p, q))) out.push_back(r.point);
        return out;
      },
      py::arg("points"), py::arg("first"), py::arg("second"));
  m.def(
      "fewnomial_campaign",
      [](std::size_t trials, std::uint64_t seed) {
        const auto s = fewnomial_campaign(trials, seed);
        py::dict d;
        d["trials"] = s.trials;
        d["generic"] = s.generic;
        d["max_cluster"] = s.max_cluster;
        d["oversized_clusters"] = s.oversized_clusters;
        d["nonreal_violations"] = s.nonreal_violations;
        d["conjugation_failures"] = s.conjugation_failures;
        return d;
      },
      py::arg("trials") = 200, py::arg("seed") = 7);
  // same JSON reports as the command-line tool
  m.def(
      "run",
      [](const std::string& command, const std::string& spec_json) {
        const auto j = reports::json::parse(spec_json);
        reports::ProblemSpec spec;
        if (j.contains("config")) spec.config = j["config"];
        if (j.contains("coeffs")) spec.coeffs = j["coeffs"];
        if (j.contains("system")) spec.system = j["system"];
        if (j.contains("grid")) spec.grid = j["grid"];
        spec.resolution = j.value("resolution", spec.resolution);
        spec.seed = j.value("seed", spec.seed);
        spec.trials = j.value("trials", spec.trials);
        spec.tolerance = j.value("tolerance", spec.tolerance);
        spec.out = j.value("out", spec.out);
        const auto out = reports::run(command, spec);
        return out.text.empty() ? out.report.dump() : out.text;
      },
      py::arg("command"), py::arg("spec_json"));
  m.attr("__version__") = reports::kToolVersion;
}
