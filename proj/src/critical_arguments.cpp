#include "coamoeba/critical_arguments.hpp"

#include <algorithm>
#include <cmath>

#include "coamoeba/error.hpp"

namespace coamoeba {

CriticalSet critical_set(const PointConfiguration& config, const CoefficientVector& coeffs) {
  const auto layout = special_form_layout(config);
  if (!layout)
    throw Error(ErrorCode::NotSpecialOrthogonalForm, "run orthogonal_form first; configuration is not in special form");
  const LaurentPolynomial f = make_polynomial(config, coeffs);
  const std::size_t n = static_cast<std::size_t>(config.dimension);

  // z_i ∂_i f has two terms: the axis point and the apex of coordinate i
  BinomialSystem system;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t axis = layout->axis_point[i], apex = layout->apex[i];
    IntVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = config[apex][j] - config[axis][j];
    system.exponents.push_back(std::move(row));
    system.targets.push_back(-static_cast<double>(config[axis][i]) * coeffs[axis] /
                             (static_cast<double>(config[apex][i]) * coeffs[apex]));
  }

  CriticalSet out;
  out.layout = *layout;
  for (const auto& s : solve_binomial_system(system)) {
    CriticalPoint c;
    c.point = s.point();
    c.argument = s.arguments;
    const double scale = f.scale_at(c.point);
    for (std::size_t i = 0; i < n; ++i)
      c.residual = std::max(c.residual, std::abs(f.toric_derivative(i)(c.point)) / scale);
    out.points.push_back(std::move(c));
  }
  return out;
}

IndexSetReport verify_index_set(const PointConfiguration& config, const CoefficientVector& coeffs) {
  const CircuitProfile prof = profile(config);
  const CriticalSet critical = critical_set(config, coeffs);
  IndexSetReport report;
  report.index_set = complement_index_set(config, coeffs);

  std::vector<double> orders;
  report.non_colopsided_aligned = true;
  for (const auto& c : critical.points) {
    CriticalArgumentCheck check;
    check.argument = c.argument;
    const auto phases = phase_vector(config, coeffs, c.argument);
    check.verdict = classify_phases(phases);
    // rotate the first positive phase to 1 and compare with the signs δ_k
    std::size_t first_positive = 0;
    while (prof.signs[first_positive] < 0) ++first_positive;
    const Complex rotation = std::conj(phases[first_positive]);
    check.aligned = true;
    for (std::size_t k = 0; k < phases.size(); ++k)
      if (std::abs(rotation * phases[k] - static_cast<double>(prof.signs[k])) > 1e-9) check.aligned = false;
    if (check.verdict.colopsided()) {
      ++report.colopsided_count;
      check.order_value = order_map(config, coeffs, c.argument);
      orders.push_back(*check.order_value);
    } else if (!check.aligned) {
      report.non_colopsided_aligned = false;
    }
    report.arguments.push_back(std::move(check));
  }
  std::sort(orders.begin(), orders.end());
  report.orders_distinct = true;
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (orders[i] - orders[i - 1] <= 1e-6) report.orders_distinct = false;
  report.counts_match = report.colopsided_count == report.index_set.cardinality();
  return report;
}

}  // namespace coamoeba
