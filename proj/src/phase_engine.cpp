#include "coamoeba/phase_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void check_sizes(const PointConfiguration& config, const CoefficientVector& coeffs) {
  if (coeffs.size() != config.size())
    throw Error(ErrorCode::InvalidInput, "need one coefficient per point");
  for (auto c : coeffs)
    if (c == Complex(0)) throw Error(ErrorCode::InvalidInput, "coefficients must be nonzero");
}

std::int64_t gcd2(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? r - kTwoPi : r;
}

double principal_angle(double x) {
  double r = wrap_angle(x);
  return r > kPi ? r - kTwoPi : r;
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(principal_angle(a[i] - b[i])));
  return d;
}

std::string_view to_string(ColopsidednessVerdict::Kind kind) {
  switch (kind) {
    case ColopsidednessVerdict::Kind::Colopsided: return "Colopsided";
    case ColopsidednessVerdict::Kind::Open: return "Open";
    case ColopsidednessVerdict::Kind::RealDegenerate: return "RealDegenerate";
  }
  return "Unknown";
}

std::vector<Complex> phase_vector(const PointConfiguration& config, const CoefficientVector& coeffs,
                                  const TorusPoint& theta) {
  check_sizes(config, coeffs);
  if (theta.size() != static_cast<std::size_t>(config.dimension))
    throw Error(ErrorCode::InvalidInput, "torus point has the wrong dimension");
  std::vector<Complex> out(config.size());
  for (std::size_t k = 0; k < config.size(); ++k) {
    double angle = std::arg(coeffs[k]);
    for (std::size_t i = 0; i < theta.size(); ++i)
      angle += wrap_angle(static_cast<double>(config[k][i]) * wrap_angle(theta[i]));
    out[k] = std::polar(1.0, wrap_angle(angle));
  }
  return out;
}

ColopsidednessVerdict classify_phases(const std::vector<Complex>& phases, double tolerance) {
  if (phases.empty()) throw Error(ErrorCode::InvalidInput, "no phases");
  std::vector<double> angles;
  for (auto p : phases) angles.push_back(wrap_angle(std::arg(p)));
  std::sort(angles.begin(), angles.end());

  ColopsidednessVerdict v;
  // largest gap between cyclically consecutive angles; the covering arc is its complement
  std::size_t after = 0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next = i + 1 < angles.size() ? angles[i + 1] : angles[0] + kTwoPi;
    const double gap = next - angles[i];
    if (gap > v.max_gap) {
      v.max_gap = gap;
      after = (i + 1) % angles.size();
    }
  }
  const double arc_start = angles[after];
  const double arc_length = kTwoPi - v.max_gap;
  const double centre = arc_start + arc_length / 2.0;

  if (v.max_gap > kPi + tolerance) {
    v.kind = ColopsidednessVerdict::Kind::Colopsided;
    v.witness = principal_angle(-centre);
    return v;
  }
  if (v.max_gap >= kPi - tolerance) {
    // covering arc is a closed half-circle: colopsided unless everything sits on its ends
    const double arc_end = arc_start + arc_length;
    const bool on_line = std::all_of(angles.begin(), angles.end(), [&](double a) {
      const double from_start = std::abs(principal_angle(a - arc_start));
      const double from_end = std::abs(principal_angle(a - arc_end));
      return std::min(from_start, from_end) <= tolerance;
    });
    if (!on_line) {
      v.kind = ColopsidednessVerdict::Kind::Colopsided;
      v.witness = principal_angle(-centre);
      return v;
    }
    v.kind = ColopsidednessVerdict::Kind::RealDegenerate;
    v.line_direction = std::fmod(wrap_angle(arc_start), kPi);
    return v;
  }
  v.kind = ColopsidednessVerdict::Kind::Open;
  return v;
}

ColopsidednessVerdict colopsided_at(const PointConfiguration& config, const CoefficientVector& coeffs,
                                    const TorusPoint& theta) {
  return classify_phases(phase_vector(config, coeffs, theta));
}

bool lopsided_membership(const PointConfiguration& config, const CoefficientVector& coeffs,
                         const TorusPoint& theta) {
  return !colopsided_at(config, coeffs, theta).colopsided();
}

std::vector<LineFamily> shell(const PointConfiguration& config, const CoefficientVector& coeffs) {
  check_sizes(config, coeffs);
  std::vector<LineFamily> out;
  for (const auto& edge : planar_edges(config)) {
    const auto& first = config[edge.front()];
    const auto& last = config[edge.back()];
    std::int64_t dx = last[0] - first[0], dy = last[1] - first[1];
    const std::int64_t g = gcd2(dx, dy);
    dx /= g;
    dy /= g;
    // f_Γ = z^{first} Σ f_a w^{t_a} with w = z^{(dx, dy)}
    UnivariatePoly edge_poly;
    edge_poly.coeffs.assign(static_cast<std::size_t>(g) + 1, Complex(0));
    for (auto k : edge) {
      const std::int64_t t = dx != 0 ? (config[k][0] - first[0]) / dx : (config[k][1] - first[1]) / dy;
      edge_poly.coeffs[static_cast<std::size_t>(t)] += coeffs[k];
    }
    if (edge_poly.coeffs.front() == Complex(0) || edge_poly.coeffs.back() == Complex(0))
      throw Error(ErrorCode::DegenerateEdgePolynomial, "edge truncation loses an end monomial");

    IntVector normal{dx, dy};
    double sign = 1.0;
    if (dx < 0 || (dx == 0 && dy < 0)) {
      normal = {-dx, -dy};
      sign = -1.0;
    }
    std::vector<double> offsets;
    if (edge.size() == 2) {
      offsets.push_back(std::arg(-edge_poly.coeffs.front() / edge_poly.coeffs.back()));
    } else {
      for (const auto& r : roots(edge_poly)) offsets.push_back(std::arg(r.value));
    }
    for (double o : offsets) {
      LineFamily family{normal, wrap_angle(sign * o), edge};
      const bool seen = std::any_of(out.begin(), out.end(), [&](const LineFamily& f) {
        return f.normal == family.normal && std::abs(principal_angle(f.offset - family.offset)) <= 1e-12;
      });
      if (!seen) out.push_back(std::move(family));
    }
  }
  std::sort(out.begin(), out.end(), [](const LineFamily& a, const LineFamily& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  return out;
}

std::size_t order_basepoint(const PointConfiguration& config) {
  for (std::size_t k = 0; k < config.size(); ++k)
    if (std::all_of(config[k].begin(), config[k].end(), [](auto x) { return x == 0; })) return k;
  return 0;
}

double zonotope_half_length(const CircuitProfile& profile) {
  return kPi * static_cast<double>(profile.normalized_volume());
}

double order_map(const PointConfiguration& config, const CoefficientVector& coeffs, const TorusPoint& theta) {
  const CircuitProfile prof = profile(config);
  if (prof.degenerate()) throw Error(ErrorCode::DegenerateCircuit, "order map needs a nondegenerate circuit");
  const auto phases = phase_vector(config, coeffs, theta);
  const auto verdict = classify_phases(phases);
  if (!verdict.colopsided())
    throw Error(ErrorCode::NotInComplement, "f is not colopsided at this point");
  const std::size_t base = order_basepoint(config);
  double value = 0.0;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const double a = std::arg(phases[k] / phases[base]);
    if (std::abs(std::abs(a) - kPi) <= kAngleTolerance)
      throw Error(ErrorCode::AntipodalDegenerate, "two phases are antipodal; the principal branch is ambiguous");
    value += static_cast<double>(prof.primitive_gale[k]) * a;
  }
  return value;
}

IndexSet complement_index_set(const PointConfiguration& config, const CoefficientVector& coeffs) {
  check_sizes(config, coeffs);
  const CircuitProfile prof = profile(config);
  if (prof.degenerate()) throw Error(ErrorCode::DegenerateCircuit, "index sets need a nondegenerate circuit");
  IndexSet out;
  out.normalized_volume = prof.normalized_volume();
  out.lattice_index = prof.lattice_index;
  for (std::size_t k = 0; k < config.size(); ++k)
    out.base_value += static_cast<double>(prof.primitive_gale[k]) * std::arg(coeffs[k]);

  const double half = zonotope_half_length(prof);
  const double tol = 1e-9;
  // values base + 2πj strictly inside (-half, half)
  const double first = std::ceil((-half - out.base_value) / kTwoPi - 1.0);
  for (double j = first;; j += 1.0) {
    const double v = out.base_value + kTwoPi * j;
    if (v >= half - tol) {
      if (std::abs(v - half) <= tol) out.degenerate_alignment = true;
      break;
    }
    if (v > -half + tol) out.order_values.push_back(v);
    else if (std::abs(v + half) <= tol) out.degenerate_alignment = true;
  }
  return out;
}

}  // namespace coamoeba
