#include "coamoeba/discriminant.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

constexpr double kPi = std::numbers::pi;

Complex monomial(const CoefficientVector& f, const IntVector& exponents) {
  Complex acc = 1.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (exponents[k] != 0) acc *= std::pow(f[k], static_cast<int>(exponents[k]));
  return acc;
}

}  // namespace

CircuitDiscriminant discriminant(const PointConfiguration& config) {
  CircuitDiscriminant d;
  d.profile = profile(config);
  if (d.profile.degenerate()) throw Error(ErrorCode::DegenerateCircuit, "pyramids have no binomial discriminant");
  const auto& b = d.profile.primitive_gale;
  d.plus_constant = 1;
  d.minus_constant = 1;
  d.plus_exponents.assign(b.size(), 0);
  d.minus_exponents.assign(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] > 0) {
      d.plus_constant *= boost::multiprecision::pow(BigInt(b[k]), static_cast<unsigned>(b[k]));
      d.minus_exponents[k] = b[k];
    } else {
      d.minus_constant *= boost::multiprecision::pow(BigInt(b[k]), static_cast<unsigned>(-b[k]));
      d.plus_exponents[k] = -b[k];
    }
  }
  return d;
}

Complex CircuitDiscriminant::operator()(const CoefficientVector& f) const {
  if (f.size() != plus_exponents.size()) throw Error(ErrorCode::InvalidInput, "need one coefficient per point");
  return static_cast<double>(plus_constant) * monomial(f, plus_exponents) -
         static_cast<double>(minus_constant) * monomial(f, minus_exponents);
}

Complex CircuitDiscriminant::reduced_variable(const CoefficientVector& f) const {
  if (f.size() != plus_exponents.size()) throw Error(ErrorCode::InvalidInput, "need one coefficient per point");
  return monomial(f, minus_exponents) / monomial(f, plus_exponents);
}

Complex CircuitDiscriminant::reduced(Complex xi) const {
  return static_cast<double>(plus_constant) - static_cast<double>(minus_constant) * xi;
}

UnivariatePoly CircuitDiscriminant::specialize(const CoefficientVector& f, std::size_t kappa) const {
  if (kappa >= f.size()) throw Error(ErrorCode::InvalidInput, "coefficient index out of range");
  CoefficientVector others = f;
  others[kappa] = 1.0;
  const auto hi = static_cast<std::size_t>(std::max(plus_exponents[kappa], minus_exponents[kappa]));
  UnivariatePoly p;
  p.coeffs.assign(hi + 1, Complex(0));
  p.coeffs[static_cast<std::size_t>(plus_exponents[kappa])] +=
      static_cast<double>(plus_constant) * monomial(others, plus_exponents);
  p.coeffs[static_cast<std::size_t>(minus_exponents[kappa])] -=
      static_cast<double>(minus_constant) * monomial(others, minus_exponents);
  return p;
}

std::string CircuitDiscriminant::to_string() const {
  auto term = [](const BigInt& c, const IntVector& e) {
    std::ostringstream os;
    bool first = true;
    if (c != 1) {
      os << c;
      first = false;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first) os << '*';
      os << 'f' << k;
      if (e[k] != 1) os << '^' << e[k];
      first = false;
    }
    return os.str();
  };
  const bool plus = minus_constant < 0;
  return term(plus_constant, plus_exponents) + (plus ? " + " : " - ") +
         term(plus ? BigInt(-minus_constant) : minus_constant, minus_exponents);
}

DiscriminantCoamoebaTest in_discriminant_coamoeba(const PointConfiguration& config, const CoefficientVector& coeffs,
                                                  double tolerance) {
  const CircuitProfile prof = profile(config);
  if (prof.degenerate()) throw Error(ErrorCode::DegenerateCircuit, "discriminant coamoeba needs a nondegenerate circuit");
  if (coeffs.size() != config.size()) throw Error(ErrorCode::InvalidInput, "need one coefficient per point");

  // φ + arg f_k + ⟨a_k, θ⟩ ≡ arg δ_k for all k
  CongruenceSystem system;
  double pairing = 0.0;
  for (std::size_t k = 0; k < config.size(); ++k) {
    IntVector row = config[k];
    row.push_back(1);
    system.lhs.push_back(std::move(row));
    const double target = (prof.signs[k] < 0 ? kPi : 0.0) - std::arg(coeffs[k]);
    system.rhs.push_back(target);
    pairing += static_cast<double>(prof.primitive_gale[k]) * target;
  }
  DiscriminantCoamoebaTest out;
  out.scalar_residual = std::abs(principal_angle(pairing));
  out.scalar_member = out.scalar_residual <= tolerance;

  const auto solution = solve_congruences(system, tolerance);
  out.member = solution.consistent;
  if (out.member && !solution.solutions.empty()) {
    const auto& s = solution.solutions.front();
    out.theta.assign(s.begin(), s.end() - 1);
    out.phase = principal_angle(s.back());
  }
  return out;
}

std::string_view to_string(SpaceLabel label) { return label == SpaceLabel::U0 ? "U0" : "U1"; }

SpaceClass classify_space(const PointConfiguration& config, const CoefficientVector& coeffs) {
  const CircuitDiscriminant disc = discriminant(config);
  const CircuitProfile& prof = disc.profile;
  const auto volume = static_cast<std::size_t>(prof.normalized_volume());
  SpaceClass out;

  const auto test = in_discriminant_coamoeba(config, coeffs);
  if (!test.member) {
    out.label = SpaceLabel::U0;
    out.certificate = "off_discriminant_coamoeba";
    out.expected_components = volume;
    return out;
  }
  out.witness = test.theta;
  if (prof.kind == CircuitKind::VertexCircuit) {
    out.label = SpaceLabel::U1;
    out.certificate = "vertex_discriminant_coamoeba";
    out.expected_components = volume - 1;
    return out;
  }

  // Simplex circuit. At the witness the polynomial rotates to the real
  // δ-signed restriction Σ_vert |f_k| r^{a_k} − |f_int| r^{a_int}; it has a
  // positive zero iff its quotient by r^{a_int} has nonpositive minimum.
  const std::size_t interior = *prof.interior_point;
  const std::size_t n = static_cast<std::size_t>(config.dimension);
  const double vol = static_cast<double>(prof.total_volume);
  BinomialSystem critical;
  double closed_form_log = 0.0;
  for (std::size_t k = 0; k < config.size(); ++k) {
    if (k == interior) continue;
    // |f_k| r^{u_k} = λ_k s with λ_k = V_k / Vol at the minimiser
    IntVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = config[k][i] - config[interior][i];
    row[n] = -1;
    const double lambda = static_cast<double>(prof.volumes[k]) / vol;
    critical.exponents.push_back(std::move(row));
    critical.targets.emplace_back(lambda / std::abs(coeffs[k]), 0.0);
    closed_form_log += lambda * std::log(std::abs(coeffs[k]) / lambda);
  }
  const auto solutions = solve_binomial_system(critical);
  const double minimum_sum = std::exp(solutions.front().log_moduli[n]);
  if (std::abs(minimum_sum - std::exp(closed_form_log)) > 1e-8 * minimum_sum)
    throw Error(ErrorCode::NumericallyIndeterminate, "critical point of the positive restriction is unstable");

  const double fint = std::abs(coeffs[interior]);
  const double m = minimum_sum - fint;
  out.restriction_minimum = m;
  {
    CoefficientVector signed_moduli(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) signed_moduli[k] = prof.signs[k] * std::abs(coeffs[k]);
    const double parity = prof.normalized_volume() % 2 == 0 ? 1.0 : -1.0;
    out.signed_discriminant = parity * disc(signed_moduli).real();
  }

  const double scale = std::max(minimum_sum, fint);
  if (std::abs(m) <= 1e-10 * scale) {
    // on the discriminant: the witness is in the closed coamoeba iff the
    // tangential zero r* e^{iθ*} really is a zero of f
    const auto& logs = solutions.front().log_moduli;
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = std::polar(std::exp(logs[i]), test.theta[i]);
    const LaurentPolynomial f = make_polynomial(config, coeffs);
    if (std::abs(f(z)) <= 1e-8 * f.scale_at(z)) {
      out.label = SpaceLabel::U1;
      out.certificate = "boundary_zero_at_witness";
      out.expected_components = volume - 1;
      return out;
    }
    throw Error(ErrorCode::NumericallyIndeterminate, "coefficients lie on the discriminant within tolerance");
  }
  if (m < 0) {
    out.label = SpaceLabel::U1;
    out.certificate = "positive_restriction_vanishes";
    out.expected_components = volume - 1;
  } else {
    out.label = SpaceLabel::U0;
    out.certificate = "positive_restriction_positive";
    out.expected_components = volume;
  }
  return out;
}

}  // namespace coamoeba
