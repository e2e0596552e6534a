#include "coamoeba/numeric_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? r - kTwoPi : r;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (std::size_t j = c.size(); j-- > 1;) acc = acc * z + static_cast<double>(j) * c[j];
  return acc;
}

// Simultaneous Aberth-Ehrlich correction. A step is kept only if it lowers
// the residual, so the companion-matrix eigenvalues are never made worse.
void aberth_polish(const std::vector<Complex>& c, std::vector<Complex>& z) {
  const std::size_t d = z.size();
  for (int iter = 0; iter < 60; ++iter) {
    double largest_step = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const Complex p = horner(c, z[k]);
      if (p == Complex(0)) continue;
      const Complex dp = horner_derivative(c, z[k]);
      if (dp == Complex(0)) continue;
      const Complex ratio = p / dp;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k && z[j] != z[k]) repulsion += 1.0 / (z[k] - z[j]);
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      const Complex candidate = z[k] - step;
      if (std::abs(horner(c, candidate)) < std::abs(p)) {
        z[k] = candidate;
        largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
      }
    }
    if (largest_step < 1e-16) break;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomials

Complex UnivariatePoly::operator()(Complex z) const {
  return horner(coeffs, z) * std::pow(z, offset);
}

UnivariatePoly UnivariatePoly::trimmed() const {
  std::size_t lo = 0, hi = coeffs.size();
  while (lo < hi && coeffs[lo] == Complex(0)) ++lo;
  while (hi > lo && coeffs[hi - 1] == Complex(0)) --hi;
  UnivariatePoly out;
  out.coeffs.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                    coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  out.offset = offset + static_cast<int>(lo);
  return out;
}

double UnivariatePoly::norm() const {
  double m = 0.0;
  for (auto c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

Complex LaurentPolynomial::operator()(const std::vector<Complex>& z) const {
  Complex acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Complex term = coeffs[k];
    for (std::size_t i = 0; i < z.size(); ++i)
      term *= std::pow(z[i], static_cast<int>(exponents[k][i]));
    acc += term;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::toric_derivative(std::size_t i) const {
  LaurentPolynomial d = *this;
  for (std::size_t k = 0; k < coeffs.size(); ++k) d.coeffs[k] *= static_cast<double>(exponents[k][i]);
  return d;
}

double LaurentPolynomial::scale_at(const std::vector<Complex>& z) const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    double term = std::abs(coeffs[k]);
    for (std::size_t i = 0; i < z.size(); ++i)
      term *= std::pow(std::abs(z[i]), static_cast<double>(exponents[k][i]));
    s = std::max(s, term);
  }
  return s;
}

LaurentPolynomial make_polynomial(const PointConfiguration& config, const CoefficientVector& coeffs) {
  if (coeffs.size() != config.size())
    throw Error(ErrorCode::InvalidInput, "need one coefficient per point");
  return {config.dimension, config.points, coeffs};
}

// ---------------------------------------------------------------------------
// Univariate roots

std::vector<Complex> root_list(const UnivariatePoly& poly) {
  const UnivariatePoly t = poly.trimmed();
  if (t.degree() < 1) throw Error(ErrorCode::DegenerateInput, "polynomial has no roots in C*");
  const int d = t.degree();
  std::vector<Complex> z;
  if (d == 1) {
    z.push_back(-t.coeffs[0] / t.coeffs[1]);
    return z;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -t.coeffs[static_cast<std::size_t>(i)] / t.coeffs.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  for (int i = 0; i < d; ++i) z.push_back(ev(i));
  aberth_polish(t.coeffs, z);
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    return std::arg(a) != std::arg(b) ? std::arg(a) < std::arg(b) : std::abs(a) < std::abs(b);
  });
  return z;
}

std::vector<Root> roots(const UnivariatePoly& poly) {
  const auto z = root_list(poly);
  std::vector<std::size_t> parent(z.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (std::abs(z[i] - z[j]) < 1e-7 * std::max(std::abs(z[i]), std::abs(z[j])))
        parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<Complex>> groups;
  for (std::size_t i = 0; i < z.size(); ++i) groups[find(i)].push_back(z[i]);
  std::vector<Root> out;
  for (auto& [_, members] : groups) {
    Complex mean = 0;
    for (auto m : members) mean += m;
    out.push_back({mean / static_cast<double>(members.size()), static_cast<int>(members.size())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binomial systems

std::vector<Complex> TorusSolution::point() const {
  std::vector<Complex> z(arguments.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::polar(std::exp(log_moduli[i]), arguments[i]);
  return z;
}

std::vector<TorusSolution> solve_binomial_system(const BinomialSystem& system) {
  const std::size_t n = system.exponents.size();
  if (n == 0 || system.targets.size() != n)
    throw Error(ErrorCode::InvalidInput, "binomial system must be square");
  for (const auto& row : system.exponents)
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "binomial system must be square");
  if (determinant(to_big(system.exponents)) == 0)
    throw Error(ErrorCode::SingularExponentMatrix, "exponent matrix has determinant zero");
  for (auto c : system.targets)
    if (c == Complex(0)) throw Error(ErrorCode::InvalidInput, "binomial targets must be nonzero");

  // moduli: M log|z| = log|c| over the reals
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs(static_cast<Eigen::Index>(i)) = std::log(std::abs(system.targets[i]));
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(system.exponents[i][j]);
  }
  const Eigen::VectorXd logs = m.fullPivLu().solve(rhs);

  // arguments: M θ ≡ arg c (mod 2π), exactly |det M| cosets
  CongruenceSystem congruences{system.exponents, {}};
  for (auto c : system.targets) congruences.rhs.push_back(std::arg(c));
  const auto sol = solve_congruences(congruences, 1e-9);

  std::vector<TorusSolution> out;
  for (const auto& theta : sol.solutions) {
    TorusSolution s;
    s.log_moduli.assign(logs.data(), logs.data() + n);
    s.arguments = theta;
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Curve sampling

CurveSample curve_fibers(const PointConfiguration& config, const CoefficientVector& coeffs,
                         const std::vector<Complex>& z1_values) {
  if (config.dimension != 2) throw Error(ErrorCode::InvalidInput, "curve sampling needs n = 2");
  if (coeffs.size() != config.size()) throw Error(ErrorCode::InvalidInput, "need one coefficient per point");
  std::int64_t lo = config[0][1], hi = config[0][1];
  for (const auto& p : config.points) lo = std::min(lo, p[1]), hi = std::max(hi, p[1]);

  CurveSample out;
  for (const Complex z1 : z1_values) {
    UnivariatePoly fiber;
    fiber.offset = static_cast<int>(lo);
    fiber.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Complex(0));
    double scale = 0.0;
    for (std::size_t k = 0; k < config.size(); ++k) {
      const Complex term = coeffs[k] * std::pow(z1, static_cast<int>(config[k][0]));
      fiber.coeffs[static_cast<std::size_t>(config[k][1] - lo)] += term;
      scale = std::max(scale, std::abs(term));
    }
    // a vanishing end coefficient means the fiber drops degree (or is empty)
    if (std::abs(fiber.coeffs.front()) < 1e-13 * scale || std::abs(fiber.coeffs.back()) < 1e-13 * scale) {
      ++out.skipped_fibers;
      continue;
    }
    if (fiber.degree() < 1) continue;
    const double a1 = wrap(std::arg(z1));
    for (auto w : root_list(fiber)) out.arguments.push_back({a1, wrap(std::arg(w))});
  }
  if (out.arguments.empty()) throw Error(ErrorCode::EmptyCurve, "no fiber produced a root");
  return out;
}

CurveSample curve_sample(const PointConfiguration& config, const CoefficientVector& coeffs,
                         const CurveGrid& grid) {
  std::vector<Complex> z1;
  z1.reserve(static_cast<std::size_t>(grid.radius_steps) * static_cast<std::size_t>(grid.angle_steps));
  for (int i = 0; i < grid.radius_steps; ++i) {
    const double rho = -grid.log_radius_span + 2.0 * grid.log_radius_span * (i + 0.5) / grid.radius_steps;
    for (int j = 0; j < grid.angle_steps; ++j)
      z1.push_back(std::polar(std::exp(rho), kTwoPi * (j + 0.5) / grid.angle_steps));
  }
  return curve_fibers(config, coeffs, z1);
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

struct ShiftedBivariate {
  // coeff[x][y] for the eliminated variable x and kept variable y
  std::vector<std::vector<Complex>> coeff;
  std::size_t x_degree = 0, y_degree = 0;
};

ShiftedBivariate shift(const LaurentPolynomial& p, std::size_t eliminate) {
  if (p.dimension != 2) throw Error(ErrorCode::InvalidInput, "resultants need bivariate input");
  if (p.coeffs.empty()) throw Error(ErrorCode::InvalidInput, "empty polynomial");
  const std::size_t keep = 1 - eliminate;
  std::int64_t xmin = p.exponents[0][eliminate], xmax = xmin, ymin = p.exponents[0][keep], ymax = ymin;
  for (const auto& e : p.exponents) {
    xmin = std::min(xmin, e[eliminate]), xmax = std::max(xmax, e[eliminate]);
    ymin = std::min(ymin, e[keep]), ymax = std::max(ymax, e[keep]);
  }
  ShiftedBivariate s;
  s.x_degree = static_cast<std::size_t>(xmax - xmin);
  s.y_degree = static_cast<std::size_t>(ymax - ymin);
  s.coeff.assign(s.x_degree + 1, std::vector<Complex>(s.y_degree + 1, 0.0));
  for (std::size_t k = 0; k < p.coeffs.size(); ++k)
    s.coeff[static_cast<std::size_t>(p.exponents[k][eliminate] - xmin)]
           [static_cast<std::size_t>(p.exponents[k][keep] - ymin)] += p.coeffs[k];
  return s;
}

std::vector<Complex> at(const ShiftedBivariate& s, Complex y) {
  std::vector<Complex> c(s.x_degree + 1);
  for (std::size_t x = 0; x <= s.x_degree; ++x) c[x] = horner(s.coeff[x], y);
  return c;
}

}  // namespace

UnivariatePoly sylvester_resultant(const LaurentPolynomial& p, const LaurentPolynomial& q, std::size_t eliminate) {
  if (eliminate > 1) throw Error(ErrorCode::InvalidInput, "eliminate must be 0 or 1");
  const ShiftedBivariate sp = shift(p, eliminate), sq = shift(q, eliminate);
  const std::size_t dp = sp.x_degree, dq = sq.x_degree, size = dp + dq;
  if (size == 0) return {{Complex(1)}, 0};

  const std::size_t bound = dq * sp.y_degree + dp * sq.y_degree;
  const std::size_t samples = bound + 1;
  std::vector<Complex> values(samples);
  double hadamard = 0.0;
  for (std::size_t m = 0; m < samples; ++m) {
    const Complex y = std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(samples));
    const auto a = at(sp, y), b = at(sq, y);
    Eigen::MatrixXcd syl = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (std::size_t r = 0; r < dq; ++r)
      for (std::size_t j = 0; j <= dp; ++j)
        syl(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r + j)) = a[dp - j];
    for (std::size_t r = 0; r < dp; ++r)
      for (std::size_t j = 0; j <= dq; ++j)
        syl(static_cast<Eigen::Index>(dq + r), static_cast<Eigen::Index>(r + j)) = b[dq - j];
    double rows = 1.0;
    for (Eigen::Index r = 0; r < syl.rows(); ++r) rows *= syl.row(r).norm();
    hadamard = std::max(hadamard, rows);
    values[m] = syl.partialPivLu().determinant();
  }

  double largest = 0.0;
  for (auto v : values) largest = std::max(largest, std::abs(v));
  if (!(largest > 1e-10 * hadamard))
    throw Error(ErrorCode::IdenticallyZeroResultant, "the two polynomials share a common factor");

  // inverse DFT recovers the coefficients in the kept variable
  UnivariatePoly r;
  r.coeffs.assign(samples, 0.0);
  for (std::size_t j = 0; j < samples; ++j) {
    Complex acc = 0;
    for (std::size_t m = 0; m < samples; ++m)
      acc += values[m] * std::polar(1.0, -kTwoPi * static_cast<double>(j * m % samples) / static_cast<double>(samples));
    r.coeffs[j] = acc / static_cast<double>(samples);
  }
  const double norm = r.norm();
  for (auto& c : r.coeffs)
    if (std::abs(c) < 1e-11 * norm) c = 0;
  r = r.trimmed();
  r.offset = 0;
  return r;
}

}  // namespace coamoeba
