#pragma once

// Numeric engines shared by the other modules: univariate Laurent roots,
// binomial systems on the complex torus, fiber sampling of planar curves,
// and Sylvester resultants.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "coamoeba/integer_geometry.hpp"

namespace coamoeba {

using Complex = std::complex<double>;
using CoefficientVector = std::vector<Complex>;

/// sum_j coeffs[j] * z^(offset + j)
struct UnivariatePoly {
  std::vector<Complex> coeffs;
  int offset = 0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator()(Complex z) const;
  /// Drops exactly-zero leading and trailing coefficients.
  UnivariatePoly trimmed() const;
  double norm() const;  // max |coefficient|
};

/// Sparse Laurent polynomial in `dimension` variables.
struct LaurentPolynomial {
  int dimension = 0;
  std::vector<IntVector> exponents;
  std::vector<Complex> coeffs;

  Complex operator()(const std::vector<Complex>& z) const;
  /// Partial derivative z_i * d/dz_i.
  LaurentPolynomial toric_derivative(std::size_t i) const;
  /// Largest |coefficient * z^a| at the point z; used to scale residuals.
  double scale_at(const std::vector<Complex>& z) const;
};

LaurentPolynomial make_polynomial(const PointConfiguration& config, const CoefficientVector& coeffs);

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// Roots in C_* of a Laurent polynomial, clustered into multiplicities.
std::vector<Root> roots(const UnivariatePoly& poly);
/// Same roots listed with repetition (exactly `degree` of them after trimming).
std::vector<Complex> root_list(const UnivariatePoly& poly);

/// Equations z^{exponents row i} = targets[i].
struct BinomialSystem {
  IntMatrix exponents;
  std::vector<Complex> targets;
};

struct TorusSolution {
  std::vector<double> log_moduli;
  std::vector<double> arguments;  // in [0, 2π)
  std::vector<Complex> point() const;
};

std::vector<TorusSolution> solve_binomial_system(const BinomialSystem& system);

struct CurveGrid {
  int radius_steps = 64;        // samples of log|z_1|
  double log_radius_span = 6;   // log|z_1| in [-span, span]
  int angle_steps = 256;        // samples of arg z_1
};

struct CurveSample {
  std::vector<std::array<double, 2>> arguments;  // (arg z_1, arg z_2) in [0, 2π)
  std::size_t skipped_fibers = 0;
};

/// Argument images of points of Z(f) for n = 2, fibered over z_1.
CurveSample curve_sample(const PointConfiguration& config, const CoefficientVector& coeffs,
                         const CurveGrid& grid);
/// Argument images of the fiber roots over the given z_1 values.
CurveSample curve_fibers(const PointConfiguration& config, const CoefficientVector& coeffs,
                         const std::vector<Complex>& z1_values);

/// Resultant of two bivariate Laurent polynomials with respect to variable
/// `eliminate` (0 or 1), as a Laurent polynomial in the other variable with
/// monomial factors in the kept variable removed. Computed by evaluation at
/// roots of unity and interpolation.
UnivariatePoly sylvester_resultant(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                   std::size_t eliminate);

}  // namespace coamoeba
