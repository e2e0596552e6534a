#pragma once

// The binomial A-discriminant of a circuit, its reduced form, membership in
// the discriminant coamoeba, and the U0/U1 classification of coefficients.

#include <optional>
#include <string>

#include "coamoeba/integer_geometry.hpp"
#include "coamoeba/numeric_kernel.hpp"
#include "coamoeba/phase_engine.hpp"

namespace coamoeba {

/// Δ(f) = plus_constant · Π f_k^{plus_exponents_k} − minus_constant · Π f_k^{minus_exponents_k}
/// with b the primitive Gale vector: the first monomial carries f_k^{-b_k} over
/// b_k < 0 and the constant Π_{b_k>0} b_k^{b_k}; the second carries f_k^{b_k}
/// over b_k > 0 and the constant Π_{b_k<0} b_k^{-b_k} (signed).
struct CircuitDiscriminant {
  CircuitProfile profile;
  BigInt plus_constant;
  BigInt minus_constant;
  IntVector plus_exponents;
  IntVector minus_exponents;

  Complex operator()(const CoefficientVector& f) const;
  /// ξ = Π f_k^{b_k}.
  Complex reduced_variable(const CoefficientVector& f) const;
  /// Δ_B(ξ) = plus_constant − minus_constant · ξ (Δ divided by its first monomial).
  Complex reduced(Complex xi) const;
  /// Δ as a polynomial in the single coefficient f_kappa, the others fixed.
  UnivariatePoly specialize(const CoefficientVector& f, std::size_t kappa) const;
  /// Human-readable form such as "f1^2 - 4*f0*f2".
  std::string to_string() const;
};

CircuitDiscriminant discriminant(const PointConfiguration& config);

struct DiscriminantCoamoebaTest {
  bool member = false;
  TorusPoint theta;    // witness argument vector
  double phase = 0.0;  // global rotation φ with e^{iφ} f̂_k(θ) = δ_k
  bool scalar_member = false;  // the Gale-pairing cross-check
  double scalar_residual = 0.0;  // distance of the pairing from its target, mod 2π·gcd
};

DiscriminantCoamoebaTest in_discriminant_coamoeba(const PointConfiguration& config, const CoefficientVector& coeffs,
                                                  double tolerance = 1e-9);

enum class SpaceLabel { U0, U1 };
std::string_view to_string(SpaceLabel label);

struct SpaceClass {
  SpaceLabel label = SpaceLabel::U0;
  std::string certificate;
  std::optional<TorusPoint> witness;
  /// Simplex circuits in the discriminant coamoeba: minimum over the positive
  /// orthant of the δ-signed restriction divided by the interior monomial.
  std::optional<double> restriction_minimum;
  /// (-1)^Vol Δ(δ|f|); U1 holds exactly when this is ≥ 0 (sign calibrated
  /// against the constructive test, see README).
  std::optional<double> signed_discriminant;
  std::size_t expected_components = 0;  // Vol or Vol - 1, in the lattice ZA
};

SpaceClass classify_space(const PointConfiguration& config, const CoefficientVector& coeffs);

}  // namespace coamoeba
