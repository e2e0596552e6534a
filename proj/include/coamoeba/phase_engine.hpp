#pragma once

// Pointwise phase analysis on the real torus: phase vectors, the half-plane
// (colopsidedness) test, shells of planar polynomials, the order map and the
// set of order values that index complement components.
//
// Functions that only look at phases accept any point list (trinomials
// included); order_map and complement_index_set need a circuit.

#include <optional>
#include <string_view>
#include <vector>

#include "coamoeba/integer_geometry.hpp"
#include "coamoeba/numeric_kernel.hpp"

namespace coamoeba {

using TorusPoint = std::vector<double>;

inline constexpr double kAngleTolerance = 1e-12;

/// Reduces an angle to [0, 2π).
double wrap_angle(double x);
/// Signed representative of x modulo 2π in (-π, π].
double principal_angle(double x);
/// Principal argument in (-π, π].
inline double arg_pi(Complex z) { return std::arg(z); }
/// Componentwise distance on T^n (max of angular distances).
double torus_distance(const TorusPoint& a, const TorusPoint& b);

struct ColopsidednessVerdict {
  enum class Kind { Colopsided, Open, RealDegenerate };
  Kind kind = Kind::Open;
  double witness = 0.0;         // φ with Re(e^{iφ} f̂_k) ≥ 0 for all k (Colopsided)
  double line_direction = 0.0;  // angle of the common line (RealDegenerate), in [0, π)
  double max_gap = 0.0;         // greatest angular gap between consecutive phases

  bool colopsided() const { return kind == Kind::Colopsided; }
};

std::string_view to_string(ColopsidednessVerdict::Kind kind);

/// f̂_k(θ) = exp(i(arg f_k + ⟨a_k, θ⟩)).
std::vector<Complex> phase_vector(const PointConfiguration& config, const CoefficientVector& coeffs,
                                  const TorusPoint& theta);

/// Half-plane test on a list of unit phases.
ColopsidednessVerdict classify_phases(const std::vector<Complex>& phases,
                                      double tolerance = kAngleTolerance);

ColopsidednessVerdict colopsided_at(const PointConfiguration& config, const CoefficientVector& coeffs,
                                    const TorusPoint& theta);

/// θ ∈ L_f, i.e. f is not colopsided at θ.
bool lopsided_membership(const PointConfiguration& config, const CoefficientVector& coeffs,
                         const TorusPoint& theta);

/// Family of parallel torus lines {θ : ⟨normal, θ⟩ ≡ offset (mod 2π)}.
/// `normal` is primitive with first nonzero entry positive.
struct LineFamily {
  IntVector normal;
  double offset = 0.0;  // in [0, 2π)
  std::vector<std::size_t> edge;  // points of the edge that produced it
};

/// Shell of a planar polynomial: coamoebas of all edge truncations.
std::vector<LineFamily> shell(const PointConfiguration& config, const CoefficientVector& coeffs);

/// Point whose monomial the phases are divided by before taking Arg_π.
std::size_t order_basepoint(const PointConfiguration& config);

/// Order map Σ_k b_k Arg_π(f̂_k(θ) / f̂_base(θ)) with the primitive Gale vector.
double order_map(const PointConfiguration& config, const CoefficientVector& coeffs, const TorusPoint& theta);

/// Half length π·Vol(A) of the one-dimensional zonotope, Vol in the lattice ZA.
double zonotope_half_length(const CircuitProfile& profile);

struct IndexSet {
  std::vector<double> order_values;  // increasing
  double base_value = 0.0;           // Σ b_k Arg_π(f_k)
  bool degenerate_alignment = false;  // base value ≡ π·Vol, so an endpoint is lost
  std::int64_t normalized_volume = 0;
  std::int64_t lattice_index = 1;

  std::size_t cardinality() const { return order_values.size(); }
  /// Complement components on the original torus (each lifts lattice_index times).
  std::size_t components_on_torus() const { return order_values.size() * static_cast<std::size_t>(lattice_index); }
};

IndexSet complement_index_set(const PointConfiguration& config, const CoefficientVector& coeffs);

}  // namespace coamoeba
