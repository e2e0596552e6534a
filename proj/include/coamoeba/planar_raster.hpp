#pragma once

// Rasters of planar coamoebas and lopsided coamoebas on the 2-torus, area
// estimates, and the covering statistics for trinomial quadruples.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "coamoeba/integer_geometry.hpp"
#include "coamoeba/numeric_kernel.hpp"
#include "coamoeba/phase_engine.hpp"

namespace coamoeba {

/// Bit grid over [0, 2π)^2. Pixel (row i, column j) is centred at
/// θ = ((j + 1/2) h, (i + 1/2) h) with h = 2π / resolution.
struct RasterImage {
  int resolution = 0;
  std::vector<std::uint8_t> bits;  // row-major

  RasterImage() = default;
  explicit RasterImage(int r) : resolution(r), bits(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0) {}

  bool at(int row, int col) const { return bits[static_cast<std::size_t>(row) * resolution + col] != 0; }
  void set(int row, int col) { bits[static_cast<std::size_t>(row) * resolution + col] = 1; }
  double pixel_area() const;
  std::size_t covered() const;
  TorusPoint centre(int row, int col) const;
  /// Binary PPM (P6), covered pixels black on white.
  std::string to_ppm() const;
};

double area(const RasterImage& image);

/// Exact test θ ∈ C_f (the argument image of the zero set) for planar
/// trinomials and circuits. Used per pixel by raster_coamoeba.
bool coamoeba_membership(const PointConfiguration& config, const CoefficientVector& coeffs, const TorusPoint& theta);

enum class RasterMethod { Exact, Pushforward };

/// Exact: per-pixel-centre membership. Pushforward: pixels hit by argument
/// images of sampled curve points (samples scale with the resolution).
RasterImage raster_coamoeba(const PointConfiguration& config, const CoefficientVector& coeffs, int resolution,
                            RasterMethod method = RasterMethod::Exact);

RasterImage raster_lopsided(const PointConfiguration& config, const CoefficientVector& coeffs, int resolution);

/// Number of connected components of the uncovered pixels, with the torus
/// wrap-around and 4-neighbour adjacency.
std::size_t complement_components(const RasterImage& image);

/// A trinomial together with its marked monomial. The quadruple consists of
/// the four sign flips of the two unmarked coefficients.
struct TrinomialQuadruple {
  PointConfiguration support;  // three points in the plane
  CoefficientVector coeffs;
  std::size_t marked = 0;

  std::vector<CoefficientVector> members() const;
};

struct CoverageStats {
  std::size_t samples = 0;   // samples actually tested
  std::size_t rejected = 0;  // draws too close to the degenerate lines
  std::map<int, std::size_t> histogram;  // count -> number of samples
};

/// At uniformly random θ away from the lines H_Σ (margin 1e-6) counts the
/// members whose closed coamoeba contains θ.
CoverageStats covering_check(const TrinomialQuadruple& quadruple, std::size_t samples, std::uint64_t seed);
/// Coverage count at one point (no margin check).
int coverage_at(const TrinomialQuadruple& quadruple, const TorusPoint& theta);

/// At random θ in L_f with no antipodal phases, counts the colopsided
/// truncated trinomials f_{k̂}.
CoverageStats two_colopsided_check(const PointConfiguration& config, const CoefficientVector& coeffs,
                                   std::size_t samples, std::uint64_t seed);

}  // namespace coamoeba
