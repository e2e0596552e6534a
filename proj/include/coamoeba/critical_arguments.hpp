#pragma once

// Critical points of circuit polynomials in special orthogonal form and the
// check that their arguments index the complement of the coamoeba.

#include <optional>
#include <vector>

#include "coamoeba/integer_geometry.hpp"
#include "coamoeba/numeric_kernel.hpp"
#include "coamoeba/phase_engine.hpp"

namespace coamoeba {

struct CriticalPoint {
  std::vector<Complex> point;
  TorusPoint argument;
  double residual = 0.0;  // max_i |z_i ∂_i f| relative to the term scale
};

struct CriticalSet {
  std::vector<CriticalPoint> points;
  SpecialFormLayout layout;
};

/// All critical points in C_*^n. Requires special orthogonal form.
CriticalSet critical_set(const PointConfiguration& config, const CoefficientVector& coeffs);

struct CriticalArgumentCheck {
  TorusPoint argument;
  ColopsidednessVerdict verdict;
  std::optional<double> order_value;  // colopsided arguments only
  bool aligned = false;  // phases within each sign class agree (up to the sign δ)
};

struct IndexSetReport {
  std::vector<CriticalArgumentCheck> arguments;
  IndexSet index_set;
  std::size_t colopsided_count = 0;
  bool orders_distinct = false;
  bool counts_match = false;          // colopsided_count == index_set cardinality
  bool non_colopsided_aligned = false;  // every non-colopsided argument is δ-aligned

  bool ok() const { return orders_distinct && counts_match && non_colopsided_aligned; }
};

IndexSetReport verify_index_set(const PointConfiguration& config, const CoefficientVector& coeffs);

}  // namespace coamoeba
