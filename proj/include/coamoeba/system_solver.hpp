#pragma once

// Systems of two polynomials on a planar circuit: reduction to a pair of
// trinomials sharing two monomials, root solving by a hidden-variable
// resultant, and the census of roots per argument sector.

#include <cstdint>
#include <random>
#include <vector>

#include "coamoeba/integer_geometry.hpp"
#include "coamoeba/numeric_kernel.hpp"
#include "coamoeba/phase_engine.hpp"

namespace coamoeba {

/// F1 = c1 z^{a0} + z^{a2} + c2 z^{a3},  F2 = c3 z^{a1} + z^{a2} + c4 z^{a3}.
struct CircuitSystem {
  PointConfiguration support;  // points in the order a0, a1, a2, a3
  Complex c1{1.0}, c2{1.0}, c3{1.0}, c4{1.0};
  std::vector<std::size_t> roles;  // roles[j] = index of a_j in the caller's support
  bool interior_line = false;      // line through a2, a3 strictly separates a0 and a1

  LaurentPolynomial first() const;
  LaurentPolynomial second() const;
};

/// Builds a system already in trinomial shape; checks the interior-line property.
CircuitSystem make_system(const PointConfiguration& support, Complex c1, Complex c2, Complex c3, Complex c4);

/// Row-reduces two polynomials on the same 4-point planar support so that
/// each loses one monomial. The role assignment is the first permutation (in
/// lexicographic order, identity first) whose a2-a3 line separates a0 from a1.
CircuitSystem reduce_to_trinomials(const PointConfiguration& support, const CoefficientVector& p,
                                   const CoefficientVector& q);

struct SystemRoot {
  std::vector<Complex> point;
  TorusPoint argument;
  double residual = 0.0;  // max(|F1|, |F2|) relative to the term scale
};

std::vector<SystemRoot> solve_system(const CircuitSystem& system);

struct SectorCluster {
  std::vector<std::size_t> members;  // indices into the root list
  TorusPoint argument;
  bool nonreal = false;  // one of the trinomials is not real at this argument
};

struct SectorReport {
  std::vector<SectorCluster> clusters;
  std::size_t max_cluster = 0;
  std::size_t oversized_clusters = 0;  // size ≥ 3
  std::size_t nonreal_violations = 0;  // nonreal clusters of size ≥ 2
  std::size_t refined_pairs = 0;       // near-threshold pairs re-checked in extended precision
};

SectorReport sector_census(const CircuitSystem& system, const std::vector<SystemRoot>& roots,
                           double tolerance = 1e-6);

/// True when neither trinomial is colopsided at θ.
bool system_lopsided_membership(const CircuitSystem& system, const TorusPoint& theta);

/// Roots of a real system come in conjugate pairs; true when every root's
/// conjugate is also a root (relative tolerance).
bool conjugation_closed(const std::vector<SystemRoot>& roots, double tolerance = 1e-8);

/// Random planar simplex circuit: a lattice triangle of normalized volume at
/// most `max_volume` with one interior lattice point, in random order.
PointConfiguration random_simplex_circuit(std::mt19937_64& rng, std::int64_t max_volume);

struct CampaignSummary {
  std::size_t trials = 0;
  std::size_t solved = 0;            // systems that reduced and solved
  std::size_t skipped = 0;           // singular eliminations or non-generic draws
  std::size_t generic = 0;           // root count == Vol(A)
  std::size_t real_systems = 0;
  std::size_t conjugation_failures = 0;
  std::size_t max_cluster = 0;
  std::size_t oversized_clusters = 0;   // sectors holding 3 or more roots
  std::size_t nonreal_violations = 0;   // nonreal sectors holding 2 or more roots
  std::size_t refined_pairs = 0;
  double max_residual = 0.0;
};

/// Random simplex-circuit systems with Vol(A) ≤ max_volume; half of them
/// with real coefficients.
CampaignSummary fewnomial_campaign(std::size_t trials, std::uint64_t seed, std::int64_t max_volume = 8);

}  // namespace coamoeba
