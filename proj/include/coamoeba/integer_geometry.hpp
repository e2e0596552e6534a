#pragma once

// Exact integer lattice geometry of circuits: validation, Gale duals,
// volumes and signs, the two coherent triangulations, lattice
// normalization, orthogonal form, and congruence solving on the torus.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coamoeba {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major
using BigMatrix = std::vector<std::vector<BigInt>>;

/// A circuit: n + 2 integer points in Z^n whose convex hull is n-dimensional.
struct PointConfiguration {
  int dimension = 0;
  std::vector<IntVector> points;

  std::size_t size() const { return points.size(); }
  const IntVector& operator[](std::size_t k) const { return points[k]; }
  bool operator==(const PointConfiguration&) const = default;
};

enum class CircuitKind { VertexCircuit, SimplexCircuit, Degenerate };

std::string_view to_string(CircuitKind kind);

/// One maximal simplex A_k = A \ {a_k} of a circuit triangulation.
struct Simplex {
  std::size_t omitted = 0;
  std::vector<std::size_t> vertices;
  std::int64_t volume = 0;
};

struct Triangulations {
  std::vector<Simplex> plus;   // simplices A_k with sign +1
  std::vector<Simplex> minus;  // simplices A_k with sign -1
};

struct CircuitProfile {
  IntVector raw_gale;        // b_k = (-1)^k det(A_k), oriented
  IntVector primitive_gale;  // raw_gale / gale_gcd
  std::int64_t gale_gcd = 1;
  IntVector volumes;         // V_k = |b_k|
  std::vector<int> signs;    // delta_k in {-1, 0, +1}; 0 only on degenerate circuits
  std::int64_t total_volume = 0;  // Vol(A) = sum of V_k over delta_k = +1
  CircuitKind kind = CircuitKind::Degenerate;
  std::int64_t lattice_index = 1;  // [Z^n : ZA]
  std::optional<std::size_t> interior_point;  // simplex circuits only
  Triangulations triangulations;              // empty for degenerate circuits

  /// Vol(A) measured in the lattice ZA; equals the sum of the positive
  /// primitive Gale entries.
  std::int64_t normalized_volume() const { return total_volume / lattice_index; }
  bool degenerate() const { return kind == CircuitKind::Degenerate; }
};

/// Integer affine map p -> (linear * p + translation) / denominator.
/// `basepoint` records which point of the source configuration is sent to
/// the origin, i.e. the Laurent monomial the polynomial was divided by.
struct AffineTransform {
  IntMatrix linear;
  IntVector translation;
  std::int64_t denominator = 1;
  std::optional<std::size_t> basepoint;

  static AffineTransform identity(int dimension);

  IntVector apply(const IntVector& point) const;
  PointConfiguration apply(const PointConfiguration& config) const;
  BigInt determinant() const;  // of the linear part, before division
  bool unimodular() const;
};

struct LatticeNormalization {
  PointConfiguration config;
  AffineTransform transform;
  std::int64_t original_index = 1;
};

struct OrthogonalFormOptions {
  /// Accept a kernel-row transform that is invertible over Q only; the
  /// result then lives in a sublattice of index `sublattice_index`.
  bool allow_sublattice = false;
};

struct OrthogonalForm {
  PointConfiguration config;       // reordered: positive class, then negative class
  AffineTransform transform;       // applies to the original points
  std::vector<std::size_t> order;  // config[i] comes from original point order[i]
  std::size_t m1 = 0;              // positive class has m1 + 1 points on coordinates [0, m1)
  std::size_t m2 = 0;              // negative class has m2 + 1 points on coordinates [m1, n)
  bool special = false;            // axis points are -p_i e_i in each block
  std::int64_t sublattice_index = 1;
};

/// ⟨lhs_i, x⟩ ≡ rhs_i (mod 2π).
struct CongruenceSystem {
  IntMatrix lhs;
  std::vector<double> rhs;
};

struct CongruenceSolution {
  bool consistent = false;
  std::size_t free_dimension = 0;
  IntMatrix free_directions;  // integer directions of the continuous part
  BigInt component_count = 0;  // number of cosets of the identity component
  std::vector<std::vector<double>> solutions;  // one point per coset, reduced to [0, 2π)

  bool finite() const { return consistent && free_dimension == 0; }
};

struct SmithDecomposition {
  BigMatrix left;       // unimodular, rows x rows
  BigMatrix right;      // unimodular, cols x cols
  std::vector<BigInt> diagonal;  // invariant factors, positive, each dividing the next
  std::size_t rank() const { return diagonal.size(); }
};

// Exact integer linear algebra.
BigMatrix to_big(const IntMatrix& m);
BigInt determinant(BigMatrix m);
std::size_t rank(BigMatrix m);
/// left * m * right = diag(diagonal) padded with zeros.
SmithDecomposition smith_normal_form(const BigMatrix& m);
std::int64_t narrow(const BigInt& value);

/// (n+1) x N matrix with a top row of ones.
BigMatrix augmented_matrix(const PointConfiguration& config);

PointConfiguration validate(int dimension, std::vector<IntVector> points);
PointConfiguration validate(std::vector<IntVector> points);

CircuitProfile profile(const PointConfiguration& config);
Triangulations coherent_triangulations(const CircuitProfile& profile);

struct EquimodularResult {
  bool equimodular = false;
  std::optional<int> witness_sign;  // which sign class is equimodular
  std::vector<Simplex> witness;
};
EquimodularResult equimodular_check(const CircuitProfile& profile);

std::int64_t lattice_index(const PointConfiguration& config);
LatticeNormalization normalize_lattice(const PointConfiguration& config);
OrthogonalForm orthogonal_form(const PointConfiguration& config,
                               const OrthogonalFormOptions& options = {});
/// Per-coordinate layout of a circuit in special orthogonal form: along
/// coordinate i the only points with a nonzero entry are the axis point
/// (±p_i e_i) and the apex of the block owning coordinate i, whose entry has
/// the opposite sign. The negated shape (axis points +p_i e_i) is accepted.
struct SpecialFormLayout {
  std::vector<std::size_t> axis_point;  // per coordinate
  std::vector<std::int64_t> axis_scale;  // p_i > 0
  std::vector<std::size_t> apex;        // per coordinate
  std::size_t m1 = 0;
  std::size_t m2 = 0;
};

/// Layout when `config` is literally in special orthogonal form (blocks may
/// occupy any coordinate subsets); nullopt otherwise.
std::optional<SpecialFormLayout> special_form_layout(const PointConfiguration& config);

CongruenceSolution solve_congruences(const CongruenceSystem& system, double tolerance = 1e-9,
                                     std::size_t enumeration_limit = 1u << 20);

/// Edges of a planar Newton polytope, counter-clockwise; each edge lists the
/// indices of all points on it ordered from its first to its last vertex.
std::vector<std::vector<std::size_t>> planar_edges(const PointConfiguration& config);

}  // namespace coamoeba
