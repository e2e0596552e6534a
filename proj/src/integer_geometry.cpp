#include "coamoeba/integer_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigMatrix identity_matrix(std::size_t n) {
  BigMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  BigMatrix c(a.size(), std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

double reduce_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// Integer inverse of a unimodular matrix via the adjugate.
BigMatrix unimodular_inverse(const BigMatrix& m) {
  const std::size_t n = m.size();
  const BigInt det = determinant(m);
  if (big_abs(det) != 1) throw Error(ErrorCode::InvalidInput, "matrix is not unimodular");
  BigMatrix inv(n, std::vector<BigInt>(n, 0));
  if (n == 1) {
    inv[0][0] = det;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      BigInt cof = determinant(std::move(minor));
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * det;  // det = ±1, so 1/det = det
    }
  return inv;
}

/// Integer basis of {x : m x = 0}, read off the Smith decomposition.
BigMatrix integer_kernel(const BigMatrix& m, std::size_t cols) {
  BigMatrix basis;
  if (m.empty()) {
    return identity_matrix(cols);
  }
  const auto snf = smith_normal_form(m);
  for (std::size_t j = snf.rank(); j < cols; ++j) {
    std::vector<BigInt> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = snf.right[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::string_view to_string(CircuitKind kind) {
  switch (kind) {
    case CircuitKind::VertexCircuit: return "VertexCircuit";
    case CircuitKind::SimplexCircuit: return "SimplexCircuit";
    case CircuitKind::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Exact linear algebra

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

std::int64_t narrow(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::InvalidInput, "integer does not fit in 64 bits");
  return static_cast<std::int64_t>(value);
}

// Bareiss fraction-free elimination.
BigInt determinant(BigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(BigMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const BigInt a = m[r][c], b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
    }
    ++r;
  }
  return r;
}

SmithDecomposition smith_normal_form(const BigMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  BigMatrix d = input;
  BigMatrix left = identity_matrix(rows);
  BigMatrix right = identity_matrix(cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    std::swap(left[a], left[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : right) std::swap(row[a], row[b]);
  };
  // row_dst -= q * row_src
  auto row_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) d[dst][j] -= q * d[src][j];
    for (std::size_t j = 0; j < rows; ++j) left[dst][j] -= q * left[src][j];
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) d[i][dst] -= q * d[i][src];
    for (std::size_t i = 0; i < cols; ++i) right[i][dst] -= q * right[i][src];
  };

  SmithDecomposition out;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (!found || big_abs(d[i][j]) < best)) {
          found = true;
          best = big_abs(d[i][j]);
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d[i][t] != 0) {
          row_axpy(i, t, d[i][t] / d[t][t]);
          if (d[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (d[t][j] != 0) {
          col_axpy(j, t, d[t][j] / d[t][t]);
          if (d[t][j] != 0) clean = false;
        }
      if (!clean) {
        // a remainder is smaller than the pivot: move it into place
        std::size_t bi = t, bj = t;
        BigInt small = big_abs(d[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d[i][t] != 0 && big_abs(d[i][t]) < small) small = big_abs(d[i][t]), bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[t][j] != 0 && big_abs(d[t][j]) < small) small = big_abs(d[t][j]), bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_axpy(t, i, BigInt(-1));  // row_t += row_i
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
      for (std::size_t j = 0; j < rows; ++j) left[t][j] = -left[t][j];
    }
    out.diagonal.push_back(d[t][t]);
  }
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

// ---------------------------------------------------------------------------
// Configurations

BigMatrix augmented_matrix(const PointConfiguration& config) {
  const std::size_t n = static_cast<std::size_t>(config.dimension);
  BigMatrix a(n + 1, std::vector<BigInt>(config.size()));
  for (std::size_t k = 0; k < config.size(); ++k) {
    a[0][k] = 1;
    for (std::size_t i = 0; i < n; ++i) a[i + 1][k] = config[k][i];
  }
  return a;
}

PointConfiguration validate(int dimension, std::vector<IntVector> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "empty point list");
  if (dimension <= 0) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(dimension))
      throw Error(ErrorCode::InvalidInput, "points must all have length " + std::to_string(dimension));
  if (points.size() != static_cast<std::size_t>(dimension) + 2)
    throw Error(ErrorCode::WrongCardinality,
                "a circuit in dimension " + std::to_string(dimension) + " has " +
                    std::to_string(dimension + 2) + " points, got " + std::to_string(points.size()));
  PointConfiguration config{dimension, std::move(points)};
  if (rank(augmented_matrix(config)) != static_cast<std::size_t>(dimension) + 1)
    throw Error(ErrorCode::NotFullDimensional, "points do not affinely span the ambient space");
  return config;
}

PointConfiguration validate(std::vector<IntVector> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "empty point list");
  const int dimension = static_cast<int>(points.front().size());
  return validate(dimension, std::move(points));
}

std::int64_t lattice_index(const PointConfiguration& config) {
  const std::size_t n = static_cast<std::size_t>(config.dimension);
  BigMatrix diff(n, std::vector<BigInt>(config.size() - 1));
  for (std::size_t k = 1; k < config.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) diff[i][k - 1] = config[k][i] - config[0][i];
  const auto snf = smith_normal_form(diff);
  if (snf.rank() < n) throw Error(ErrorCode::NotFullDimensional, "ZA has rank below n");
  BigInt index = 1;
  for (const auto& s : snf.diagonal) index *= s;
  return narrow(index);
}

CircuitProfile profile(const PointConfiguration& config) {
  const std::size_t count = config.size();
  const BigMatrix a = augmented_matrix(config);
  CircuitProfile p;
  p.raw_gale.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigMatrix minor(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < count; ++c)
        if (c != k) minor[r].push_back(a[r][c]);
    BigInt det = determinant(std::move(minor));
    p.raw_gale[k] = narrow(k % 2 == 0 ? det : BigInt(-det));
  }

  const bool degenerate =
      std::any_of(p.raw_gale.begin(), p.raw_gale.end(), [](auto b) { return b == 0; });
  std::vector<std::size_t> pos, neg;
  for (std::size_t k = 0; k < count; ++k) (p.raw_gale[k] > 0 ? pos : neg).push_back(k);

  bool flip = false;
  if (degenerate) {
    p.kind = CircuitKind::Degenerate;
    auto first = std::find_if(p.raw_gale.begin(), p.raw_gale.end(), [](auto b) { return b != 0; });
    flip = first != p.raw_gale.end() && *first < 0;
  } else if (pos.size() == 1 || neg.size() == 1) {
    // the lone point of its sign class is the interior point
    p.kind = CircuitKind::SimplexCircuit;
    const std::size_t interior = neg.size() == 1 ? neg.front() : pos.front();
    if (neg.size() == 1 && pos.size() == 1) {
      // only possible for n = 0, which validate() excludes
      throw Error(ErrorCode::InvalidInput, "circuit too small");
    }
    p.interior_point = interior;
    flip = p.raw_gale[interior] > 0;
  } else {
    p.kind = CircuitKind::VertexCircuit;
    flip = p.raw_gale.front() < 0;
  }
  if (flip)
    for (auto& b : p.raw_gale) b = -b;

  p.gale_gcd = gcd_of(p.raw_gale);
  p.primitive_gale = p.raw_gale;
  if (p.gale_gcd > 1)
    for (auto& b : p.primitive_gale) b /= p.gale_gcd;
  p.volumes.resize(count);
  p.signs.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    p.volumes[k] = p.raw_gale[k] < 0 ? -p.raw_gale[k] : p.raw_gale[k];
    p.signs[k] = (p.raw_gale[k] > 0) - (p.raw_gale[k] < 0);
    if (p.signs[k] > 0) p.total_volume += p.volumes[k];
  }
  p.lattice_index = lattice_index(config);
  if (!degenerate) p.triangulations = coherent_triangulations(p);
  return p;
}

Triangulations coherent_triangulations(const CircuitProfile& p) {
  if (p.degenerate())
    throw Error(ErrorCode::DegenerateCircuit, "a pyramid has no pair of circuit triangulations");
  Triangulations t;
  const std::size_t count = p.raw_gale.size();
  for (std::size_t k = 0; k < count; ++k) {
    Simplex s;
    s.omitted = k;
    s.volume = p.volumes[k];
    for (std::size_t j = 0; j < count; ++j)
      if (j != k) s.vertices.push_back(j);
    (p.signs[k] > 0 ? t.plus : t.minus).push_back(std::move(s));
  }
  return t;
}

EquimodularResult equimodular_check(const CircuitProfile& p) {
  const Triangulations t = coherent_triangulations(p);
  auto equal_volumes = [](const std::vector<Simplex>& simplices) {
    return std::all_of(simplices.begin(), simplices.end(),
                       [&](const Simplex& s) { return s.volume == simplices.front().volume; });
  };
  EquimodularResult r;
  if (equal_volumes(t.plus)) {
    r.equimodular = true;
    r.witness_sign = 1;
    r.witness = t.plus;
  } else if (equal_volumes(t.minus)) {
    r.equimodular = true;
    r.witness_sign = -1;
    r.witness = t.minus;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Affine transforms

AffineTransform AffineTransform::identity(int dimension) {
  AffineTransform t;
  const std::size_t n = static_cast<std::size_t>(dimension);
  t.linear.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) t.linear[i][i] = 1;
  t.translation.assign(n, 0);
  return t;
}

IntVector AffineTransform::apply(const IntVector& point) const {
  IntVector out(linear.size());
  for (std::size_t i = 0; i < linear.size(); ++i) {
    BigInt acc = translation[i];
    for (std::size_t j = 0; j < point.size(); ++j) acc += BigInt(linear[i][j]) * point[j];
    if (acc % denominator != 0)
      throw Error(ErrorCode::InvalidInput, "point is outside the lattice of this transform");
    out[i] = narrow(acc / denominator);
  }
  return out;
}

PointConfiguration AffineTransform::apply(const PointConfiguration& config) const {
  PointConfiguration out{config.dimension, {}};
  out.points.reserve(config.size());
  for (const auto& p : config.points) out.points.push_back(apply(p));
  return out;
}

BigInt AffineTransform::determinant() const { return coamoeba::determinant(to_big(linear)); }

bool AffineTransform::unimodular() const {
  return denominator == 1 && big_abs(determinant()) == 1;
}

LatticeNormalization normalize_lattice(const PointConfiguration& config) {
  LatticeNormalization out;
  out.original_index = lattice_index(config);
  if (out.original_index == 1) {
    out.config = config;
    out.transform = AffineTransform::identity(config.dimension);
    return out;
  }
  // Columns a_k - a_0 generate ZA. With U D V = S, the rows of diag(1/s) U
  // express points in a basis of ZA.
  const std::size_t n = static_cast<std::size_t>(config.dimension);
  BigMatrix diff(n, std::vector<BigInt>(config.size() - 1));
  for (std::size_t k = 1; k < config.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) diff[i][k - 1] = config[k][i] - config[0][i];
  const auto snf = smith_normal_form(diff);
  const BigInt largest = snf.diagonal.back();
  AffineTransform t;
  t.denominator = narrow(largest);
  t.linear.assign(n, IntVector(n, 0));
  t.translation.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt scale = largest / snf.diagonal[i];
    BigInt shift = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt entry = scale * snf.left[i][j];
      t.linear[i][j] = narrow(entry);
      shift -= entry * config[0][j];
    }
    t.translation[i] = narrow(shift);
  }
  t.basepoint = 0;
  out.config = t.apply(config);
  out.transform = std::move(t);
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal form

namespace {

/// Tries to move the block coordinates of `block` (points given as vectors
/// over the block's coordinates) into the shape (-p_1 e_1, ..., -p_m e_m, apex).
/// Returns the block matrix and the point ordering on success.
std::optional<std::pair<BigMatrix, std::vector<std::size_t>>> special_block(
    const std::vector<std::vector<BigInt>>& block) {
  const std::size_t m = block.empty() ? 0 : block.front().size();
  if (m == 0) return std::make_pair(BigMatrix{}, std::vector<std::size_t>{0});
  for (std::size_t apex = 0; apex < block.size(); ++apex) {
    std::vector<std::size_t> axis;
    for (std::size_t k = 0; k < block.size(); ++k)
      if (k != apex) axis.push_back(k);
    BigMatrix w(m, std::vector<BigInt>(m));
    for (std::size_t c = 0; c < m; ++c) {
      BigInt content = 0;
      for (std::size_t r = 0; r < m; ++r) content = boost::multiprecision::gcd(content, block[axis[c]][r]);
      if (content == 0) break;
      for (std::size_t r = 0; r < m; ++r) w[r][c] = block[axis[c]][r] / content;
    }
    if (big_abs(determinant(w)) != 1) continue;
    BigMatrix mat = unimodular_inverse(w);
    for (auto& row : mat)
      for (auto& x : row) x = -x;
    bool positive = true;
    for (std::size_t r = 0; r < m && positive; ++r) {
      BigInt acc = 0;
      for (std::size_t c = 0; c < m; ++c) acc += mat[r][c] * block[apex][c];
      positive = acc > 0;
    }
    if (!positive) continue;
    axis.push_back(apex);
    return std::make_pair(std::move(mat), std::move(axis));
  }
  return std::nullopt;
}

}  // namespace

OrthogonalForm orthogonal_form(const PointConfiguration& config, const OrthogonalFormOptions& options) {
  const CircuitProfile prof = profile(config);
  if (prof.degenerate()) throw Error(ErrorCode::DegenerateCircuit, "orthogonal form needs a nondegenerate circuit");
  if (prof.lattice_index != 1 && !options.allow_sublattice)
    throw Error(ErrorCode::InvalidInput, "ZA differs from Z^n; normalize the lattice first");

  const std::size_t n = static_cast<std::size_t>(config.dimension);
  std::vector<std::size_t> pos, neg;
  for (std::size_t k = 0; k < config.size(); ++k) (prof.signs[k] > 0 ? pos : neg).push_back(k);

  const BigMatrix a = augmented_matrix(config);
  auto columns_transposed = [&](const std::vector<std::size_t>& idx) {
    BigMatrix t(idx.size(), std::vector<BigInt>(n + 1));
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t r = 0; r <= n; ++r) t[c][r] = a[r][idx[c]];
    return t;
  };
  // rows vanishing on the negative class give the positive-block coordinates
  const BigMatrix v = integer_kernel(columns_transposed(neg), n + 1);
  const BigMatrix u = integer_kernel(columns_transposed(pos), n + 1);

  BigMatrix t;
  std::vector<BigInt> e0(n + 1, 0);
  e0[0] = 1;
  t.push_back(e0);
  for (const auto& row : v) t.push_back(row);
  for (const auto& row : u) t.push_back(row);
  if (t.size() != n + 1) throw Error(ErrorCode::InvalidInput, "kernel dimensions do not add up");

  const BigInt det = big_abs(determinant(t));
  if (det == 0) throw Error(ErrorCode::NonUnimodularKernelBasis, "kernel-row transform is singular");
  if (det != 1 && !options.allow_sublattice)
    throw Error(ErrorCode::NonUnimodularKernelBasis,
                "kernel-row transform has determinant " + det.str() + ", not invertible over Z");

  OrthogonalForm out;
  out.m1 = pos.size() - 1;
  out.m2 = neg.size() - 1;
  out.sublattice_index = narrow(det);

  BigMatrix linear(n, std::vector<BigInt>(n));
  std::vector<BigInt> shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    shift[i] = t[i + 1][0];
    for (std::size_t j = 0; j < n; ++j) linear[i][j] = t[i + 1][j + 1];
  }

  auto image = [&](std::size_t k) {
    std::vector<BigInt> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = shift[i];
      for (std::size_t j = 0; j < n; ++j) y[i] += linear[i][j] * config[k][j];
    }
    return y;
  };

  // Try to reach the special shape block by block.
  std::vector<std::vector<BigInt>> block1, block2;
  for (auto k : pos) {
    auto y = image(k);
    block1.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(out.m1));
  }
  for (auto k : neg) {
    auto y = image(k);
    block2.emplace_back(y.begin() + static_cast<std::ptrdiff_t>(out.m1), y.end());
  }
  auto s1 = special_block(block1);
  auto s2 = special_block(block2);
  out.special = s1.has_value() && s2.has_value();

  BigMatrix block_map = identity_matrix(n);
  std::vector<std::size_t> order1(pos.size()), order2(neg.size());
  std::iota(order1.begin(), order1.end(), 0);
  std::iota(order2.begin(), order2.end(), 0);
  if (out.special) {
    for (std::size_t r = 0; r < out.m1; ++r)
      for (std::size_t c = 0; c < out.m1; ++c) block_map[r][c] = s1->first[r][c];
    for (std::size_t r = 0; r < out.m2; ++r)
      for (std::size_t c = 0; c < out.m2; ++c) block_map[out.m1 + r][out.m1 + c] = s2->first[r][c];
    order1 = s1->second;
    order2 = s2->second;
  }
  linear = multiply(block_map, linear);
  {
    std::vector<BigInt> moved(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) moved[i] += block_map[i][j] * shift[j];
    shift = std::move(moved);
  }

  out.transform.linear.assign(n, IntVector(n));
  out.transform.translation.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.transform.translation[i] = narrow(shift[i]);
    for (std::size_t j = 0; j < n; ++j) out.transform.linear[i][j] = narrow(linear[i][j]);
  }
  for (auto i : order1) out.order.push_back(pos[i]);
  for (auto i : order2) out.order.push_back(neg[i]);
  for (std::size_t k = 0; k < config.size(); ++k)
    if (config[k] == IntVector(n, 0) && out.transform.apply(config[k]) == IntVector(n, 0)) {
      out.transform.basepoint = k;
      break;
    }
  out.config.dimension = config.dimension;
  for (auto k : out.order) out.config.points.push_back(out.transform.apply(config[k]));
  return out;
}

std::optional<SpecialFormLayout> special_form_layout(const PointConfiguration& config) {
  const CircuitProfile prof = profile(config);
  if (prof.degenerate()) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(config.dimension);
  std::vector<std::size_t> pos, neg;
  for (std::size_t k = 0; k < config.size(); ++k) (prof.signs[k] > 0 ? pos : neg).push_back(k);

  SpecialFormLayout layout;
  layout.m1 = pos.size() - 1;
  layout.m2 = neg.size() - 1;
  layout.axis_point.assign(n, config.size());
  layout.axis_scale.assign(n, 0);
  layout.apex.assign(n, config.size());
  std::vector<int> owner(n, -1);

  for (int cls = 0; cls < 2; ++cls) {
    const auto& members = cls == 0 ? pos : neg;
    std::vector<std::size_t> support;
    for (auto k : members)
      for (std::size_t i = 0; i < n; ++i)
        if (config[k][i] != 0 && std::find(support.begin(), support.end(), i) == support.end())
          support.push_back(i);
    if (support.size() != members.size() - 1) return std::nullopt;
    for (auto i : support) {
      if (owner[i] != -1) return std::nullopt;
      owner[i] = cls;
    }
    std::optional<std::size_t> apex;
    if (support.empty()) {
      apex = members.front();  // single point at the origin
    } else {
      // the apex is the point with full support in the block; with a single
      // coordinate the positive point is taken as apex
      for (auto k : members) {
        const bool full = std::all_of(support.begin(), support.end(), [&](auto i) { return config[k][i] != 0; });
        if (!full) continue;
        if (support.size() == 1 && apex && config[*apex][support[0]] > 0) continue;
        apex = k;
      }
      if (!apex) return std::nullopt;
      for (auto k : members) {
        if (k == *apex) continue;
        std::size_t nonzero = 0, axis = 0;
        for (auto i : support)
          if (config[k][i] != 0) ++nonzero, axis = i;
        if (nonzero != 1 || layout.axis_point[axis] != config.size()) return std::nullopt;
        if ((config[k][axis] > 0) == (config[*apex][axis] > 0)) return std::nullopt;
        layout.axis_point[axis] = k;
        layout.axis_scale[axis] = config[k][axis] < 0 ? -config[k][axis] : config[k][axis];
      }
    }
    if (!apex) return std::nullopt;
    for (auto i : support) {
      if (layout.axis_point[i] == config.size()) return std::nullopt;
      layout.apex[i] = *apex;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (owner[i] == -1) return std::nullopt;
  return layout;
}

// ---------------------------------------------------------------------------
// Congruences on the torus

CongruenceSolution solve_congruences(const CongruenceSystem& system, double tolerance,
                                     std::size_t enumeration_limit) {
  if (system.lhs.size() != system.rhs.size())
    throw Error(ErrorCode::InvalidInput, "congruence system has mismatched sides");
  CongruenceSolution out;
  if (system.lhs.empty()) throw Error(ErrorCode::InvalidInput, "empty congruence system");
  const std::size_t rows = system.lhs.size();
  const std::size_t vars = system.lhs.front().size();
  for (const auto& row : system.lhs)
    if (row.size() != vars) throw Error(ErrorCode::InvalidInput, "ragged congruence system");

  // U R V = D; with x = V y the system decouples into d_i y_i ≡ (U c)_i.
  const auto snf = smith_normal_form(to_big(system.lhs));
  const std::size_t r = snf.rank();
  std::vector<double> target(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < rows; ++j) {
      if (snf.left[i][j] == 0) continue;
      acc = reduce_angle(acc + reduce_angle(static_cast<double>(snf.left[i][j]) * system.rhs[j]));
    }
    target[i] = acc;
  }
  for (std::size_t i = r; i < rows; ++i) {
    const double t = target[i];
    if (std::min(t, kTwoPi - t) > tolerance) return out;
  }
  out.consistent = true;
  out.free_dimension = vars - r;
  out.component_count = 1;
  for (const auto& s : snf.diagonal) out.component_count *= s;
  for (std::size_t j = r; j < vars; ++j) {
    IntVector dir(vars);
    for (std::size_t i = 0; i < vars; ++i) dir[i] = narrow(snf.right[i][j]);
    out.free_directions.push_back(std::move(dir));
  }
  if (out.component_count > enumeration_limit) return out;

  std::vector<std::int64_t> radix;
  for (const auto& s : snf.diagonal) radix.push_back(narrow(s));
  const std::int64_t total = narrow(out.component_count);
  std::vector<double> y(vars, 0.0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rest = idx;
    for (std::size_t i = 0; i < r; ++i) {
      const std::int64_t j = rest % radix[i];
      rest /= radix[i];
      y[i] = (target[i] + kTwoPi * static_cast<double>(j)) / static_cast<double>(radix[i]);
    }
    std::vector<double> x(vars, 0.0);
    for (std::size_t i = 0; i < vars; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < r; ++j) {
        if (snf.right[i][j] == 0) continue;
        acc = reduce_angle(acc + reduce_angle(static_cast<double>(snf.right[i][j]) * y[j]));
      }
      x[i] = acc;
    }
    out.solutions.push_back(std::move(x));
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

// ---------------------------------------------------------------------------
// Planar hull edges

std::vector<std::vector<std::size_t>> planar_edges(const PointConfiguration& config) {
  if (config.dimension != 2) throw Error(ErrorCode::InvalidInput, "planar_edges needs n = 2");
  std::vector<std::size_t> idx(config.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return config[a] < config[b]; });
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (config[a][0] - config[o][0]) * (config[b][1] - config[o][1]) -
           (config[a][1] - config[o][1]) * (config[b][0] - config[o][0]);
  };
  // Andrew's monotone chain, strict turns only
  std::vector<std::size_t> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const std::size_t k = pass == 0 ? idx[t] : idx[idx.size() - 1 - t];
      while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), k) <= 0) hull.pop_back();
      hull.push_back(k);
    }
    hull.pop_back();
  }
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t e = 0; e < hull.size(); ++e) {
    const std::size_t s = hull[e], t = hull[(e + 1) % hull.size()];
    std::vector<std::pair<std::int64_t, std::size_t>> on;
    const std::int64_t dx = config[t][0] - config[s][0], dy = config[t][1] - config[s][1];
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (cross(s, t, k) != 0) continue;
      const std::int64_t along = (config[k][0] - config[s][0]) * dx + (config[k][1] - config[s][1]) * dy;
      if (along >= 0 && along <= dx * dx + dy * dy) on.emplace_back(along, k);
    }
    std::sort(on.begin(), on.end());
    std::vector<std::size_t> edge;
    for (auto& [_, k] : on) edge.push_back(k);
    edges.push_back(std::move(edge));
  }
  return edges;
}

}  // namespace coamoeba
