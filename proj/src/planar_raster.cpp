#include "coamoeba/planar_raster.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <thread>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// Runs body(row) for every row, spread over the available cores.
template <class Body>
void parallel_rows(int rows, Body body) {
  const int workers = std::max(1, std::min<int>(rows, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int r = w; r < rows; r += workers) body(r);
    });
}

struct Cubic {
  std::array<double, 4> c{};  // c[0] + c[1] s + c[2] s^2 + c[3] s^3
  double operator()(double s) const { return ((c[3] * s + c[2]) * s + c[1]) * s + c[0]; }
};

// Real roots of a cubic in the open interval (0, 1).
std::vector<double> roots_in_unit_interval(const Cubic& p) {
  std::vector<double> cuts{0.0};
  // stationary points split (0, 1) into monotone pieces
  const double a = 3 * p.c[3], b = 2 * p.c[2], c = p.c[1];
  if (std::abs(a) > 0) {
    const double disc = b * b - 4 * a * c;
    if (disc >= 0) {
      const double sq = std::sqrt(disc);
      for (double s : {(-b - sq) / (2 * a), (-b + sq) / (2 * a)})
        if (s > 0 && s < 1) cuts.push_back(s);
    }
  } else if (std::abs(b) > 0) {
    const double s = -c / b;
    if (s > 0 && s < 1) cuts.push_back(s);
  }
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    double flo = p(lo), fhi = p(hi);
    if (flo == 0) {
      if (lo > 0) out.push_back(lo);
      continue;
    }
    if ((flo > 0) == (fhi > 0)) continue;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = p(mid);
      if ((fm > 0) == (flo > 0)) lo = mid, flo = fm;
      else hi = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

struct CircuitData {
  IntVector gale;  // primitive Gale vector (orientation irrelevant here)
  bool simplex = false;  // three affinely independent points
};

CircuitData prepare(const PointConfiguration& config, const CoefficientVector& coeffs) {
  if (config.dimension != 2) throw Error(ErrorCode::InvalidInput, "planar rasters need n = 2");
  if (coeffs.size() != config.size()) throw Error(ErrorCode::InvalidInput, "need one coefficient per point");
  CircuitData d;
  if (config.size() == 3) {
    if (rank(augmented_matrix(config)) != 3)
      throw Error(ErrorCode::NotFullDimensional, "trinomial support is collinear");
    d.simplex = true;
    return d;
  }
  if (config.size() != 4) throw Error(ErrorCode::WrongCardinality, "planar rasters take 3 or 4 monomials");
  const CircuitProfile prof = profile(config);
  d.gale = prof.primitive_gale;
  return d;
}

bool member(const PointConfiguration& config, const CoefficientVector& coeffs, const CircuitData& data,
            const TorusPoint& theta) {
  const auto phases = phase_vector(config, coeffs, theta);
  const std::size_t count = config.size();
  std::array<double, 4> u{}, v{};
  for (std::size_t k = 0; k < count; ++k) {
    const Complex g = std::abs(coeffs[k]) * phases[k];
    u[k] = g.real();
    v[k] = g.imag();
  }
  if (data.simplex) {
    // kernel of the 2x3 real system is spanned by u × v
    const double c0 = u[1] * v[2] - u[2] * v[1];
    const double c1 = u[2] * v[0] - u[0] * v[2];
    const double c2 = u[0] * v[1] - u[1] * v[0];
    return (c0 > 0 && c1 > 0 && c2 > 0) || (c0 < 0 && c1 < 0 && c2 < 0);
  }

  // Σ g_k t_k = 0 with t_k = r^{a_k} > 0 (up to a common scale) iff some
  // positive t in ker[u; v] has Σ b_k log t_k = 0.
  std::size_t p = 0, q = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double m = std::abs(u[i] * v[j] - u[j] * v[i]);
      if (m > best) best = m, p = i, q = j;
    }
  double scale = 0.0;
  for (std::size_t k = 0; k < 4; ++k) scale = std::max(scale, u[k] * u[k] + v[k] * v[k]);
  if (best <= 1e-14 * scale) return !classify_phases(phases).colopsided();  // all phases on a line

  const double det = u[p] * v[q] - u[q] * v[p];
  std::array<std::size_t, 2> free{};
  for (std::size_t k = 0, f = 0; k < 4; ++k)
    if (k != p && k != q) free[f++] = k;
  // kernel vectors e_r + x_p e_p + x_q e_q
  std::array<std::array<double, 2>, 4> d{};  // d[k] = (k1_k, k2_k)
  for (std::size_t col = 0; col < 2; ++col) {
    const std::size_t r = free[col];
    d[r][col] = 1.0;
    d[p][col] = (-u[r] * v[q] + v[r] * u[q]) / det;
    d[q][col] = (-u[p] * v[r] + v[p] * u[r]) / det;
  }

  // directions ω with ⟨(cos ω, sin ω), d_k⟩ > 0 for all k
  std::array<double, 4> angle{};
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::hypot(d[k][0], d[k][1]) == 0.0) return false;
    angle[k] = wrap_angle(std::atan2(d[k][1], d[k][0]));
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return angle[a] < angle[b]; });
  double gap = -1.0;
  std::size_t start = 0, end = 0;  // covering arc runs from angle[start] to angle[end]
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t a = order[i], b = order[(i + 1) % 4];
    const double g = i + 1 < 4 ? angle[b] - angle[a] : angle[b] + kTwoPi - angle[a];
    if (g > gap) gap = g, end = a, start = b;
  }
  if (gap <= kPi) return false;  // no positive vector in the kernel

  const double lo = angle[end] - kPi / 2, hi = angle[start] + kPi / 2;
  std::array<double, 4> P{}, Q{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double norm = std::hypot(d[k][0], d[k][1]);
    P[k] = std::cos(lo) * d[k][0] + std::sin(lo) * d[k][1];
    Q[k] = std::cos(hi) * d[k][0] + std::sin(hi) * d[k][1];
    if (P[k] <= 1e-12 * norm) P[k] = 0.0;
    if (Q[k] <= 1e-12 * norm) Q[k] = 0.0;
  }
  const auto& b = data.gale;
  auto phi = [&](double s) {
    double acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) acc += static_cast<double>(b[k]) * std::log(P[k] + s * (Q[k] - P[k]));
    return acc;
  };
  // limits at the two ends of the segment: ±∞ unless the vanishing Gale entries cancel
  auto end_limit = [&](const std::array<double, 4>& at_end, double s) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (at_end[k] == 0.0) sum += b[k];
    if (sum > 0) return -HUGE_VAL;
    if (sum < 0) return HUGE_VAL;
    return phi(s);
  };
  const double left = end_limit(P, 1e-12), right = end_limit(Q, 1 - 1e-12);
  double lowest = std::min(left, right), highest = std::max(left, right);
  if (lowest <= 0 && highest >= 0) return true;

  // φ'(s) Π D_j(s) is a cubic N(s) = Σ_k b_k (Q_k − P_k) Π_{j≠k} D_j(s)
  Cubic n;
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<double, 4> prod{1, 0, 0, 0};
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == k) continue;
      const double c0 = P[j], c1 = Q[j] - P[j];
      for (std::size_t e = 3; e > 0; --e) prod[e] = prod[e] * c0 + prod[e - 1] * c1;
      prod[0] *= c0;
    }
    for (std::size_t e = 0; e < 4; ++e) n.c[e] += static_cast<double>(b[k]) * (Q[k] - P[k]) * prod[e];
  }
  for (double s : roots_in_unit_interval(n)) {
    const double value = phi(s);
    lowest = std::min(lowest, value);
    highest = std::max(highest, value);
  }
  return lowest <= 0 && highest >= 0;
}

}  // namespace

double RasterImage::pixel_area() const {
  const double h = kTwoPi / resolution;
  return h * h;
}

std::size_t RasterImage::covered() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

TorusPoint RasterImage::centre(int row, int col) const {
  const double h = kTwoPi / resolution;
  return {(col + 0.5) * h, (row + 0.5) * h};
}

std::string RasterImage::to_ppm() const {
  std::string out = "P6\n" + std::to_string(resolution) + " " + std::to_string(resolution) + "\n255\n";
  out.reserve(out.size() + bits.size() * 3);
  for (auto bit : bits) out.append(3, bit ? char(0) : char(255));
  return out;
}

double area(const RasterImage& image) { return static_cast<double>(image.covered()) * image.pixel_area(); }

bool coamoeba_membership(const PointConfiguration& config, const CoefficientVector& coeffs, const TorusPoint& theta) {
  return member(config, coeffs, prepare(config, coeffs), theta);
}

RasterImage raster_coamoeba(const PointConfiguration& config, const CoefficientVector& coeffs, int resolution,
                            RasterMethod method) {
  if (resolution <= 0) throw Error(ErrorCode::InvalidInput, "resolution must be positive");
  const CircuitData data = prepare(config, coeffs);
  RasterImage image(resolution);
  if (method == RasterMethod::Exact) {
    parallel_rows(resolution, [&](int row) {
      for (int col = 0; col < resolution; ++col)
        if (member(config, coeffs, data, image.centre(row, col))) image.set(row, col);
    });
    return image;
  }
  // pushforward: 8 fibers per pixel edge in arg z_1, log|z_1| sampled as densely
  CurveGrid grid;
  grid.angle_steps = 8 * resolution;
  grid.radius_steps = 8 * resolution;
  grid.log_radius_span = 8.0;
  const double h = kTwoPi / resolution;
  for (const auto& a : curve_sample(config, coeffs, grid).arguments) {
    const int col = std::min(resolution - 1, static_cast<int>(a[0] / h));
    const int row = std::min(resolution - 1, static_cast<int>(a[1] / h));
    image.set(row, col);
  }
  return image;
}

RasterImage raster_lopsided(const PointConfiguration& config, const CoefficientVector& coeffs, int resolution) {
  if (config.dimension != 2) throw Error(ErrorCode::InvalidInput, "planar rasters need n = 2");
  if (resolution <= 0) throw Error(ErrorCode::InvalidInput, "resolution must be positive");
  RasterImage image(resolution);
  parallel_rows(resolution, [&](int row) {
    for (int col = 0; col < resolution; ++col)
      if (lopsided_membership(config, coeffs, image.centre(row, col))) image.set(row, col);
  });
  return image;
}

std::size_t complement_components(const RasterImage& image) {
  const int r = image.resolution;
  std::vector<std::uint8_t> seen(image.bits);
  std::size_t components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (seen[static_cast<std::size_t>(i) * r + j]) continue;
      ++components;
      stack.assign(1, {i, j});
      seen[static_cast<std::size_t>(i) * r + j] = 1;
      while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        const std::array<std::pair<int, int>, 4> next{
            {{(a + 1) % r, b}, {(a + r - 1) % r, b}, {a, (b + 1) % r}, {a, (b + r - 1) % r}}};
        for (auto [x, y] : next) {
          auto& s = seen[static_cast<std::size_t>(x) * r + y];
          if (!s) s = 1, stack.emplace_back(x, y);
        }
      }
    }
  return components;
}

// ---------------------------------------------------------------------------
// Covering statistics

std::vector<CoefficientVector> TrinomialQuadruple::members() const {
  std::vector<CoefficientVector> out;
  std::array<std::size_t, 2> others{};
  for (std::size_t k = 0, o = 0; k < 3; ++k)
    if (k != marked) others[o++] = k;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      CoefficientVector c = coeffs;
      c[others[0]] *= static_cast<double>(s1);
      c[others[1]] *= static_cast<double>(s2);
      out.push_back(std::move(c));
    }
  return out;
}

int coverage_at(const TrinomialQuadruple& quadruple, const TorusPoint& theta) {
  int count = 0;
  for (const auto& c : quadruple.members())
    if (!colopsided_at(quadruple.support, c, theta).colopsided()) ++count;
  return count;
}

CoverageStats covering_check(const TrinomialQuadruple& quadruple, std::size_t samples, std::uint64_t seed) {
  if (quadruple.support.size() != 3 || quadruple.coeffs.size() != 3 || quadruple.marked > 2)
    throw Error(ErrorCode::InvalidInput, "a quadruple is built on a trinomial");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  CoverageStats stats;
  const auto& s = quadruple.support;
  while (stats.samples < samples) {
    const TorusPoint theta{angle(rng), angle(rng)};
    // H_Σ: two phases of a member on a common line through the origin
    bool near = false;
    for (std::size_t i = 0; i < 3 && !near; ++i)
      for (std::size_t j = i + 1; j < 3 && !near; ++j) {
        const double x = static_cast<double>(s[i][0] - s[j][0]) * theta[0] +
                         static_cast<double>(s[i][1] - s[j][1]) * theta[1] + std::arg(quadruple.coeffs[i]) -
                         std::arg(quadruple.coeffs[j]);
        const double r = std::fmod(std::abs(x), kPi);
        near = std::min(r, kPi - r) < 1e-6;
      }
    if (near) {
      ++stats.rejected;
      continue;
    }
    ++stats.histogram[coverage_at(quadruple, theta)];
    ++stats.samples;
  }
  return stats;
}

CoverageStats two_colopsided_check(const PointConfiguration& config, const CoefficientVector& coeffs,
                                   std::size_t samples, std::uint64_t seed) {
  if (config.dimension != 2 || config.size() != 4)
    throw Error(ErrorCode::InvalidInput, "two_colopsided_check takes a planar circuit");
  if (profile(config).degenerate()) throw Error(ErrorCode::DegenerateCircuit, "circuit is a pyramid");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  CoverageStats stats;
  std::size_t draws = 0;
  while (stats.samples < samples) {
    if (++draws > 1000 * (samples + 1)) break;  // L_f is never this small for a circuit
    const TorusPoint theta{angle(rng), angle(rng)};
    const auto phases = phase_vector(config, coeffs, theta);
    bool antipodal = false;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (std::abs(std::abs(std::arg(phases[i] / phases[j])) - kPi) < 1e-6) antipodal = true;
    if (antipodal || classify_phases(phases).colopsided()) {
      ++stats.rejected;
      continue;
    }
    int count = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<Complex> rest;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != k) rest.push_back(phases[j]);
      if (classify_phases(rest).colopsided()) ++count;
    }
    ++stats.histogram[count];
    ++stats.samples;
  }
  return stats;
}

}  // namespace coamoeba
