#include "coamoeba/system_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

std::int64_t side(const IntVector& o, const IntVector& a, const IntVector& p) {
  return (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]);
}

bool separates(const PointConfiguration& s, std::size_t i0, std::size_t i1, std::size_t i2, std::size_t i3) {
  const auto s0 = side(s[i2], s[i3], s[i0]);
  const auto s1 = side(s[i2], s[i3], s[i1]);
  return (s0 > 0 && s1 < 0) || (s0 < 0 && s1 > 0);
}

template <class T>
using Cx = std::complex<T>;

template <class T>
Cx<T> eval(const LaurentPolynomial& f, const std::array<Cx<T>, 2>& z, Cx<T>* d0, Cx<T>* d1) {
  Cx<T> value = 0, g0 = 0, g1 = 0;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    const Cx<T> c(static_cast<T>(f.coeffs[k].real()), static_cast<T>(f.coeffs[k].imag()));
    const Cx<T> term = c * std::pow(z[0], static_cast<int>(f.exponents[k][0])) *
                       std::pow(z[1], static_cast<int>(f.exponents[k][1]));
    value += term;
    g0 += term * static_cast<T>(f.exponents[k][0]) / z[0];
    g1 += term * static_cast<T>(f.exponents[k][1]) / z[1];
  }
  *d0 = g0;
  *d1 = g1;
  return value;
}

// Newton's method on (F1, F2); returns the refined point.
template <class T>
std::array<Cx<T>, 2> newton(const LaurentPolynomial& f1, const LaurentPolynomial& f2, std::array<Cx<T>, 2> z,
                            int iterations) {
  for (int it = 0; it < iterations; ++it) {
    Cx<T> a, b, c, d;
    const Cx<T> u = eval(f1, z, &a, &b);
    const Cx<T> v = eval(f2, z, &c, &d);
    const Cx<T> det = a * d - b * c;
    if (det == Cx<T>(0)) break;
    const Cx<T> dz0 = (d * u - b * v) / det;
    const Cx<T> dz1 = (a * v - c * u) / det;
    z[0] -= dz0;
    z[1] -= dz1;
    if (std::abs(dz0) <= std::numeric_limits<T>::epsilon() * std::abs(z[0]) &&
        std::abs(dz1) <= std::numeric_limits<T>::epsilon() * std::abs(z[1]))
      break;
  }
  return z;
}

double relative_residual(const CircuitSystem& s, const std::vector<Complex>& z) {
  const auto f1 = s.first(), f2 = s.second();
  return std::max(std::abs(f1(z)) / f1.scale_at(z), std::abs(f2(z)) / f2.scale_at(z));
}

bool is_real_trinomial(const LaurentPolynomial& f, const TorusPoint& theta) {
  const PointConfiguration c{2, f.exponents};
  const auto phases = phase_vector(c, f.coeffs, theta);
  for (auto p : phases)
    if (std::abs((p * std::conj(phases.front())).imag()) > 1e-9) return false;
  return true;
}

}  // namespace

LaurentPolynomial CircuitSystem::first() const {
  return {2, {support[0], support[2], support[3]}, {c1, 1.0, c2}};
}

LaurentPolynomial CircuitSystem::second() const {
  return {2, {support[1], support[2], support[3]}, {c3, 1.0, c4}};
}

CircuitSystem make_system(const PointConfiguration& support, Complex c1, Complex c2, Complex c3, Complex c4) {
  const PointConfiguration s = validate(2, support.points);
  for (auto c : {c1, c2, c3, c4})
    if (c == Complex(0)) throw Error(ErrorCode::InvalidInput, "trinomial coefficients must be nonzero");
  CircuitSystem sys{s, c1, c2, c3, c4, {0, 1, 2, 3}, separates(s, 0, 1, 2, 3)};
  return sys;
}

CircuitSystem reduce_to_trinomials(const PointConfiguration& support, const CoefficientVector& p,
                                   const CoefficientVector& q) {
  const PointConfiguration s = validate(2, support.points);
  if (p.size() != 4 || q.size() != 4) throw Error(ErrorCode::InvalidInput, "need four coefficients per polynomial");

  std::array<std::size_t, 4> r{0, 1, 2, 3};
  bool found = false;
  do {
    if (separates(s, r[0], r[1], r[2], r[3])) {
      found = true;
      break;
    }
  } while (std::next_permutation(r.begin(), r.end()));
  if (!found) throw Error(ErrorCode::NoAdmissibleChoice, "no a2-a3 line separates the other two points");

  double norm = 0.0;
  for (std::size_t k = 0; k < 4; ++k) norm = std::max({norm, std::abs(p[k]), std::abs(q[k])});
  auto singular = [&](std::size_t i, std::size_t j) {
    return std::abs(p[i] * q[j] - p[j] * q[i]) <= 1e-12 * norm * norm;
  };
  if (singular(r[0], r[1]))
    throw Error(ErrorCode::SingularElimination, "the eliminated monomials have a singular coefficient block");
  if (singular(r[2], r[3]))
    throw Error(ErrorCode::SingularElimination, "the shared monomials have proportional coefficients");

  // rows of M^{-1}[p; q] with M the (a0, a1) block
  const Complex det = p[r[0]] * q[r[1]] - p[r[1]] * q[r[0]];
  std::array<Complex, 4> row0, row1;
  for (std::size_t k = 0; k < 4; ++k) {
    row0[k] = (q[r[1]] * p[k] - p[r[1]] * q[k]) / det;
    row1[k] = (p[r[0]] * q[k] - q[r[0]] * p[k]) / det;
  }
  for (auto x : {row0[r[2]], row0[r[3]], row1[r[2]], row1[r[3]]})
    if (std::abs(x) <= 1e-12 * (std::abs(row0[r[0]]) + std::abs(row1[r[1]])))
      throw Error(ErrorCode::SingularElimination, "elimination leaves a binomial");

  PointConfiguration ordered{2, {s[r[0]], s[r[1]], s[r[2]], s[r[3]]}};
  CircuitSystem sys;
  sys.support = std::move(ordered);
  sys.c1 = row0[r[0]] / row0[r[2]];
  sys.c2 = row0[r[3]] / row0[r[2]];
  sys.c3 = row1[r[1]] / row1[r[2]];
  sys.c4 = row1[r[3]] / row1[r[2]];
  sys.roles.assign(r.begin(), r.end());
  sys.interior_line = true;
  return sys;
}

std::vector<SystemRoot> solve_system(const CircuitSystem& system) {
  const LaurentPolynomial f1 = system.first(), f2 = system.second();
  UnivariatePoly res;
  try {
    res = sylvester_resultant(f1, f2, 0);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IdenticallyZeroResultant)
      throw Error(ErrorCode::NonGenericSystem, "the two trinomials have a common factor");
    throw;
  }
  std::vector<SystemRoot> out;
  if (res.trimmed().degree() < 1) return out;

  for (const Complex z2 : root_list(res)) {
    // fiber of F1 over z2, as a Laurent polynomial in z1
    std::int64_t lo = f1.exponents[0][0], hi = lo;
    for (const auto& e : f1.exponents) lo = std::min(lo, e[0]), hi = std::max(hi, e[0]);
    UnivariatePoly fiber;
    fiber.offset = static_cast<int>(lo);
    fiber.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Complex(0));
    for (std::size_t k = 0; k < f1.coeffs.size(); ++k)
      fiber.coeffs[static_cast<std::size_t>(f1.exponents[k][0] - lo)] +=
          f1.coeffs[k] * std::pow(z2, static_cast<int>(f1.exponents[k][1]));
    if (fiber.trimmed().degree() < 1) continue;
    for (const Complex z1 : root_list(fiber)) {
      std::vector<Complex> z{z1, z2};
      if (std::abs(f2(z)) > 1e-4 * f2.scale_at(z)) continue;
      const auto refined = newton<double>(f1, f2, {z1, z2}, 30);
      z = {refined[0], refined[1]};
      const double residual = relative_residual(system, z);
      if (!(residual < 1e-8)) continue;
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const SystemRoot& r) {
        return std::abs(r.point[0] - z[0]) <= 1e-8 * std::abs(z[0]) &&
               std::abs(r.point[1] - z[1]) <= 1e-8 * std::abs(z[1]);
      });
      if (duplicate) continue;
      out.push_back({z, {wrap_angle(std::arg(z[0])), wrap_angle(std::arg(z[1]))}, residual});
    }
  }
  std::sort(out.begin(), out.end(), [](const SystemRoot& a, const SystemRoot& b) { return a.argument < b.argument; });
  return out;
}

SectorReport sector_census(const CircuitSystem& system, const std::vector<SystemRoot>& roots, double tolerance) {
  SectorReport report;
  const auto f1 = system.first(), f2 = system.second();
  const std::size_t count = roots.size();
  std::vector<TorusPoint> args;
  for (const auto& r : roots) args.push_back(r.argument);

  // single-linkage clustering on the torus
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      double d = torus_distance(args[i], args[j]);
      if (d > tolerance / 10 && d < tolerance * 10) {
        // too close to call in double precision: polish both roots further
        ++report.refined_pairs;
        auto polish = [&](const SystemRoot& r) {
          using L = long double;
          const auto z = newton<L>(f1, f2, {Cx<L>(r.point[0].real(), r.point[0].imag()),
                                            Cx<L>(r.point[1].real(), r.point[1].imag())}, 20);
          return TorusPoint{wrap_angle(static_cast<double>(std::arg(z[0]))),
                            wrap_angle(static_cast<double>(std::arg(z[1])))};
        };
        d = torus_distance(polish(roots[i]), polish(roots[j]));
      }
      if (d <= tolerance) parent[find(i)] = find(j);
    }

  std::vector<std::vector<std::size_t>> groups(count);
  for (std::size_t i = 0; i < count; ++i) groups[find(i)].push_back(i);
  for (auto& g : groups) {
    if (g.empty()) continue;
    SectorCluster c;
    c.members = g;
    c.argument = args[g.front()];
    c.nonreal = !is_real_trinomial(f1, c.argument) || !is_real_trinomial(f2, c.argument);
    report.max_cluster = std::max(report.max_cluster, g.size());
    if (g.size() >= 3) ++report.oversized_clusters;
    if (c.nonreal && g.size() >= 2) ++report.nonreal_violations;
    report.clusters.push_back(std::move(c));
  }
  return report;
}

bool system_lopsided_membership(const CircuitSystem& system, const TorusPoint& theta) {
  for (const auto& f : {system.first(), system.second()}) {
    const PointConfiguration c{2, f.exponents};
    if (colopsided_at(c, f.coeffs, theta).colopsided()) return false;
  }
  return true;
}

}  // namespace coamoeba

namespace coamoeba {

bool conjugation_closed(const std::vector<SystemRoot>& roots, double tolerance) {
  for (const auto& r : roots) {
    const bool paired = std::any_of(roots.begin(), roots.end(), [&](const SystemRoot& s) {
      return std::abs(s.point[0] - std::conj(r.point[0])) <= tolerance * std::abs(r.point[0]) &&
             std::abs(s.point[1] - std::conj(r.point[1])) <= tolerance * std::abs(r.point[1]);
    });
    if (!paired) return false;
  }
  return true;
}

PointConfiguration random_simplex_circuit(std::mt19937_64& rng, std::int64_t max_volume) {
  std::uniform_int_distribution<std::int64_t> coord(-3, 3);
  for (;;) {
    std::vector<IntVector> tri{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
    auto twice_area = [&](const IntVector& a, const IntVector& b, const IntVector& c) {
      return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    };
    const std::int64_t vol = std::abs(twice_area(tri[0], tri[1], tri[2]));
    if (vol == 0 || vol > max_volume) continue;
    std::vector<IntVector> interior;
    for (std::int64_t x = -3; x <= 3; ++x)
      for (std::int64_t y = -3; y <= 3; ++y) {
        const IntVector p{x, y};
        const auto s0 = twice_area(tri[0], tri[1], p), s1 = twice_area(tri[1], tri[2], p),
                   s2 = twice_area(tri[2], tri[0], p);
        if ((s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0)) interior.push_back(p);
      }
    if (interior.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, interior.size() - 1);
    std::vector<IntVector> pts = tri;
    pts.push_back(interior[pick(rng)]);
    std::shuffle(pts.begin(), pts.end(), rng);
    return validate(2, pts);
  }
}

CampaignSummary fewnomial_campaign(std::size_t trials, std::uint64_t seed, std::int64_t max_volume) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CampaignSummary summary;
  for (std::size_t t = 0; t < trials; ++t) {
    ++summary.trials;
    const PointConfiguration support = random_simplex_circuit(rng, max_volume);
    const bool real = t % 2 == 1;
    CoefficientVector p(4), q(4);
    for (std::size_t k = 0; k < 4; ++k) {
      p[k] = real ? Complex(gauss(rng), 0) : Complex(gauss(rng), gauss(rng));
      q[k] = real ? Complex(gauss(rng), 0) : Complex(gauss(rng), gauss(rng));
    }
    std::vector<SystemRoot> roots;
    CircuitSystem system;
    try {
      system = reduce_to_trinomials(support, p, q);
      roots = solve_system(system);
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Degeneracy) throw;
      ++summary.skipped;
      continue;
    }
    ++summary.solved;
    const auto volume = static_cast<std::size_t>(profile(support).total_volume);
    if (roots.size() == volume) ++summary.generic;
    for (const auto& r : roots) summary.max_residual = std::max(summary.max_residual, r.residual);
    if (real) {
      ++summary.real_systems;
      if (!conjugation_closed(roots)) ++summary.conjugation_failures;
    }
    const SectorReport census = sector_census(system, roots);
    summary.max_cluster = std::max(summary.max_cluster, census.max_cluster);
    summary.oversized_clusters += census.oversized_clusters;
    summary.nonreal_violations += census.nonreal_violations;
    summary.refined_pairs += census.refined_pairs;
  }
  return summary;
}

}  // namespace coamoeba
