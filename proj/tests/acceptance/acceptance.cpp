// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "coamoeba/critical_arguments.hpp"
#include "coamoeba/discriminant.hpp"
#include "coamoeba/error.hpp"
#include "coamoeba/phase_engine.hpp"
#include "coamoeba/planar_raster.hpp"
#include "coamoeba/system_solver.hpp"
#include "oracles.hpp"

using namespace coamoeba;
using oracle::kPi;

namespace {

constexpr double kPi2 = kPi * kPi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Criterion = std::function<void(Outcome&)>;

// 1 ------------------------------------------------------------------------
void exact_fixtures(Outcome& out) {
  const auto q = validate({{0}, {1}, {2}});
  const auto p = profile(q);
  out.require(p.raw_gale == IntVector{1, -2, 1}, "raw Gale (1,-2,1)");
  const auto d = discriminant(q);
  out.require(d.plus_constant == 1 && d.minus_constant == 4, "reduced discriminant 1 - 4 xi");
  out.require(d.reduced(0.25) == Complex(0.0), "1 - 4 xi vanishes at 1/4");
  out.detail << "raw_gale=(1,-2,1) reduced=" << d.plus_constant << " - " << d.minus_constant << "*xi";
}

// 2 ------------------------------------------------------------------------
void quadratic_sweep(Outcome& out) {
  const auto q = validate({{0}, {1}, {2}});
  std::size_t points = 0, u1 = 0;
  for (double r : {0.125, 0.25, 0.5, 1.0, 4.0})
    for (double a : {0.0, 1.0 / 3, -1.0 / 3, 2.0 / 3, -2.0 / 3, 1.0, 0.5}) {
      const Complex xi = std::polar(r, a * kPi);
      ++points;
      // oracle: distinct root arguments of 1 + z + xi z^2 partition the circle
      const auto rs = root_list({{1.0, 1.0, xi}, 0});
      const std::size_t arcs = oracle::arc_count(rs);
      const bool expect_u1 = a == 0.0 && r <= 0.25;
      try {
        const auto c = classify_space(q, {1.0, 1.0, xi});
        const bool is_u1 = c.label == SpaceLabel::U1;
        u1 += is_u1;
        out.require(c.expected_components == arcs, "component count at r=" + std::to_string(r));
        out.require(is_u1 == expect_u1, "U1 locus at r=" + std::to_string(r) + " a=" + std::to_string(a));
      } catch (const Error& e) {
        out.require(false, e.what());
      }
    }
  out.detail << points << " grid points, " << u1 << " U1";
}

// 3 ------------------------------------------------------------------------
void hypocycloid(Outcome& out) {
  const auto h = validate({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  const auto d = discriminant(h);
  const auto xis = root_list(d.specialize({1.0, 1.0, 1.0, 1.0}, 3));
  out.require(xis.size() == 3, "three discriminant roots");
  double worst = 0.0;
  for (auto xi : xis) {
    worst = std::max(worst, std::abs(std::abs(xi) - 3.0));
    // oracle: the singular-point equations force z^3 = w^3 = 1 and xi z w = -3
    bool singular = false;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Complex z = std::polar(1.0, 2 * kPi * j / 3), w = std::polar(1.0, 2 * kPi * k / 3);
        if (std::abs(xi * z * w + 3.0) < 1e-9) singular = true;
      }
    out.require(singular, "root is a singular-point value");
  }
  out.require(worst < 1e-9, "moduli 3 +- 1e-9");

  std::size_t members = 0;
  const int steps = 720;
  for (int s = 0; s < steps; ++s) {
    const double a = -kPi + 2 * kPi * s / steps;
    const bool expect = s == 0 || s == steps / 3 || s == 2 * steps / 3;  // -π, -π/3, π/3
    const bool got = in_discriminant_coamoeba(h, {1.0, 1.0, 1.0, std::polar(2.5, a)}).member;
    members += got;
    out.require(got == expect, "membership at arg " + std::to_string(a / kPi) + "π");
  }
  for (double a : {kPi, kPi / 3, -kPi / 3})
    for (double eps : {1e-7, -1e-7})
      out.require(!in_discriminant_coamoeba(h, {1.0, 1.0, 1.0, std::polar(2.5, a + eps)}).member,
                  "no membership just off the rays");
  out.detail << "max ||xi|-3| = " << worst << ", members on 720-point circle = " << members;
}

// 4 ------------------------------------------------------------------------
void vertex_family(Outcome& out) {
  const auto v = validate({{0, 0}, {1, 0}, {0, 3}, {3, 1}});
  // oracle: at a singular point the monomial values are proportional to the
  // kernel of the augmented matrix; normalise the constant term to 1, then
  // z1 and z2^3 are fixed and xi follows for each cube root z2.
  const auto ker = oracle::cofactor_kernel(v);
  const double t = 1.0 / static_cast<double>(ker[0]);
  const Complex z1 = ker[1] * t;
  const Complex z2cubed = ker[2] * t;
  std::vector<double> singular_args;
  for (int k = 0; k < 3; ++k) {
    const Complex z2 = std::polar(std::cbrt(std::abs(z2cubed)), (std::arg(z2cubed) + 2 * kPi * k) / 3);
    const Complex xi = ker[3] * t / (z1 * z1 * z1 * z2);
    out.require(std::abs(1.0 + z1 + z2 * z2 * z2 + xi * z1 * z1 * z1 * z2) < 1e-12, "oracle point on the curve");
    singular_args.push_back(std::arg(xi));
  }
  auto on_ray = [&](double a) {
    for (double s : singular_args)
      if (oracle::circle_distance(a, s) < 1e-9) return true;
    return false;
  };
  std::size_t oracle_u1 = 0;
  const double moduli[] = {0.5, 1.0, 2.0};
  for (int k = 0; k < 12; ++k) {
    const double a = k * kPi / 6;
    const auto c = classify_space(v, {1.0, 1.0, 1.0, std::polar(moduli[k % 3], a)});
    oracle_u1 += on_ray(a);
    out.require((c.label == SpaceLabel::U1) == on_ray(a), "oracle point k=" + std::to_string(k));
  }
  std::size_t sweep_u1 = 0;
  for (int s = 0; s < 360; ++s) {
    const double a = 2 * kPi * s / 360;
    const bool u1 = classify_space(v, {1.0, 1.0, 1.0, std::polar(1.3, a)}).label == SpaceLabel::U1;
    sweep_u1 += u1;
    const bool ray = s == 0 || s == 120 || s == 240;
    out.require(u1 == ray, "sweep at degree " + std::to_string(s));
  }
  out.detail << "oracle rays at 0, ±2π/3; 12 oracle points (" << oracle_u1 << " U1); 360-step sweep U1 count "
             << sweep_u1;
}

// 5 ------------------------------------------------------------------------
void areas(Outcome& out) {
  const int R = 1024;
  struct Fixture {
    const char* name;
    PointConfiguration config;
    CoefficientVector coeffs;
    double target;
  };
  const Fixture fixtures[] = {
      {"1+z1+z2", {2, {{0, 0}, {1, 0}, {0, 1}}}, {1.0, 1.0, 1.0}, kPi2},
      {"1+z1+z2-z1z2", {2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}}, {1.0, 1.0, 1.0, -1.0}, 2 * kPi2},
      {"1+zw^2+z^2w-3zw", {2, {{0, 0}, {1, 2}, {2, 1}, {1, 1}}}, {1.0, 1.0, 1.0, -3.0}, 2 * kPi2},
  };
  for (const auto& f : fixtures) {
    const double a = area(raster_coamoeba(f.config, f.coeffs, R));
    out.require(std::abs(a - f.target) <= 0.02 * 4 * kPi2, f.name);
    out.detail << f.name << "=" << a / kPi2 << "π² ";
  }
  std::mt19937_64 rng(2024);
  const PointConfiguration ne{2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}}};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double a = area(raster_coamoeba(ne, oracle::random_coeffs(rng, 4), R));
    worst = std::max(worst, a);
    out.require(a <= 2 * kPi2 - 0.03 * 4 * kPi2, "non-equimodular draw " + std::to_string(trial));
  }
  out.detail << "non-equimodular max=" << worst / kPi2 << "π² (bound " << 2 - 0.12 << "π²)";
}

// 6 ------------------------------------------------------------------------
void lopsided_identity(Outcome& out) {
  std::mt19937_64 rng(606);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_planar_circuit(rng);
    const double a = area(raster_lopsided(c, oracle::random_coeffs(rng, 4), 1024));
    const double rel = std::abs(a - 2 * kPi2) / (2 * kPi2);
    worst = std::max(worst, rel);
    out.require(rel <= 0.01, "circuit " + std::to_string(trial));
  }
  out.detail << "20 circuits, max relative deviation " << worst;
}

// 7 ------------------------------------------------------------------------
void covering(Outcome& out) {
  std::mt19937_64 rng(707);
  std::size_t tested = 0, rejected = 0;
  for (int q = 0; q < 10; ++q) {
    const PointConfiguration tri{2, {{0, 0}, {1, 0}, {0, 1}}};
    const TrinomialQuadruple quad{tri, oracle::random_coeffs(rng, 3), static_cast<std::size_t>(q % 3)};
    const auto s = covering_check(quad, 10000, 100 + q);
    tested += s.samples;
    rejected += s.rejected;
    out.require(s.histogram.size() == 1 && s.histogram.count(1) == 1, "quadruple " + std::to_string(q));
  }
  std::size_t tested2 = 0;
  for (int c = 0; c < 10; ++c) {
    const auto config = oracle::random_planar_circuit(rng);
    const auto s = two_colopsided_check(config, oracle::random_coeffs(rng, 4), 1000, 200 + c);
    tested2 += s.samples;
    out.require(s.samples == 1000, "enough generic samples");
    out.require(s.histogram.size() == 1 && s.histogram.count(2) == 1, "circuit " + std::to_string(c));
  }
  out.detail << "covering: " << tested << " samples all 1 (" << rejected << " near H_Σ redrawn); two-colopsided: "
             << tested2 << " samples all 2";
}

// 8 ------------------------------------------------------------------------
void critical_arguments(Outcome& out) {
  std::mt19937_64 rng(808);
  std::size_t done = 0, draws = 0;
  double worst = 0.0;
  while (done < 50 && draws < 5000) {
    ++draws;
    const auto raw = random_simplex_circuit(rng, 8);
    PointConfiguration config;
    try {
      const auto of = orthogonal_form(normalize_lattice(raw).config);
      if (!of.special) continue;
      config = of.config;
    } catch (const Error&) {
      continue;
    }
    const auto f = oracle::random_coeffs(rng, 4);
    const auto vol = profile(config).normalized_volume();
    const auto cs = critical_set(config, f);
    out.require(cs.points.size() == static_cast<std::size_t>(vol), "|critical set| = Vol");
    for (const auto& p : cs.points) {
      // oracle: toric gradient summed directly from the monomials
      double scale = 0.0;
      Complex g[2] = {0.0, 0.0};
      for (std::size_t k = 0; k < 4; ++k) {
        const Complex term = f[k] * std::pow(p.point[0], config[k][0]) * std::pow(p.point[1], config[k][1]);
        scale = std::max(scale, std::abs(term));
        g[0] += static_cast<double>(config[k][0]) * term;
        g[1] += static_cast<double>(config[k][1]) * term;
      }
      const double r = std::max(std::abs(g[0]), std::abs(g[1])) / scale;
      worst = std::max(worst, r);
      out.require(r < 1e-9, "gradient residual");
    }
    const auto report = verify_index_set(config, f);
    out.require(report.orders_distinct, "distinct orders");
    out.require(report.counts_match, "counts reconcile with the index set");
    ++done;
  }
  out.require(done == 50, "50 special-form circuits found");
  out.detail << done << " circuits (" << draws << " draws), max residual " << worst;
}

// 9 ------------------------------------------------------------------------
void campaign(Outcome& out) {
  const auto s = fewnomial_campaign(200, 7, 8);
  out.require(s.oversized_clusters == 0, "no sector with 3 or more roots");
  out.require(s.nonreal_violations == 0, "no nonreal sector with 2 or more roots");
  out.require(s.generic * 100 >= 95 * s.trials, "root count = Vol in 95% of trials");
  out.require(s.conjugation_failures == 0, "real systems closed under conjugation");
  out.detail << s.trials << " trials, generic " << s.generic << ", max cluster " << s.max_cluster
             << ", refined pairs " << s.refined_pairs << ", max residual " << s.max_residual;
}

// 10 -----------------------------------------------------------------------
void properties(Outcome& out) {
  std::mt19937_64 rng(1010);
  // volume balance and Gale orthogonality
  for (int i = 0; i < 500; ++i) {
    const auto c = oracle::random_planar_circuit(rng);
    const auto p = profile(c);
    std::int64_t plus = 0, minus = 0, hull2 = 0;
    for (auto b : p.raw_gale) (b > 0 ? plus : minus) += std::abs(b);
    // twice the Euclidean hull area (normalised volume in the plane) by shoelace
    std::vector<IntVector> pts = c.points;
    std::sort(pts.begin(), pts.end());
    std::vector<IntVector> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t base = hull.size();
      for (const auto& q : pts) {
        while (hull.size() >= base + 2) {
          const auto& a = hull[hull.size() - 2];
          const auto& b = hull.back();
          if ((b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]) > 0) break;
          hull.pop_back();
        }
        hull.push_back(q);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    for (std::size_t k = 0; k < hull.size(); ++k) {
      const auto& a = hull[k];
      const auto& b = hull[(k + 1) % hull.size()];
      hull2 += a[0] * b[1] - a[1] * b[0];
    }
    out.require(plus == minus && plus == p.total_volume && std::abs(hull2) == p.total_volume, "volume balance");
    for (int row = 0; row < 3; ++row) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < 4; ++k) dot += (row == 0 ? 1 : c[k][row - 1]) * p.raw_gale[k];
      out.require(dot == 0, "Gale orthogonality");
    }
  }

  // order map along straight paths inside the colopsided region
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi), step(-0.4, 0.4);
  std::size_t paths = 0, attempts = 0;
  while (paths < 500 && attempts < 100000) {
    ++attempts;
    const auto c = oracle::random_planar_circuit(rng);
    if (profile(c).degenerate()) continue;
    const auto f = oracle::random_coeffs(rng, 4);
    const TorusPoint start{ang(rng), ang(rng)};
    const TorusPoint delta{step(rng), step(rng)};
    std::vector<double> values;
    bool inside = true;
    for (int s = 0; s <= 40 && inside; ++s) {
      const TorusPoint t{start[0] + delta[0] * s / 40, start[1] + delta[1] * s / 40};
      if (!colopsided_at(c, f, t).colopsided()) {
        inside = false;
        break;
      }
      try {
        values.push_back(order_map(c, f, t));
      } catch (const Error&) {
        inside = false;
      }
    }
    if (!inside) continue;
    ++paths;
    for (double v : values) out.require(std::abs(v - values.front()) < 1e-9, "order map constant on a path");
  }
  out.require(paths == 500, "500 in-component paths");

  // conjugation closure of real systems
  std::normal_distribution<double> g;
  std::size_t systems = 0;
  while (systems < 500) {
    const auto support = random_simplex_circuit(rng, 8);
    const auto sys = make_system(support, g(rng), g(rng), g(rng), g(rng));
    std::vector<SystemRoot> roots;
    try {
      roots = solve_system(sys);
    } catch (const Error&) {
      continue;
    }
    ++systems;
    out.require(conjugation_closed(roots, 1e-8), "conjugation closure");
  }
  out.detail << "500 circuits (balance, orthogonality), " << paths << " paths, " << systems << " real systems";
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"exact fixtures", exact_fixtures},
      {"quadratic classification sweep", quadratic_sweep},
      {"hypocycloid discriminant", hypocycloid},
      {"vertex family U1 rays", vertex_family},
      {"coamoeba areas", areas},
      {"lopsided area identity", lopsided_identity},
      {"covering and two-colopsided", covering},
      {"critical arguments", critical_arguments},
      {"fewnomial campaign", campaign},
      {"property suites", properties},
  };
  int failures = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !out.pass;
    std::printf("%s %d %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", n, name, out.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
