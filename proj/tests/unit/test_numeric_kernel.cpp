#include "doctest.h"

#include "coamoeba/error.hpp"
#include "coamoeba/numeric_kernel.hpp"
#include "oracles.hpp"

using namespace coamoeba;

namespace {

UnivariatePoly from_roots(const std::vector<Complex>& rs) {
  std::vector<Complex> c{1.0};
  for (auto r : rs) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] -= r * c[i];
      next[i + 1] += c[i];
    }
    c = next;
  }
  return {c, 0};
}

bool has_root(const std::vector<Complex>& found, Complex r, double tol) {
  for (auto z : found)
    if (std::abs(z - r) < tol) return true;
  return false;
}

}  // namespace

TEST_CASE("cyclotomic roots") {
  const auto rs = root_list({{1.0, 1.0, 1.0}, 0});
  REQUIRE(rs.size() == 2);
  CHECK(has_root(rs, std::polar(1.0, 2 * oracle::kPi / 3), 1e-12));
  CHECK(has_root(rs, std::polar(1.0, -2 * oracle::kPi / 3), 1e-12));
}

TEST_CASE("roots recover a random factorisation") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rs = oracle::random_coeffs(rng, 2 + trial % 7);
    const auto found = root_list(from_roots(rs));
    REQUIRE(found.size() == rs.size());
    for (auto r : rs) CHECK(has_root(found, r, 1e-8 * std::max(1.0, std::abs(r))));
  }
}

TEST_CASE("double root is reported once with multiplicity") {
  const auto rs = roots(from_roots({2.0, 2.0, Complex(0, 1)}));
  REQUIRE(rs.size() == 2);
  int total = 0;
  for (const auto& r : rs) total += r.multiplicity;
  CHECK(total == 3);
}

TEST_CASE("offset shifts are ignored by root finding") {
  // z^-1 (1 - 4 xi) style linear factor
  const auto rs = root_list({{1.0, -4.0}, -1});
  REQUIRE(rs.size() == 1);
  CHECK(std::abs(rs[0] - 0.25) < 1e-14);
}

TEST_CASE("binomial system solutions satisfy the monomial equations") {
  const BinomialSystem sys{{{2, 1}, {1, 2}}, {Complex(1, 1), Complex(-2, 0.5)}};
  const auto sols = solve_binomial_system(sys);
  CHECK(sols.size() == 3);
  for (const auto& s : sols) {
    const auto z = s.point();
    for (std::size_t i = 0; i < 2; ++i) {
      const Complex lhs = std::pow(z[0], sys.exponents[i][0]) * std::pow(z[1], sys.exponents[i][1]);
      CHECK(std::abs(lhs - sys.targets[i]) < 1e-12 * std::abs(sys.targets[i]));
    }
  }
}

TEST_CASE("resultant vanishes exactly at common roots") {
  // p = z2 - z1^2, q = z2 + z1 - 2: eliminating z2 leaves -(z1^2 + z1 - 2) = -(z1 - 1)(z1 + 2)
  const LaurentPolynomial p{2, {{0, 1}, {2, 0}}, {1.0, -1.0}};
  const LaurentPolynomial q{2, {{0, 1}, {1, 0}, {0, 0}}, {1.0, 1.0, -2.0}};
  const auto res = sylvester_resultant(p, q, 1);
  const auto rs = root_list(res);
  REQUIRE(rs.size() == 2);
  CHECK(has_root(rs, 1.0, 1e-10));
  CHECK(has_root(rs, -2.0, 1e-10));

  // common factor z2 - z1
  const LaurentPolynomial a{2, {{0, 1}, {1, 0}}, {1.0, -1.0}};
  const LaurentPolynomial b{2, {{0, 2}, {0, 1}, {1, 1}, {1, 0}}, {1.0, 1.0, -1.0, -1.0}};
  CHECK_THROWS_AS(sylvester_resultant(a, b, 1), Error);
}

TEST_CASE("curve samples lie on the curve") {
  const PointConfiguration tri{2, {{0, 0}, {1, 0}, {0, 1}}};
  const auto s = curve_fibers(tri, {1.0, 1.0, 1.0}, {Complex(0.5, 0.2), Complex(-3, 1)});
  REQUIRE(s.arguments.size() == 2);
  // on 1 + z1 + z2 = 0 the argument of z2 is that of -(1 + z1)
  CHECK(oracle::circle_distance(s.arguments[0][1], std::arg(-(1.0 + Complex(0.5, 0.2)))) < 1e-12);
  CHECK(oracle::circle_distance(s.arguments[1][1], std::arg(-(1.0 + Complex(-3, 1)))) < 1e-12);

  const auto full = curve_sample(tri, {1.0, 1.0, 1.0}, {});
  CHECK(full.arguments.size() > 1000);
}
