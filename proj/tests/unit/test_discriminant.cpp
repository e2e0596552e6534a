#include "doctest.h"

#include "coamoeba/discriminant.hpp"
#include "coamoeba/error.hpp"
#include "oracles.hpp"

using namespace coamoeba;
using oracle::kPi;

TEST_CASE("discriminant strings") {
  CHECK(discriminant(validate({{0}, {1}, {2}})).to_string() == "f1^2 - 4*f0*f2");
  CHECK(discriminant(validate({{0, 0}, {3, 0}, {0, 3}, {1, 1}})).to_string() == "f3^3 + 27*f0*f1*f2");
}

TEST_CASE("reduced quadratic discriminant is 1 - 4 xi") {
  const auto d = discriminant(validate({{0}, {1}, {2}}));
  CHECK(std::abs(d.reduced(0.25)) < 1e-15);
  CHECK(std::abs(d.reduced(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(d.reduced(1.0) + 3.0) < 1e-15);
}

TEST_CASE("hypocycloid discriminant roots are singular points") {
  const auto config = validate({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  const auto d = discriminant(config);
  const auto xis = root_list(d.specialize({1.0, 1.0, 1.0, 1.0}, 3));
  REQUIRE(xis.size() == 3);
  for (auto xi : xis) {
    CHECK(std::abs(std::abs(xi) - 3.0) < 1e-9);
    // the singular-point equations give z^3 = w^3 = 1 and xi z w = -3
    bool singular = false;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Complex z = std::polar(1.0, 2 * kPi * j / 3), w = std::polar(1.0, 2 * kPi * k / 3);
        const Complex f = 1.0 + z * z * z + w * w * w + xi * z * w;
        const Complex fz = 3.0 * z * z + xi * w, fw = 3.0 * w * w + xi * z;
        if (std::abs(f) < 1e-9 && std::abs(fz) < 1e-9 && std::abs(fw) < 1e-9) singular = true;
      }
    CHECK(singular);
  }
}

TEST_CASE("discriminant coamoeba membership of the hypocycloid family") {
  const auto config = validate({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  for (int k = -6; k < 6; ++k) {
    const double a = k * kPi / 6;
    const bool expect = (k == -6 || k == 2 || k == -2);
    CHECK(in_discriminant_coamoeba(config, {1.0, 1.0, 1.0, std::polar(2.0, a)}).member == expect);
  }
}

TEST_CASE("quadratic classification agrees with root arguments") {
  const auto q = validate({{0}, {1}, {2}});
  for (double xi : {0.05, 0.125, 0.25, 0.3, 1.0, 4.0}) {
    const auto c = classify_space(q, {1.0, 1.0, xi});
    const auto arcs = oracle::arc_count(oracle::quadratic_roots(1.0, 1.0, xi));
    CHECK(c.expected_components == arcs);
    CHECK((c.label == SpaceLabel::U1) == (xi <= 0.25));
  }
  CHECK(classify_space(q, {1.0, 1.0, 0.25}).certificate == "boundary_zero_at_witness");
  CHECK(classify_space(q, {1.0, 1.0, std::polar(0.1, 0.3)}).certificate == "off_discriminant_coamoeba");
}

TEST_CASE("vertex family U1 rays") {
  const auto v = validate({{0, 0}, {1, 0}, {0, 3}, {3, 1}});
  for (int k = 0; k < 12; ++k) {
    const auto c = classify_space(v, {1.0, 1.0, 1.0, std::polar(1.5, k * kPi / 6)});
    CHECK((c.label == SpaceLabel::U1) == (k % 4 == 0));
  }
}

TEST_CASE("sign convention: U1 exactly where the signed discriminant is nonnegative") {
  std::mt19937_64 rng(4);
  const auto q = validate({{0}, {1}, {2}});
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = classify_space(q, {1.0, 1.0, u(rng)});
    REQUIRE(c.signed_discriminant);
    CHECK((c.label == SpaceLabel::U1) == (*c.signed_discriminant >= -1e-12));
  }
}
