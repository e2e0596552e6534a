#include "doctest.h"

#include "coamoeba/error.hpp"
#include "coamoeba/planar_raster.hpp"
#include "oracles.hpp"

using namespace coamoeba;
using oracle::kPi;

TEST_CASE("trinomial coamoeba area and components") {
  const PointConfiguration tri{2, {{0, 0}, {1, 0}, {0, 1}}};
  const auto img = raster_coamoeba(tri, {1.0, 1.0, 1.0}, 256);
  CHECK(area(img) / (kPi * kPi) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(complement_components(img) == 1);
}

TEST_CASE("exact membership agrees with the pushforward sample") {
  const auto sq = validate({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const CoefficientVector f{1.0, 1.0, 1.0, -1.0};
  const auto exact = raster_coamoeba(sq, f, 64);
  const auto push = raster_coamoeba(sq, f, 64, RasterMethod::Pushforward);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < exact.bits.size(); ++i) differ += exact.bits[i] != push.bits[i];
  // boundary pixels only
  CHECK(differ < exact.bits.size() / 10);
  CHECK(area(exact) / (kPi * kPi) == doctest::Approx(2.0).epsilon(0.05));
  CHECK(complement_components(exact) == 2);
}

TEST_CASE("pointwise membership at a sampled curve point") {
  const auto sq = validate({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const CoefficientVector f{1.0, Complex(0.3, 1), 2.0, -1.0};
  // pick z1, solve the linear equation for z2
  for (Complex z1 : {Complex(0.4, 0.7), Complex(-2, 0.1), Complex(1.5, -1)}) {
    const Complex z2 = -(f[0] + f[1] * z1) / (f[2] + f[3] * z1);
    TorusPoint theta{wrap_angle(std::arg(z1)), wrap_angle(std::arg(z2))};
    CHECK(coamoeba_membership(sq, f, theta));
  }
}

TEST_CASE("coamoeba sits inside the lopsided coamoeba") {
  const auto h = validate({{0, 0}, {1, 2}, {2, 1}, {1, 1}});
  const CoefficientVector f{1.0, 1.0, 1.0, -3.0};
  const auto c = raster_coamoeba(h, f, 128);
  const auto l = raster_lopsided(h, f, 128);
  std::size_t outside = 0;
  for (std::size_t i = 0; i < c.bits.size(); ++i) outside += c.bits[i] && !l.bits[i];
  CHECK(outside == 0);
}

TEST_CASE("ppm header") {
  const PointConfiguration tri{2, {{0, 0}, {1, 0}, {0, 1}}};
  const auto ppm = raster_coamoeba(tri, {1.0, 1.0, 1.0}, 16).to_ppm();
  CHECK(ppm.rfind("P6\n16 16\n255\n", 0) == 0);
  CHECK(ppm.size() == std::string("P6\n16 16\n255\n").size() + 16 * 16 * 3);
}

TEST_CASE("coverage counts") {
  const TrinomialQuadruple quad{{2, {{0, 0}, {1, 0}, {0, 1}}}, {1.0, Complex(0.5, 1), 2.0}, 0};
  const auto stats = covering_check(quad, 2000, 1);
  CHECK(stats.histogram.size() == 1);
  CHECK(stats.histogram.count(1) == 1);

  const auto two = two_colopsided_check(validate({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {1.0, 2.0, Complex(0, 1), -1.0},
                                        2000, 3);
  CHECK(two.histogram.size() == 1);
  CHECK(two.histogram.count(2) == 1);
}
