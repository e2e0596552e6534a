#include "doctest.h"

#include "coamoeba/critical_arguments.hpp"
#include "coamoeba/error.hpp"
#include "oracles.hpp"

using namespace coamoeba;
using oracle::kPi;

TEST_CASE("critical arguments of z^-1 + 1 + z") {
  const auto cs = critical_set(validate({{-1}, {0}, {1}}), {1.0, 1.0, 1.0});
  REQUIRE(cs.points.size() == 2);
  std::vector<double> args;
  for (const auto& p : cs.points) args.push_back(std::abs(principal_angle(p.argument[0])));
  std::sort(args.begin(), args.end());
  CHECK(args[0] == doctest::Approx(0.0));
  CHECK(args[1] == doctest::Approx(kPi));
}

TEST_CASE("hypocycloid in special form") {
  const auto g = validate({{-1, -1}, {1, 0}, {0, 1}, {0, 0}});
  const auto cs = critical_set(g, {1.0, 1.0, 1.0, -5.0});
  REQUIRE(cs.points.size() == 3);
  for (const auto& p : cs.points) {
    CHECK(p.residual < 1e-9);
    // binomial oracle: z^2 w = 1 and z w^2 = 1 force z = w, z^3 = 1
    CHECK(std::abs(p.point[0] - p.point[1]) < 1e-12);
    CHECK(std::abs(std::pow(p.point[0], 3) - 1.0) < 1e-12);
  }
  const auto report = verify_index_set(g, {1.0, 1.0, 1.0, -5.0});
  CHECK(report.colopsided_count == 2);
  CHECK(report.index_set.cardinality() == 2);
  CHECK(report.ok());
}

TEST_CASE("not in special form") {
  CHECK_THROWS_AS(critical_set(validate({{0}, {1}, {2}}), {1.0, 1.0, 1.0}), Error);
}
