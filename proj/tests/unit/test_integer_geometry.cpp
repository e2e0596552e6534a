#include "doctest.h"

#include "coamoeba/error.hpp"
#include "coamoeba/integer_geometry.hpp"
#include "oracles.hpp"

using namespace coamoeba;

TEST_CASE("quadratic circuit profile") {
  const auto p = profile(validate({{0}, {1}, {2}}));
  CHECK(p.raw_gale == IntVector{1, -2, 1});
  CHECK(p.total_volume == 2);
  CHECK(p.kind == CircuitKind::SimplexCircuit);
  CHECK(p.interior_point == std::size_t{1});
  CHECK(p.signs == std::vector<int>{1, -1, 1});
}

TEST_CASE("hypocycloid lives in a sublattice") {
  const auto config = validate({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  const auto p = profile(config);
  CHECK(p.raw_gale == IntVector{3, 3, 3, -9});
  CHECK(p.primitive_gale == IntVector{1, 1, 1, -3});
  CHECK(p.total_volume == 9);
  CHECK(p.lattice_index == 3);
  CHECK(p.normalized_volume() == 3);

  const auto norm = normalize_lattice(config);
  CHECK(lattice_index(norm.config) == 1);
  CHECK(profile(norm.config).raw_gale == IntVector{1, 1, 1, -3});
  const auto of = orthogonal_form(norm.config);
  CHECK(of.special);
  CHECK(of.m1 == 2);
  CHECK(of.m2 == 0);
}

TEST_CASE("vertex circuit and equimodularity") {
  const auto v = profile(validate({{0, 0}, {1, 0}, {0, 3}, {3, 1}}));
  CHECK(v.kind == CircuitKind::VertexCircuit);
  CHECK(v.raw_gale == IntVector{7, -9, -1, 3});
  CHECK(v.total_volume == 10);

  const auto ne = profile(validate({{0, 0}, {2, 0}, {0, 1}, {1, 1}}));
  CHECK_FALSE(equimodular_check(ne).equimodular);
  CHECK(equimodular_check(profile(validate({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).equimodular);
}

TEST_CASE("Gale vector matches cofactor kernel and balances volumes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_planar_circuit(rng);
    const auto p = profile(c);
    const auto ref = oracle::cofactor_kernel(c);
    // same line, same orientation up to sign
    const std::int64_t s = (ref[0] == p.raw_gale[0]) ? 1 : -1;
    for (std::size_t k = 0; k < 4; ++k) CHECK(p.raw_gale[k] == s * ref[k]);
    std::int64_t plus = 0, minus = 0;
    for (auto b : p.raw_gale) (b > 0 ? plus : minus) += std::abs(b);
    CHECK(plus == minus);
    CHECK(plus == p.total_volume);
  }
}

TEST_CASE("determinant against permutation expansion") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m(n, IntVector(n));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    CHECK(narrow(determinant(to_big(m))) == oracle::leibniz_det(m));
  }
}

TEST_CASE("Smith normal form reproduces the matrix") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(3, IntVector(4));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    const auto snf = smith_normal_form(to_big(m));
    for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
    // left * m * right is diagonal
    const auto big = to_big(m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        BigInt acc = 0;
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 4; ++b) acc += snf.left[i][a] * big[a][b] * snf.right[b][j];
        const BigInt expect = (i == j && i < snf.diagonal.size()) ? snf.diagonal[i] : BigInt(0);
        CHECK(acc == expect);
      }
  }
}

TEST_CASE("congruences: one solution per unit of determinant") {
  const CongruenceSystem sys{{{1, 2}, {2, 1}}, {0.4, 1.1}};
  const auto sol = solve_congruences(sys);
  REQUIRE(sol.finite());
  CHECK(sol.solutions.size() == 3);
  for (const auto& x : sol.solutions)
    for (std::size_t i = 0; i < 2; ++i) {
      const double lhs = sys.lhs[i][0] * x[0] + sys.lhs[i][1] * x[1];
      CHECK(oracle::circle_distance(lhs, sys.rhs[i]) < 1e-9);
    }

  const auto q = solve_congruences({{{2}}, {0.0}});
  CHECK(q.solutions.size() == 2);

  const auto bad = solve_congruences({{{2, 0}, {4, 0}}, {0.0, 1.0}});
  CHECK_FALSE(bad.consistent);
  const auto line = solve_congruences({{{1, 1}}, {0.5}});
  CHECK(line.consistent);
  CHECK(line.free_dimension == 1);
}

TEST_CASE("orthogonal form of the quadratic and the square") {
  const auto of = orthogonal_form(validate({{0}, {1}, {2}}));
  CHECK(of.special);
  std::vector<IntVector> pts = of.config.points;
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<IntVector>{{-1}, {0}, {1}});

  const auto square = validate({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(orthogonal_form(square), Error);
  const auto sub = orthogonal_form(square, {.allow_sublattice = true});
  CHECK(sub.m1 == 1);
  CHECK(sub.m2 == 1);
  CHECK(sub.sublattice_index == 2);
}

TEST_CASE("validation errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code([] { validate({{0, 0}, {1, 1}}); }) == ErrorCode::WrongCardinality);
  CHECK(code([] { validate({{0, 0}, {1, 1}, {2, 2}, {3, 3}}); }) == ErrorCode::NotFullDimensional);
  CHECK(profile(validate({{0, 0}, {1, 0}, {2, 0}, {0, 1}})).degenerate());
}
