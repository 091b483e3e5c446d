#include <cmath>
#include <doctest.h>

#include "simplexquant/enumeration.hpp"
#include "simplexquant/lattice.hpp"

using namespace simplexquant;

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(109, 9) == BigInt("4263421511271"));
}

TEST_CASE("count_types") {
  CHECK(count_types(3, 2) == 6);
  CHECK(count_types(3, 3) == 10);
  CHECK(count_types(2, 3) == 4);
  CHECK(count_types(5, 8) == 495);
  CHECK(count_types(10, 100) == BigInt("4263421511271"));
  // Exactness far beyond 64 bits.
  CHECK(count_types(64, 1000000) ==
        binomial(1000000 + 63, 63));
}

TEST_CASE("rank endpoints") {
  for (int m : {2, 3, 5, 8}) {
    for (std::int64_t n : {1, 2, 7}) {
      std::vector<std::int64_t> low(static_cast<std::size_t>(m), 0);
      low.back() = n;
      CHECK(rank(TypePoint(low, n)) == 0);
      std::vector<std::int64_t> high(static_cast<std::size_t>(m), 0);
      high.front() = n;
      CHECK(rank(TypePoint(high, n)) == count_types(m, n) - 1);
    }
  }
}

TEST_CASE("rank follows lexicographic order at m=3 n=2") {
  const LatticeSpec spec(3, 2);
  const auto types = enumerate_types(spec);
  REQUIRE(types.size() == 6);
  CHECK(types[0].counts == std::vector<std::int64_t>{0, 0, 2});
  CHECK(types[3].counts == std::vector<std::int64_t>{1, 0, 1});
  CHECK(types[5].counts == std::vector<std::int64_t>{2, 0, 0});
  for (std::size_t i = 0; i < types.size(); ++i) {
    CHECK(rank(types[i]) == BigInt(i));
  }
}

TEST_CASE("bijection on a spot grid") {
  for (int m : {2, 3, 5}) {
    for (std::int64_t n : {1, 4, 7}) {
      const auto types = enumerate_types(LatticeSpec(m, n));
      CHECK(BigInt(types.size()) == count_types(m, n));
      BigInt expected = 0;
      for (const auto& t : types) {
        const TypeIndex idx = rank(t);
        CHECK(idx == expected);
        CHECK(unrank(idx, m, n) == t);
        ++expected;
      }
    }
  }
  // Round-trip at (5, 8), all 495 types.
  const auto types = enumerate_types(LatticeSpec(5, 8));
  REQUIRE(types.size() == 495);
  for (const auto& t : types) {
    CHECK(unrank(rank(t), 5, 8) == t);
  }
}

TEST_CASE("unrank guards") {
  CHECK(unrank(0, 3, 2).counts == std::vector<std::int64_t>{0, 0, 2});
  CHECK(unrank(5, 3, 2).counts == std::vector<std::int64_t>{2, 0, 0});
  CHECK_THROWS_AS(unrank(6, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(unrank(-1, 3, 2), std::out_of_range);
}

TEST_CASE("rank of a large sparse point stays exact") {
  // m=64, n=10^6: counts concentrated on two coordinates.
  std::vector<std::int64_t> counts(64, 0);
  counts[0] = 999999;
  counts[63] = 1;
  const TypePoint point(counts, 1000000);
  const TypeIndex idx = rank(point);
  CHECK(idx > 0);
  CHECK(idx < count_types(64, 1000000));
  CHECK(unrank(idx, 64, 1000000) == point);
}

TEST_CASE("code_rate") {
  CHECK(code_rate(3, 2) == 3);
  CHECK(code_rate(3, 3) == 4);
  CHECK(code_rate(5, 8) == 9);
  // Exact power of two: C(3,1) = 4 needs exactly 2 bits.
  CHECK(code_rate(2, 3) == 2);
}

TEST_CASE("code_rate_exact asymptotic expansion") {
  // (m-1) log2 n - log2 (m-1)! approximates log2 |Q_n| as n grows.
  const double expected =
      2.0 * std::log2(1e6) - std::log2(2.0);
  CHECK(std::fabs(code_rate_exact(3, 1000000) - expected) < 0.01);
}

TEST_CASE("log2_big matches log2 on small values") {
  CHECK(log2_big(BigInt(1)) == 0.0);
  CHECK(log2_big(BigInt(1024)) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(log2_big(BigInt("4263421511271")) ==
        doctest::Approx(std::log2(4263421511271.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log2_big(BigInt(0)), std::invalid_argument);
}

TEST_CASE("max_n_for_rate") {
  CHECK(max_n_for_rate(3, 3) == 2);
  // 15 = C(6,2) types still fit a 4-bit index (indices 0..14 < 16).
  CHECK(max_n_for_rate(3, 4) == 4);
  // Frozen against the independent big-integer search.
  CHECK(max_n_for_rate(10, 40) == 85);
  CHECK_THROWS_AS(max_n_for_rate(10, 2), std::invalid_argument);
  for (int budget : {3, 9, 17}) {
    const std::int64_t n = max_n_for_rate(3, budget);
    CHECK(code_rate(3, n) <= budget);
    CHECK(code_rate(3, n + 1) > budget);
  }
}

TEST_CASE("count_dual_points") {
  CHECK(count_dual_points(3, 1) == 4);
  CHECK(count_dual_points(3, 2) == 10);
  CHECK(count_dual_points(3, 3) == 19);
  CHECK(count_dual_points(4, 2) == 15);
  CHECK(count_dual_points(4, 3) == 35);
  CHECK(count_dual_points(5, 2) == 21);
  CHECK(count_dual_points(2, 2) == 5);
  // Matches the actual enumeration.
  for (int m : {2, 3, 4, 5}) {
    for (std::int64_t n : {1, 2, 3}) {
      const auto points = enumerate_dual_points(LatticeSpec(m, n));
      CHECK(BigInt(points.size()) == count_dual_points(m, n));
    }
  }
}
