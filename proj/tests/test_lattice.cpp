#include <algorithm>
#include <cmath>
#include <doctest.h>
#include <numeric>
#include <random>

#include "simplexquant/enumeration.hpp"
#include "simplexquant/geometry.hpp"
#include "simplexquant/lattice.hpp"
#include "simplexquant/sampling.hpp"

using namespace simplexquant;

namespace {

std::vector<Distribution> random_distributions(int m, int count,
                                               std::uint64_t seed) {
  std::vector<Distribution> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<double> buf(static_cast<std::size_t>(m));
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp_dist(1.0);
  for (int i = 0; i < count; ++i) {
    double total = 0.0;
    for (auto& v : buf) {
      v = exp_dist(rng) + 1e-12;
      total += v;
    }
    for (auto& v : buf) v /= total;
    out.push_back(Distribution::renormalized(buf));
  }
  return out;
}

double best_distance_over_lattice(const Distribution& p,
                                  const LatticeSpec& spec, Norm norm) {
  double best = std::numeric_limits<double>::infinity();
  for_each_type(spec, [&](const TypePoint& t) {
    best = std::min(best, distance(p, t.as_distribution(), norm));
  });
  return best;
}

}  // namespace

TEST_CASE("quantize worked examples") {
  const LatticeSpec spec(3, 3);
  SUBCASE("exact targets round without correction") {
    const auto r = quantize(Distribution({0.5, 0.3, 0.2}), LatticeSpec(3, 10));
    CHECK(r.point.counts == std::vector<std::int64_t>{5, 3, 2});
    CHECK(r.delta_applied == 0);
  }
  SUBCASE("surplus resolved against the weakest claim") {
    // Raw rounding gives (2,1,1); the entry that rounded up the furthest
    // (index 2, error 0.4) is pushed back down.
    const auto r = quantize(Distribution({0.55, 0.25, 0.2}), spec);
    CHECK(r.point.counts == std::vector<std::int64_t>{2, 1, 0});
    CHECK(r.delta_applied == 1);
    CHECK(r.distances.at(Norm::L1) == doctest::Approx(0.4).epsilon(1e-12));
  }
  SUBCASE("deficit filled from the largest rounding loss") {
    // Raw rounding gives (1,1,0), one short; index 0 lost the most mass
    // (tie on error, lower index wins) and gets the missing count.
    const auto r = quantize(Distribution({0.45, 0.45, 0.1}), spec);
    CHECK(r.point.counts == std::vector<std::int64_t>{2, 1, 0});
    CHECK(r.delta_applied == -1);
  }
  SUBCASE("two-point lattice") {
    const auto r = quantize(Distribution({0.9, 0.1}), LatticeSpec(2, 4));
    CHECK(r.point.counts == std::vector<std::int64_t>{4, 0});
  }
}

TEST_CASE("quantize validates spec compatibility") {
  CHECK_THROWS_AS(quantize(Distribution({0.5, 0.5}), LatticeSpec(3, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      quantize(Distribution({0.5, 0.5}), LatticeSpec(2, 2, 1, 2)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      quantize_biased(Distribution({0.5, 0.5}), LatticeSpec(2, 2)),
      std::invalid_argument);
}

TEST_CASE("quantize is idempotent on lattice points") {
  for (int m : {2, 3, 4}) {
    for (std::int64_t n : {1, 3, 6}) {
      const LatticeSpec spec(m, n);
      for_each_type(spec, [&](const TypePoint& t) {
        const auto r = quantize(t.as_distribution(), spec);
        CHECK(r.point == t);
        CHECK(r.distances.at(Norm::LInf) == doctest::Approx(0.0));
      });
    }
  }
}

TEST_CASE("quantize is permutation equivariant") {
  const LatticeSpec spec(4, 5);
  const auto dists = random_distributions(4, 50, 99);
  std::mt19937_64 rng(7);
  for (const auto& p : dists) {
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> shuffled(4);
    for (std::size_t i = 0; i < 4; ++i) shuffled[i] = p[perm[i]];
    const auto base = quantize(p, spec);
    const auto moved = quantize(Distribution(shuffled), spec);
    // Ties may break differently across orderings, so compare distances,
    // which are what optimality promises.
    CHECK(moved.distances.at(Norm::L1) ==
          doctest::Approx(base.distances.at(Norm::L1)).epsilon(1e-12));
    CHECK(moved.distances.at(Norm::LInf) ==
          doctest::Approx(base.distances.at(Norm::LInf)).epsilon(1e-12));
  }
}

TEST_CASE("rebalancing shift never exceeds half the dimension") {
  for (int m : {2, 3, 5, 9}) {
    const LatticeSpec spec(m, 7);
    for (const auto& p : random_distributions(m, 200, 1234 + m)) {
      const auto r = quantize(p, spec);
      CHECK(std::llabs(r.delta_applied) <= (m + 1) / 2);
      std::int64_t total = 0;
      for (auto c : r.point.counts) {
        CHECK(c >= 0);
        total += c;
      }
      CHECK(total == spec.n);
    }
  }
}

TEST_CASE("quantize is simultaneously optimal in L1, L2, and LInf") {
  // Exhaustive comparison against the full lattice on a small grid.
  for (int m : {2, 3, 4}) {
    for (std::int64_t n : {1, 2, 5}) {
      const LatticeSpec spec(m, n);
      for (const auto& p : random_distributions(m, 60, 31 * m + n)) {
        const auto r = quantize(p, spec);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
          const double best = best_distance_over_lattice(p, spec, norm);
          CHECK(r.distances.at(norm) <= best + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("biased quantize worked examples") {
  SUBCASE("uniform center stays put") {
    const LatticeSpec spec(3, 2, 1, 3);
    const Distribution center({1.0 / 3, 1.0 / 3, 1.0 / 3});
    const auto r = quantize_biased(center, spec);
    // Reconstruction (k_i + 1/3) / 3 with k = (1,1,0) (ties break to the
    // later index on the pullback).
    CHECK(r.point.n == 2);
    CHECK(r.distances.at(Norm::L2) ==
          doctest::Approx(0.27216552697590868).epsilon(1e-12));
  }
  SUBCASE("vertex clamps negative pullback mass") {
    const LatticeSpec spec(3, 2, 1, 3);
    const auto r = quantize_biased(Distribution({1.0, 0.0, 0.0}), spec);
    CHECK(r.point.counts == std::vector<std::int64_t>{2, 0, 0});
    CHECK(r.reconstruction[0] == doctest::Approx(7.0 / 9).epsilon(1e-15));
    CHECK(r.reconstruction[1] == doctest::Approx(1.0 / 9).epsilon(1e-15));
  }
  SUBCASE("reconstruction is strictly positive everywhere") {
    const LatticeSpec spec(5, 4, 1, 5);
    for (const auto& p : random_distributions(5, 100, 5001)) {
      const auto r = quantize_biased(p, spec);
      for (int i = 0; i < 5; ++i) CHECK(r.reconstruction[i] > 0.0);
      CHECK(std::isfinite(r.distances.at(Norm::KL)));
    }
  }
}

TEST_CASE("biased quantize is optimal on interior points") {
  // Wherever no clamping triggers, the biased rule inherits the plain
  // rule's simultaneous optimality; verify by exhaustion.
  const LatticeSpec spec(3, 4, 1, 3);
  const auto types = enumerate_types(LatticeSpec(3, 4));
  for (const auto& p : random_distributions(3, 150, 808)) {
    const auto r = quantize_biased(p, spec);
    for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& t : types) {
        best = std::min(
            best, distance(p, spec.reconstruct(t), norm));
      }
      CHECK(r.distances.at(norm) <= best + 1e-12);
    }
  }
}

TEST_CASE("dual quantize worked examples") {
  SUBCASE("barycenter is a deep hole of Q_1 at m=3") {
    const LatticeSpec spec(3, 1);
    const Distribution center({1.0 / 3, 1.0 / 3, 1.0 / 3});
    const auto plain = quantize(center, spec);
    const auto dual = quantize_dual(center, spec);
    CHECK(dual.coset == 2);
    CHECK(dual.base.counts == std::vector<std::int64_t>{0, 0, 1});
    CHECK(distance(center, dual.reconstruction, Norm::L2) ==
          doctest::Approx(0.0));
    CHECK(plain.distances.at(Norm::L2) > 0.3);
  }
  SUBCASE("lattice points keep coset zero") {
    const LatticeSpec spec(3, 2);
    for_each_type(spec, [&](const TypePoint& t) {
      const auto dual = quantize_dual(t.as_distribution(), spec);
      CHECK(dual.coset == 0);
      CHECK(dual.base == t);
    });
  }
}

TEST_CASE("dual quantize never loses to the plain lattice") {
  for (int m : {2, 3, 4}) {
    for (std::int64_t n : {1, 2, 4}) {
      const LatticeSpec spec(m, n);
      for (const auto& p : random_distributions(m, 80, 4096 + 17 * m + n)) {
        const auto plain = quantize(p, spec);
        const auto dual = quantize_dual(p, spec);
        CHECK(distance(p, dual.reconstruction, Norm::L2) <=
              plain.distances.at(Norm::L2) + 1e-12);
      }
    }
  }
}

TEST_CASE("dual quantize is optimal over the enumerated dual set") {
  for (int m : {2, 3}) {
    for (std::int64_t n : {1, 2, 3}) {
      const LatticeSpec spec(m, n);
      const auto points = enumerate_dual_points(spec);
      for (const auto& p : random_distributions(m, 60, 2222 + m + n)) {
        const auto dual = quantize_dual(p, spec);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : points) {
          best = std::min(best, distance(p, c.reconstruction, Norm::L2));
        }
        CHECK(distance(p, dual.reconstruction, Norm::L2) <= best + 1e-9);
      }
    }
  }
}

TEST_CASE("enumerate_types is exhaustive and ordered") {
  const auto types = enumerate_types(LatticeSpec(3, 2));
  REQUIRE(types.size() == 6);
  const std::vector<std::vector<std::int64_t>> expected = {
      {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  for (std::size_t i = 0; i < 6; ++i) CHECK(types[i].counts == expected[i]);
  CHECK(enumerate_types(LatticeSpec(5, 8)).size() == 495);
}

TEST_CASE("enumerate_holes finds the known deep holes") {
  SUBCASE("m=2 n=2: midpoints of the two segments") {
    const auto holes = enumerate_holes(LatticeSpec(2, 2));
    REQUIRE(holes.size() == 2);
    for (const auto& h : holes) {
      CHECK((std::fabs(h[0] - 0.25) < 1e-12 ||
             std::fabs(h[0] - 0.75) < 1e-12));
      CHECK(std::fabs(h[0] + h[1] - 1.0) < 1e-12);
    }
  }
  SUBCASE("m=3 n=1: the barycenter is the only in-simplex hole") {
    const auto holes = enumerate_holes(LatticeSpec(3, 1));
    REQUIRE(holes.size() == 1);
    for (int i = 0; i < 3; ++i) {
      CHECK(holes[0][i] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    }
  }
  SUBCASE("hole distances reach the covering radius") {
    const LatticeSpec spec(3, 4);
    double worst = 0.0;
    for (const auto& h : enumerate_holes(spec)) {
      const auto r = quantize(h, spec);
      worst = std::max(worst, r.distances.at(Norm::L2));
    }
    CHECK(worst ==
          doctest::Approx(covering_radius(spec, Norm::L2)).epsilon(1e-12));
  }
}

TEST_CASE("enumeration guard rejects oversized lattices") {
  CHECK_THROWS_AS(enumerate_types(LatticeSpec(20, 100)), std::length_error);
  CHECK_THROWS_AS(enumerate_holes(LatticeSpec(20, 100)), std::length_error);
}
