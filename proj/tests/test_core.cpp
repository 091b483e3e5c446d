#include <cmath>
#include <doctest.h>
#include <limits>
#include <vector>

#include "simplexquant/core.hpp"
#include "simplexquant/sampling.hpp"

using namespace simplexquant;

namespace {

Distribution dist(std::vector<double> p) { return Distribution(std::move(p)); }

std::vector<Distribution> random_distributions(int m, std::size_t count,
                                               std::uint64_t seed) {
  std::vector<Distribution> out;
  std::vector<double> buffer(kSamplerChunk * static_cast<std::size_t>(m));
  std::uint64_t chunk = 0;
  while (out.size() < count) {
    const std::size_t take =
        std::min(kSamplerChunk, count - out.size());
    fill_uniform_simplex_chunk(seed, chunk++, m, take, buffer.data());
    for (std::size_t d = 0; d < take; ++d) {
      out.emplace_back(std::vector<double>(
          buffer.begin() + static_cast<std::ptrdiff_t>(d * m),
          buffer.begin() + static_cast<std::ptrdiff_t>((d + 1) * m)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(dist({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(dist({0.6, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(dist({-0.1, 1.1}), std::invalid_argument);
  CHECK_NOTHROW(dist({0.5, 0.5}));
  CHECK_NOTHROW(dist({1.0, 0.0}));

  const Distribution renorm = Distribution::renormalized({2.0, 1.0, 1.0});
  CHECK(renorm[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(Distribution::renormalized({0.0, 0.0}),
                  std::invalid_argument);

  // Subnormalized dyadic masses are representable through the escape hatch
  // but not the validated constructor.
  CHECK_THROWS_AS(dist({0.25, 0.25}), std::invalid_argument);
  CHECK_NOTHROW(Distribution::unchecked({0.25, 0.25}));
}

TEST_CASE("distance identities and extremes") {
  const Distribution half = dist({0.5, 0.5});
  for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf, Norm::KL}) {
    CHECK(distance(half, half, norm) == 0.0);
  }
  const Distribution e1 = dist({1.0, 0.0});
  const Distribution e2 = dist({0.0, 1.0});
  CHECK(distance(e1, e2, Norm::L1) == 2.0);
  CHECK(distance(e1, e2, Norm::LInf) == 1.0);
  CHECK(distance(e1, e2, Norm::L2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::isinf(distance(e1, e2, Norm::KL)));
  // 0 log(0/q) = 0: the reverse direction is finite where p has no mass.
  CHECK(distance(e1, dist({0.5, 0.5}), Norm::KL) == doctest::Approx(1.0));
}

TEST_CASE("kl reference value") {
  const Distribution p = dist({0.9, 0.05, 0.05});
  const Distribution q = dist({0.5, 0.25, 0.25});
  // Independently evaluated with 50-digit arithmetic.
  CHECK(distance(p, q, Norm::KL) ==
        doctest::Approx(0.5310044064107188).epsilon(1e-12));
  CHECK(distance(p, q, Norm::KL) == doctest::Approx(0.5310).epsilon(1e-3));
}

TEST_CASE("distance dimension mismatch") {
  CHECK_THROWS_AS(distance(dist({0.5, 0.5}), dist({0.5, 0.25, 0.25}),
                           Norm::L1),
                  std::invalid_argument);
}

TEST_CASE("metric axioms on random triples") {
  for (int m : {2, 3, 5, 8}) {
    const auto ps = random_distributions(m, 30, 11);
    for (std::size_t i = 0; i + 2 < ps.size(); i += 3) {
      const auto &a = ps[i], &b = ps[i + 1], &c = ps[i + 2];
      for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
        const double ab = distance(a, b, norm);
        const double ba = distance(b, a, norm);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-15));
        CHECK(ab <= distance(a, c, norm) + distance(c, b, norm) + 1e-12);
        CHECK(distance(a, a, norm) == 0.0);
      }
      CHECK(distance(a, a, Norm::KL) == 0.0);
    }
  }
}

TEST_CASE("pinsker inequality over random pairs") {
  constexpr double k2ln2 = 2.0 * 0.6931471805599453;
  for (int m = 2; m <= 10; ++m) {
    const auto ps = random_distributions(m, 2300, 77 + m);
    for (std::size_t i = 0; i + 1 < ps.size(); i += 2) {
      const double dkl = distance(ps[i], ps[i + 1], Norm::KL);
      const double d1 = distance(ps[i], ps[i + 1], Norm::L1);
      CHECK(dkl >= d1 * d1 / k2ln2 - 1e-12);
    }
  }
}

TEST_CASE("norm ordering linf <= l2 <= l1") {
  const auto ps = random_distributions(6, 200, 5);
  for (std::size_t i = 0; i + 1 < ps.size(); i += 2) {
    const double d1 = distance(ps[i], ps[i + 1], Norm::L1);
    const double d2 = distance(ps[i], ps[i + 1], Norm::L2);
    const double di = distance(ps[i], ps[i + 1], Norm::LInf);
    CHECK(di <= d2 + 1e-15);
    CHECK(d2 <= d1 + 1e-15);
  }
}

TEST_CASE("all_distances agrees with distance") {
  const auto ps = random_distributions(4, 40, 3);
  for (std::size_t i = 0; i + 1 < ps.size(); i += 2) {
    double d[4];
    detail::all_distances(ps[i].span(), ps[i + 1].span(), d);
    CHECK(d[static_cast<int>(Norm::L1)] ==
          doctest::Approx(distance(ps[i], ps[i + 1], Norm::L1)).epsilon(1e-15));
    CHECK(d[static_cast<int>(Norm::L2)] ==
          doctest::Approx(distance(ps[i], ps[i + 1], Norm::L2)).epsilon(1e-15));
    CHECK(d[static_cast<int>(Norm::LInf)] ==
          doctest::Approx(distance(ps[i], ps[i + 1], Norm::LInf))
              .epsilon(1e-15));
    CHECK(d[static_cast<int>(Norm::KL)] ==
          doctest::Approx(distance(ps[i], ps[i + 1], Norm::KL)).epsilon(1e-15));
  }
}

TEST_CASE("type point and lattice spec validation") {
  CHECK_THROWS_AS(TypePoint({1, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(TypePoint({-1, 5}, 4), std::invalid_argument);
  const TypePoint t({2, 1, 1}, 4);
  CHECK(t.as_distribution()[0] == 0.5);

  CHECK_THROWS_AS(LatticeSpec(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSpec(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSpec(3, 4, 1, 0), std::invalid_argument);

  const LatticeSpec biased(3, 2, 1, 3);
  CHECK(biased.beta() == doctest::Approx(1.0 / 3));
  const Distribution recon = biased.reconstruct(TypePoint({2, 0, 0}, 2));
  CHECK(recon[0] == doctest::Approx(7.0 / 9).epsilon(1e-15));
  CHECK(recon[1] == doctest::Approx(1.0 / 9).epsilon(1e-15));
}

TEST_CASE("norm names round-trip") {
  for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf, Norm::KL}) {
    CHECK(parse_norm(norm_name(norm)) == norm);
  }
  CHECK(parse_norm("LINF") == Norm::LInf);
  CHECK_THROWS_AS(parse_norm("l3"), std::invalid_argument);
}
