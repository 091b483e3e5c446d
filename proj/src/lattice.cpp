#include "simplexquant/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "simplexquant/enumeration.hpp"
#include "simplexquant/geometry.hpp"

namespace simplexquant {

namespace detail {

std::int64_t nearest_counts(std::span<const double> p, std::int64_t n,
                            std::span<std::int64_t> k, QuantizeScratch& ws) {
  const std::size_t m = p.size();
  ws.delta.resize(m);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = static_cast<double>(n) * p[i];
    const std::int64_t c = static_cast<std::int64_t>(std::floor(t + 0.5));
    k[i] = c;
    ws.delta[i] = static_cast<double>(c) - t;
    sum += c;
  }
  const std::int64_t surplus = sum - n;
  if (surplus == 0) return 0;

  ws.order.resize(m);
  std::iota(ws.order.begin(), ws.order.end(), 0);
  auto cmp = [&](int a, int b) {
    if (ws.delta[a] != ws.delta[b]) return ws.delta[a] < ws.delta[b];
    return a < b;
  };
  if (surplus > 0) {
    // The `surplus` largest rounding errors are strictly positive, so the
    // decremented counts stay nonnegative.
    const auto nth = ws.order.begin() + (m - static_cast<std::size_t>(surplus));
    std::nth_element(ws.order.begin(), nth, ws.order.end(), cmp);
    for (auto it = nth; it != ws.order.end(); ++it) {
      assert(k[*it] > 0);
      --k[*it];
    }
  } else {
    const auto nth = ws.order.begin() + static_cast<std::size_t>(-surplus);
    std::nth_element(ws.order.begin(), nth, ws.order.end(), cmp);
    for (auto it = ws.order.begin(); it != nth; ++it) {
      ++k[*it];
    }
  }
  return surplus;
}

std::int64_t nearest_counts_clamped(std::span<const double> p, std::int64_t n,
                                    std::span<std::int64_t> k,
                                    QuantizeScratch& ws) {
  const std::size_t m = p.size();
  ws.delta.resize(m);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = static_cast<double>(n) * p[i];
    std::int64_t c = static_cast<std::int64_t>(std::floor(t + 0.5));
    if (c < 0) c = 0;
    k[i] = c;
    ws.delta[i] = static_cast<double>(c) - t;
    sum += c;
  }
  const std::int64_t surplus = sum - n;

  // Clamping can leave any imbalance, so re-pick the extreme (delta, index)
  // entry after every unit adjustment instead of batching.
  std::int64_t current = sum;
  while (current > n) {
    int best = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if (k[i] == 0) continue;
      if (best < 0 || ws.delta[i] > ws.delta[best] ||
          (ws.delta[i] == ws.delta[best] && static_cast<int>(i) > best)) {
        best = static_cast<int>(i);
      }
    }
    assert(best >= 0);
    --k[best];
    ws.delta[best] -= 1.0;
    --current;
  }
  while (current < n) {
    int best = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (ws.delta[i] < ws.delta[best]) best = static_cast<int>(i);
    }
    ++k[best];
    ws.delta[best] += 1.0;
    ++current;
  }
  return surplus;
}

}  // namespace detail

namespace {

std::map<Norm, double> distance_map(std::span<const double> p,
                                    std::span<const double> q) {
  double d[4];
  detail::all_distances(p, q, d);
  return {{Norm::L1, d[static_cast<int>(Norm::L1)]},
          {Norm::L2, d[static_cast<int>(Norm::L2)]},
          {Norm::LInf, d[static_cast<int>(Norm::LInf)]},
          {Norm::KL, d[static_cast<int>(Norm::KL)]}};
}

void check_input(const Distribution& p, const LatticeSpec& spec) {
  if (p.m() != spec.m) {
    throw std::invalid_argument("distribution and lattice dimension mismatch");
  }
}

constexpr std::int64_t kEnumerationGuard = 10'000'000;

void check_enumeration_guard(const LatticeSpec& spec, bool per_coset) {
  BigInt size = count_types(spec.m, spec.n);
  if (per_coset) size *= spec.m;
  if (size > kEnumerationGuard) {
    throw std::length_error("enumeration would exceed the 10^7 point guard");
  }
}

}  // namespace

QuantizeResult quantize(const Distribution& p, const LatticeSpec& spec) {
  check_input(p, spec);
  if (spec.is_biased()) {
    throw std::invalid_argument("lattice is biased; use quantize_biased");
  }
  std::vector<std::int64_t> k(p.probs().size());
  detail::QuantizeScratch ws;
  const std::int64_t surplus = detail::nearest_counts(p.span(), spec.n, k, ws);
  TypePoint point(std::move(k), spec.n);
  Distribution recon = spec.reconstruct(point);
  auto distances = distance_map(p.span(), recon.span());
  return QuantizeResult{std::move(point), std::move(recon),
                        std::move(distances), surplus};
}

QuantizeResult quantize_biased(const Distribution& p,
                               const LatticeSpec& spec) {
  check_input(p, spec);
  if (!spec.is_biased()) {
    throw std::invalid_argument("lattice is not biased; use quantize");
  }
  const double b = spec.beta();
  const double scale = static_cast<double>(spec.n) + b * spec.m;
  detail::QuantizeScratch ws;
  ws.target.resize(p.probs().size());
  for (std::size_t i = 0; i < ws.target.size(); ++i) {
    ws.target[i] = (scale * p[i] - b) / static_cast<double>(spec.n);
  }
  std::vector<std::int64_t> k(ws.target.size());
  const std::int64_t surplus =
      detail::nearest_counts_clamped(ws.target, spec.n, k, ws);
  TypePoint point(std::move(k), spec.n);
  Distribution recon = spec.reconstruct(point);
  auto distances = distance_map(p.span(), recon.span());
  return QuantizeResult{std::move(point), std::move(recon),
                        std::move(distances), surplus};
}

DualPoint quantize_dual(const Distribution& p, const LatticeSpec& spec,
                        Norm select_norm) {
  check_input(p, spec);
  if (spec.is_biased()) {
    throw std::invalid_argument("dual lattice is defined for beta = 0");
  }
  const int m = spec.m;
  detail::QuantizeScratch ws;
  ws.target.resize(static_cast<std::size_t>(m));
  std::vector<std::int64_t> k(static_cast<std::size_t>(m));
  std::vector<double> candidate(static_cast<std::size_t>(m));

  std::vector<std::int64_t> best_k;
  std::vector<double> best_recon;
  int best_coset = -1;
  double best_dist = 0.0;

  for (int i = 0; i < m; ++i) {
    const std::vector<double> v = glue_vector(m, spec.n, i);
    for (int j = 0; j < m; ++j) ws.target[j] = p[j] - v[j];
    detail::nearest_counts_clamped(ws.target, spec.n, k, ws);
    bool valid = true;
    for (int j = 0; j < m; ++j) {
      const double c =
          static_cast<double>(k[j]) / static_cast<double>(spec.n) + v[j];
      if (c < -1e-12) {
        valid = false;
        break;
      }
      candidate[j] = std::max(c, 0.0);
    }
    if (!valid) continue;
    const double dist = distance(p.span(), candidate, select_norm);
    if (best_coset < 0 || dist < best_dist) {
      best_coset = i;
      best_dist = dist;
      best_k = k;
      best_recon = candidate;
    }
  }
  // Coset 0 quantizes p itself, so a candidate always exists.
  assert(best_coset >= 0);
  return DualPoint{TypePoint(std::move(best_k), spec.n), best_coset,
                   Distribution(std::move(best_recon))};
}

void for_each_type(const LatticeSpec& spec,
                   const std::function<void(const TypePoint&)>& fn) {
  check_enumeration_guard(spec, false);
  const int m = spec.m;
  // Start from the lexicographically smallest point (0, ..., 0, n).
  std::vector<std::int64_t> init(static_cast<std::size_t>(m), 0);
  init.back() = spec.n;
  TypePoint tp(std::move(init), spec.n);
  for (;;) {
    fn(tp);
    // Successor: bump the rightmost position that still has mass to its
    // right, then push the remainder as far right as possible.
    std::int64_t tail = 0;
    int j = m - 2;
    for (; j >= 0; --j) {
      tail += tp.counts[j + 1];
      if (tail > 0) break;
    }
    if (j < 0) break;  // (n, 0, ..., 0) is the last point
    ++tp.counts[j];
    for (int t = j + 1; t < m; ++t) tp.counts[t] = 0;
    tp.counts[m - 1] = tail - 1;
  }
}

std::vector<TypePoint> enumerate_types(const LatticeSpec& spec) {
  std::vector<TypePoint> out;
  for_each_type(spec, [&](const TypePoint& tp) { out.push_back(tp); });
  return out;
}

void for_each_hole(const LatticeSpec& spec,
                   const std::function<void(const Distribution&)>& fn) {
  check_enumeration_guard(spec, true);
  const int m = spec.m;
  std::vector<std::vector<double>> glue(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) glue[i] = glue_vector(m, spec.n, i);
  std::vector<double> hole(static_cast<std::size_t>(m));
  for_each_type(spec, [&](const TypePoint& tp) {
    for (int i = 1; i < m; ++i) {
      // Hole component j >= i is (k_j - i/m)/n, which clears the -1e-12
      // floor exactly when k_j >= 1; head components are always positive.
      bool valid = true;
      for (int j = i; j < m; ++j) {
        if (tp.counts[j] < 1) {
          valid = false;
          break;
        }
      }
      if (!valid) continue;
      const auto& v = glue[i];
      for (int j = 0; j < m; ++j) {
        hole[j] = static_cast<double>(tp.counts[j]) /
                      static_cast<double>(spec.n) +
                  v[j];
      }
      fn(Distribution(hole));
    }
  });
}

std::vector<Distribution> enumerate_holes(const LatticeSpec& spec) {
  std::vector<Distribution> out;
  for_each_hole(spec, [&](const Distribution& h) { out.push_back(h); });
  return out;
}

std::vector<DualPoint> enumerate_dual_points(const LatticeSpec& spec) {
  check_enumeration_guard(spec, true);
  const int m = spec.m;
  std::vector<std::vector<double>> glue(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) glue[i] = glue_vector(m, spec.n, i);
  std::vector<DualPoint> out;
  std::vector<double> recon(static_cast<std::size_t>(m));
  for_each_type(spec, [&](const TypePoint& tp) {
    out.push_back(DualPoint{tp, 0, tp.as_distribution()});
    for (int i = 1; i < m; ++i) {
      bool valid = true;
      for (int j = i; j < m; ++j) {
        if (tp.counts[j] < 1) {
          valid = false;
          break;
        }
      }
      if (!valid) continue;
      const auto& v = glue[i];
      for (int j = 0; j < m; ++j) {
        recon[j] = static_cast<double>(tp.counts[j]) /
                       static_cast<double>(spec.n) +
                   v[j];
      }
      out.push_back(DualPoint{tp, i, Distribution(recon)});
    }
  });
  return out;
}

}  // namespace simplexquant
