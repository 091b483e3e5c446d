#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "simplexquant/core.hpp"

namespace simplexquant {

/// Output of the nearest-type search.
struct QuantizeResult {
  TypePoint point;
  Distribution reconstruction;
  std::map<Norm, double> distances;
  // Net rounding surplus n' - n before rebalancing; |delta_applied| never
  // exceeds ceil(m/2) because each per-component error is at most 1/2.
  std::int64_t delta_applied = 0;
};

/// A point of the dual lattice: a base type translated by glue vector
/// v_coset, restricted to the simplex.
struct DualPoint {
  TypePoint base;
  int coset = 0;
  Distribution reconstruction;
};

/// Nearest lattice point to p in Q_n. Minimizes d_r(p, q) simultaneously
/// for r in {L1, L2, LInf} (ties resolved by the deterministic
/// (error, index) ordering). Expected O(m) via selection; O(m log m) worst
/// case. Requires spec.beta = 0 (see quantize_biased).
QuantizeResult quantize(const Distribution& p, const LatticeSpec& spec);

/// Nearest point of the biased lattice q_i = (k_i + beta)/(n + beta m).
/// Runs the plain search on the pulled-back target
/// p'_i = ((n + beta m) p_i - beta)/n, clamping negative counts to zero and
/// rebalancing only strictly positive components. Requires beta > 0.
QuantizeResult quantize_biased(const Distribution& p, const LatticeSpec& spec);

/// Nearest point of the dual lattice Q*_n: quantizes p - v_i per coset,
/// keeps the in-simplex candidates and returns the one closest to p under
/// select_norm (ties to the lowest coset). Coset 0 always yields a valid
/// candidate. Requires spec.beta = 0.
DualPoint quantize_dual(const Distribution& p, const LatticeSpec& spec,
                        Norm select_norm = Norm::L2);

/// All TypePoints of Q_n in lexicographic order (k_1 major, ascending).
/// Guard: |Q_n| <= 10^7, else std::length_error.
void for_each_type(const LatticeSpec& spec,
                   const std::function<void(const TypePoint&)>& fn);
std::vector<TypePoint> enumerate_types(const LatticeSpec& spec);

/// Every in-simplex hole q + v_i with q in Q_n, i in 1..m-1. Components
/// >= -1e-12 are accepted and clamped to 0. Guard: m |Q_n| <= 10^7.
void for_each_hole(const LatticeSpec& spec,
                   const std::function<void(const Distribution&)>& fn);
std::vector<Distribution> enumerate_holes(const LatticeSpec& spec);

/// Every point of Q*_n: the plain types as coset 0 plus the in-simplex
/// holes. Cosets are disjoint, so |result| == count_dual_points(m, n).
/// Same guard as for_each_hole.
std::vector<DualPoint> enumerate_dual_points(const LatticeSpec& spec);

namespace detail {

/// Reusable buffers for the allocation-free kernels below.
struct QuantizeScratch {
  std::vector<double> delta;
  std::vector<int> order;
  std::vector<double> target;
};

/// Core of Algorithm 1. Writes the nearest counts for target p (which must
/// sum to 1 but may be any real vector with that property) into k and
/// returns the pre-rebalance surplus. Deterministic tie-breaking: the
/// rounding errors are ordered by (delta_i, i) ascending; a positive
/// surplus decrements the largest entries, a deficit increments the
/// smallest.
std::int64_t nearest_counts(std::span<const double> p, std::int64_t n,
                            std::span<std::int64_t> k, QuantizeScratch& ws);

/// Variant for targets that may have negative components (biased pullback,
/// glue-translated targets): counts are clamped at zero and the rebalance
/// loop re-picks the extreme (delta, index) entry each step, decrementing
/// only positive counts. Returns the pre-rebalance surplus.
std::int64_t nearest_counts_clamped(std::span<const double> p, std::int64_t n,
                                    std::span<std::int64_t> k,
                                    QuantizeScratch& ws);

}  // namespace detail

}  // namespace simplexquant
