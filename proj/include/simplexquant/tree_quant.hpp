#pragma once

#include <vector>

#include "simplexquant/core.hpp"

namespace simplexquant {

/// Prefix-code length profile; Kraft holds: sum 2^-l_i <= 1. The induced
/// reconstruction masses q_i = 2^-l_i are kept unnormalized, so they may
/// sum to less than 1.
struct CodeLengths {
  std::vector<int> lengths;

  int m() const { return static_cast<int>(lengths.size()); }
  double kraft_sum() const;
  std::vector<double> induced_masses() const;
};

struct TreeQuantizeResult {
  CodeLengths lengths;
  Distribution reconstruction;  // dyadic masses, possibly subnormalized
};

enum class TreeScheme { Huffman, GilbertMoore };

/// Optimal binary prefix-code lengths for p (greedy merge; ties broken by
/// (weight, node id) with leaf ids equal to symbol indices, so the tree is
/// deterministic). Zero-probability symbols receive weight 1e-12 so every
/// symbol gets a finite length. Guarantees d_KL(p, q) <= 1,
/// d_1 <= sqrt(2 ln 2) and d_inf <= 1/2.
TreeQuantizeResult huffman_quantize(const Distribution& p);

/// Length profile l_i = ceil(-log2 p_i) + 1 of the fixed-order code.
/// Requires every p_i > 0. Guarantees Kraft, d_KL <= 2, d_1 <= 2 sqrt(ln 2)
/// and d_inf <= 1.
TreeQuantizeResult gilbert_moore_quantize(const Distribution& p);

/// Rate needed to identify a reconstruction point of the scheme, in bits.
/// GilbertMoore: log2 Catalan(m-1), exact (lo == hi). Huffman: only count
/// bounds are known, so the interval [log2(m!/2), log2(m! Catalan(m-1))]
/// is reported; use mid() for plotting.
struct RateInterval {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
};

RateInterval tree_rate(int m, TreeScheme scheme);

}  // namespace simplexquant
