#include "simplexquant/tree_quant.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <utility>

#include "simplexquant/enumeration.hpp"

namespace simplexquant {

double CodeLengths::kraft_sum() const {
  double sum = 0.0;
  for (int l : lengths) sum += std::ldexp(1.0, -l);
  return sum;
}

std::vector<double> CodeLengths::induced_masses() const {
  std::vector<double> q(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    q[i] = std::ldexp(1.0, -lengths[i]);
  }
  return q;
}

namespace {

TreeQuantizeResult make_result(CodeLengths lengths) {
  std::vector<double> q = lengths.induced_masses();
  return TreeQuantizeResult{std::move(lengths),
                            Distribution::unchecked(std::move(q))};
}

}  // namespace

TreeQuantizeResult huffman_quantize(const Distribution& p) {
  const int m = p.m();
  // Degenerate inputs: zero-probability symbols still need a codeword.
  constexpr double kZeroWeight = 1e-12;

  // Min-heap ordered by (weight, node id); leaf ids are the symbol indices
  // and internal ids continue upward, which pins the merge order.
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  std::vector<int> parent(static_cast<std::size_t>(2 * m - 1), -1);
  for (int i = 0; i < m; ++i) {
    heap.emplace(p[i] > 0.0 ? p[i] : kZeroWeight, i);
  }
  int next_id = m;
  while (heap.size() > 1) {
    const Entry a = heap.top();
    heap.pop();
    const Entry b = heap.top();
    heap.pop();
    parent[static_cast<std::size_t>(a.second)] = next_id;
    parent[static_cast<std::size_t>(b.second)] = next_id;
    heap.emplace(a.first + b.first, next_id);
    ++next_id;
  }

  CodeLengths lengths;
  lengths.lengths.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int depth = 0;
    for (int node = i; parent[static_cast<std::size_t>(node)] >= 0;
         node = parent[static_cast<std::size_t>(node)]) {
      ++depth;
    }
    lengths.lengths[static_cast<std::size_t>(i)] = depth;
  }
  return make_result(std::move(lengths));
}

TreeQuantizeResult gilbert_moore_quantize(const Distribution& p) {
  const int m = p.m();
  CodeLengths lengths;
  lengths.lengths.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (p[i] <= 0.0) {
      throw std::invalid_argument(
          "Gilbert-Moore lengths need strictly positive probabilities");
    }
    // p = f * 2^e with f in [0.5, 1), so ceil(-log2 p) = 1 - e in every
    // case (including exact powers of two, where f = 0.5), hence
    // l = 2 - e with no transcendental calls.
    int e = 0;
    (void)std::frexp(p[i], &e);
    lengths.lengths[static_cast<std::size_t>(i)] = 2 - e;
  }
  return make_result(std::move(lengths));
}

RateInterval tree_rate(int m, TreeScheme scheme) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  const BigInt catalan =
      binomial(2 * (m - 1), m - 1) / (static_cast<std::int64_t>(m));
  if (scheme == TreeScheme::GilbertMoore) {
    const double bits = log2_big(catalan);
    return RateInterval{bits, bits};
  }
  BigInt factorial = 1;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const double lo = log2_big(factorial / 2);
  const double hi = log2_big(factorial * catalan);
  return RateInterval{lo, hi};
}

}  // namespace simplexquant
