#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "simplexquant/core.hpp"

namespace simplexquant {

using BigInt = boost::multiprecision::cpp_int;

/// Lexicographic rank of a TypePoint; always in [0, count_types(m, n)).
using TypeIndex = BigInt;

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n. Results are
/// memoized behind a shared lock, so concurrent callers are safe.
BigInt binomial(std::int64_t n, std::int64_t k);

/// |Q_n| = C(n+m-1, m-1), exact.
BigInt count_types(int m, std::int64_t n);

/// |Q*_n| = |Q_n| + sum_{i=1}^{m-1} C(n+i-1, m-1): the plain points plus
/// the in-simplex holes of each coset. Cosets are disjoint, so this is an
/// exact point count.
BigInt count_dual_points(int m, std::int64_t n);

/// Number of types lexicographically smaller than `point` (k_1 is the most
/// significant coordinate, ascending). Evaluates m-1 binomial prefix
/// differences; never materializes the enumeration.
TypeIndex rank(const TypePoint& point);

/// Inverse of rank: the unique TypePoint with the given rank. Throws
/// std::out_of_range when index >= count_types(m, n).
TypePoint unrank(const TypeIndex& index, int m, std::int64_t n);

/// Fixed-rate codeword size in bits: ceil(log2 |Q_n|), exact (bit length
/// of |Q_n| - 1, so exact powers of two are not over-counted).
int code_rate(int m, std::int64_t n);

/// Unrounded log2 |Q_n| as a double, accurate to ~1 ulp of the top 53 bits.
double code_rate_exact(int m, std::int64_t n);

/// log2 of an arbitrary positive integer, same precision contract as
/// code_rate_exact.
double log2_big(const BigInt& value);

/// Largest n with code_rate(m, n) <= budget bits, by exponential-then-
/// binary search on the monotone count. Throws std::invalid_argument when
/// even Q_1 does not fit.
std::int64_t max_n_for_rate(int m, int budget_bits);

}  // namespace simplexquant
