#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplexquant {

/// Distance measure selector. L1/L2/LInf are metrics; KL is directed,
/// asymmetric, and may evaluate to +infinity.
enum class Norm { L1, L2, LInf, KL };

const char* norm_name(Norm norm);

/// Parses "l1", "l2", "linf" or "kl" (case-insensitive). Throws
/// std::invalid_argument otherwise.
Norm parse_norm(const std::string& text);

/// A point of the unit simplex: m nonnegative reals summing to 1 within
/// tolerance 1e-9, m >= 2.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  /// Scales a raw nonnegative histogram so it sums to 1. Throws if any
  /// component is negative or the total mass is zero.
  static Distribution renormalized(std::vector<double> raw);

  /// Wraps a mass vector without the sum-to-1 check. Needed for dyadic
  /// masses q_i = 2^-l_i induced by prefix codes, which may be strictly
  /// subnormalized. Component count and nonnegativity are still enforced.
  static Distribution unchecked(std::vector<double> masses);

  int m() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> span() const { return probs_; }

 private:
  struct UncheckedTag {};
  Distribution(std::vector<double> probs, UncheckedTag);

  std::vector<double> probs_;
};

/// A lattice point of Q_n: m nonnegative integer counts summing to n.
struct TypePoint {
  std::vector<std::int64_t> counts;
  std::int64_t n = 0;

  TypePoint() = default;
  TypePoint(std::vector<std::int64_t> counts, std::int64_t n);

  int m() const { return static_cast<int>(counts.size()); }

  /// The plain reconstruction k_i / n.
  Distribution as_distribution() const;

  bool operator==(const TypePoint& other) const = default;
};

/// Describes a plain (beta = 0) or biased type lattice on m symbols with
/// denominator n. The bias is kept as a rational beta_num/beta_den so that
/// serialized lattices round-trip exactly.
struct LatticeSpec {
  int m = 2;
  std::int64_t n = 1;
  std::uint32_t beta_num = 0;
  std::uint32_t beta_den = 1;

  LatticeSpec(int m, std::int64_t n);
  LatticeSpec(int m, std::int64_t n, std::uint32_t beta_num,
              std::uint32_t beta_den);

  double beta() const {
    return static_cast<double>(beta_num) / static_cast<double>(beta_den);
  }
  bool is_biased() const { return beta_num != 0; }

  /// Reconstruction map q_i = (k_i + beta) / (n + beta * m). beta = 0
  /// recovers k_i / n.
  Distribution reconstruct(const TypePoint& point) const;
};

/// d_r(p, q). KL is sum p_i log2(p_i / q_i) with 0 log(0/x) = 0 and
/// +infinity whenever p_i > 0 while q_i = 0. The span overload accepts
/// subnormalized mass vectors (code-induced dyadic masses).
double distance(std::span<const double> p, std::span<const double> q,
                Norm norm);
double distance(const Distribution& p, const Distribution& q, Norm norm);

namespace detail {

/// Evaluates L1, L2, LInf and KL in one pass. out must hold 4 doubles,
/// indexed by static_cast<int>(Norm).
void all_distances(std::span<const double> p, std::span<const double> q,
                   double* out);

}  // namespace detail

}  // namespace simplexquant
