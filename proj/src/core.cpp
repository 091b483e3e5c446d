#include "simplexquant/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace simplexquant {

namespace {
constexpr double kSumTolerance = 1e-9;
}

const char* norm_name(Norm norm) {
  switch (norm) {
    case Norm::L1:
      return "l1";
    case Norm::L2:
      return "l2";
    case Norm::LInf:
      return "linf";
    case Norm::KL:
      return "kl";
  }
  return "?";
}

Norm parse_norm(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "l1") return Norm::L1;
  if (lower == "l2") return Norm::L2;
  if (lower == "linf") return Norm::LInf;
  if (lower == "kl") return Norm::KL;
  throw std::invalid_argument("unknown norm '" + text +
                              "' (expected l1, l2, linf or kl)");
}

Distribution::Distribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("distribution needs at least 2 components");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {  // also rejects NaN
      throw std::invalid_argument("distribution component is negative");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument(
        "distribution components sum to " + std::to_string(sum) +
        ", not 1 (use Distribution::renormalized for raw histograms)");
  }
}

Distribution::Distribution(std::vector<double> probs, UncheckedTag)
    : probs_(std::move(probs)) {}

Distribution Distribution::renormalized(std::vector<double> raw) {
  if (raw.size() < 2) {
    throw std::invalid_argument("distribution needs at least 2 components");
  }
  double sum = 0.0;
  for (double p : raw) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("histogram component is negative");
    }
    sum += p;
  }
  if (sum <= 0.0) {
    throw std::invalid_argument("histogram has zero total mass");
  }
  for (double& p : raw) p /= sum;
  return Distribution(std::move(raw), UncheckedTag{});
}

Distribution Distribution::unchecked(std::vector<double> masses) {
  if (masses.size() < 2) {
    throw std::invalid_argument("distribution needs at least 2 components");
  }
  for (double p : masses) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("mass component is negative");
    }
  }
  return Distribution(std::move(masses), UncheckedTag{});
}

TypePoint::TypePoint(std::vector<std::int64_t> counts_in, std::int64_t n_in)
    : counts(std::move(counts_in)), n(n_in) {
  if (counts.size() < 2) {
    throw std::invalid_argument("type point needs at least 2 components");
  }
  if (n < 1) {
    throw std::invalid_argument("type denominator must be positive");
  }
  std::int64_t sum = 0;
  for (std::int64_t k : counts) {
    if (k < 0) {
      throw std::invalid_argument("type count is negative");
    }
    sum += k;
  }
  if (sum != n) {
    throw std::invalid_argument("type counts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(n));
  }
}

Distribution TypePoint::as_distribution() const {
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  return Distribution::unchecked(std::move(probs));
}

LatticeSpec::LatticeSpec(int m_in, std::int64_t n_in)
    : LatticeSpec(m_in, n_in, 0, 1) {}

LatticeSpec::LatticeSpec(int m_in, std::int64_t n_in, std::uint32_t num,
                         std::uint32_t den)
    : m(m_in), n(n_in), beta_num(num), beta_den(den) {
  if (m < 2) throw std::invalid_argument("lattice needs m >= 2");
  if (n < 1) throw std::invalid_argument("lattice needs n >= 1");
  if (beta_den == 0) throw std::invalid_argument("beta denominator is zero");
}

Distribution LatticeSpec::reconstruct(const TypePoint& point) const {
  if (point.m() != m || point.n != n) {
    throw std::invalid_argument("type point does not belong to this lattice");
  }
  std::vector<double> probs(point.counts.size());
  if (!is_biased()) {
    for (std::size_t i = 0; i < probs.size(); ++i) {
      probs[i] =
          static_cast<double>(point.counts[i]) / static_cast<double>(n);
    }
  } else {
    const double b = beta();
    const double denom = static_cast<double>(n) + b * m;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      probs[i] = (static_cast<double>(point.counts[i]) + b) / denom;
    }
  }
  return Distribution::unchecked(std::move(probs));
}

double distance(std::span<const double> p, std::span<const double> q,
                Norm norm) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  switch (norm) {
    case Norm::L1: {
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) sum += std::fabs(p[i] - q[i]);
      return sum;
    }
    case Norm::L2: {
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        sum += d * d;
      }
      return std::sqrt(sum);
    }
    case Norm::LInf: {
      double mx = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        mx = std::max(mx, std::fabs(p[i] - q[i]));
      }
      return mx;
    }
    case Norm::KL: {
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
        sum += p[i] * std::log2(p[i] / q[i]);
      }
      return sum;
    }
  }
  throw std::invalid_argument("distance: unknown norm");
}

double distance(const Distribution& p, const Distribution& q, Norm norm) {
  return distance(p.span(), q.span(), norm);
}

namespace detail {

void all_distances(std::span<const double> p, std::span<const double> q,
                   double* out) {
  double d1 = 0.0, d2 = 0.0, dinf = 0.0, dkl = 0.0;
  bool kl_inf = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    const double a = std::fabs(d);
    d1 += a;
    d2 += d * d;
    dinf = std::max(dinf, a);
    if (p[i] > 0.0) {
      if (q[i] == 0.0) {
        kl_inf = true;
      } else {
        dkl += p[i] * std::log2(p[i] / q[i]);
      }
    }
  }
  out[static_cast<int>(Norm::L1)] = d1;
  out[static_cast<int>(Norm::L2)] = std::sqrt(d2);
  out[static_cast<int>(Norm::LInf)] = dinf;
  out[static_cast<int>(Norm::KL)] =
      kl_inf ? std::numeric_limits<double>::infinity() : dkl;
}

}  // namespace detail

}  // namespace simplexquant
