#include "simplexquant/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simplexquant {

namespace {

void check_lattice_args(int m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (n < 1) throw std::invalid_argument("need n >= 1");
}

double radius_numerator(int m, Norm norm) {
  // The 1/n-free part of the covering radius, a = floor(m/2).
  const double a = static_cast<double>(m / 2);
  const double md = static_cast<double>(m);
  switch (norm) {
    case Norm::LInf:
      return 1.0 - 1.0 / md;
    case Norm::L2:
      return std::sqrt(a * (md - a) / md);
    case Norm::L1:
      return 2.0 * a * (md - a) / md;
    case Norm::KL:
      break;
  }
  throw std::invalid_argument(
      "covering radius has no closed form under KL; use "
      "kl_hole_lower_bound");
}

}  // namespace

std::vector<double> glue_vector(int m, std::int64_t n, int i) {
  check_lattice_args(m, n);
  if (i < 0 || i >= m) {
    throw std::out_of_range("glue vector index must be in [0, m)");
  }
  std::vector<double> v(static_cast<std::size_t>(m), 0.0);
  if (i == 0) return v;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double head = (md - i) / (md * nd);
  const double tail = -static_cast<double>(i) / (md * nd);
  for (int j = 0; j < i; ++j) v[j] = head;
  for (int j = i; j < m; ++j) v[j] = tail;
  return v;
}

double glue_vector_norm(int m, std::int64_t n, int i, Norm norm) {
  check_lattice_args(m, n);
  if (i < 0 || i >= m) {
    throw std::out_of_range("glue vector index must be in [0, m)");
  }
  if (i == 0) return 0.0;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double id = static_cast<double>(i);
  switch (norm) {
    case Norm::L1:
      return 2.0 * id * (md - id) / (md * nd);
    case Norm::L2:
      return std::sqrt(id * (md - id) / md) / nd;
    case Norm::LInf:
      return std::max(id, md - id) / (md * nd);
    case Norm::KL:
      break;
  }
  throw std::invalid_argument("glue vector norm is defined for L1/L2/LInf");
}

double covering_radius(const LatticeSpec& spec, Norm norm) {
  if (spec.is_biased()) {
    throw std::invalid_argument(
        "closed-form covering radius applies to the plain lattice only");
  }
  return radius_numerator(spec.m, norm) / static_cast<double>(spec.n);
}

double covering_radius_attained(const LatticeSpec& spec, Norm norm) {
  if (spec.is_biased()) {
    throw std::invalid_argument(
        "closed-form covering radius applies to the plain lattice only");
  }
  if (norm == Norm::KL) {
    throw std::invalid_argument(
        "covering radius has no closed form under KL; use "
        "kl_hole_lower_bound");
  }
  // A coset-i hole needs m-i base counts >= 1, so only i >= m-n can stay
  // inside the simplex.
  const int lo = std::max<std::int64_t>(1, spec.m - spec.n);
  double best = 0.0;
  for (int i = lo; i < spec.m; ++i) {
    best = std::max(best, glue_vector_norm(spec.m, spec.n, i, norm));
  }
  return best;
}

double kl_hole_lower_bound(int m, std::int64_t n) {
  check_lattice_args(m, n);
  const double d1 = radius_numerator(m, Norm::L1) / static_cast<double>(n);
  return d1 * d1 / (2.0 * std::log(2.0));
}

double asymptotic_constant(int m, Norm norm) {
  if (m < 3) throw std::invalid_argument("asymptotic constant needs m >= 3");
  // ((m-1)!)^(1/(m-1)) via log-gamma; (m-1)! overflows double at m >= 172.
  const double root_fact = std::exp(std::lgamma(static_cast<double>(m)) /
                                    static_cast<double>(m - 1));
  return radius_numerator(m, norm) / root_fact;
}

double optimal_bound_constant(int m) {
  if (m < 3) throw std::invalid_argument("optimal bound constant needs m >= 3");
  const double md = static_cast<double>(m);
  return 0.5 * std::exp((0.5 * std::log(md) - std::lgamma(md)) /
                        static_cast<double>(m - 1));
}

double simplex_volume(int m) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  const double md = static_cast<double>(m);
  return std::exp(0.5 * std::log(md) - std::lgamma(md));
}

}  // namespace simplexquant
