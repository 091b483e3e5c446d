#pragma once

#include <cstdint>
#include <vector>

#include "simplexquant/core.hpp"

namespace simplexquant {

/// Coset offset vector v_i = (1/n) [ (m-i)/m repeated i times,
/// -i/m repeated m-i times ]. v_0 is the zero vector; components of every
/// v_i sum to 0. Translating the lattice by v_i reaches the Voronoi-cell
/// vertices (holes) of coset i. Throws std::out_of_range unless 0 <= i < m.
std::vector<double> glue_vector(int m, std::int64_t n, int i);

/// ||v_i||_r for norm r in {L1, L2, LInf}:
///   L1   2 i (m-i) / (m n)
///   L2   sqrt(i (m-i) / m) / n
///   LInf max(i, m-i) / (m n)
double glue_vector_norm(int m, std::int64_t n, int i, Norm norm);

/// Closed-form covering radius of the plain lattice, with a = floor(m/2):
///   LInf (1/n)(1 - 1/m), L2 (1/n) sqrt(a(m-a)/m), L1 (1/n) 2a(m-a)/m.
/// Valid as the exact in-simplex radius when n >= floor(m/2); below that
/// the extremal holes leave the simplex (see covering_radius_attained).
/// Throws std::invalid_argument for the KL norm (no closed form; see
/// kl_hole_lower_bound) or a biased spec.
double covering_radius(const LatticeSpec& spec, Norm norm);

/// Largest distance from an in-simplex hole to the lattice:
/// max ||v_i||_r over cosets i >= max(1, m - n), the cosets whose holes can
/// lie inside the simplex. Equals covering_radius when n >= floor(m/2).
double covering_radius_attained(const LatticeSpec& spec, Norm norm);

/// KL lower bound at the deep holes: (1/(2 ln 2)) * (L1 radius)^2.
double kl_hole_lower_bound(int m, std::int64_t n);

/// Coefficient of 2^(-R/(m-1)) in the high-rate distance expansion of the
/// type lattice: the covering-radius numerator divided by
/// ((m-1)!)^(1/(m-1)), evaluated via log-gamma. Requires m >= 3.
double asymptotic_constant(int m, Norm norm);

/// Coefficient of 2^(-R/(m-1)) for the information-theoretic LInf optimum:
/// (1/2) (sqrt(m)/(m-1)!)^(1/(m-1)). Requires m >= 3.
double optimal_bound_constant(int m);

/// (m-1)-volume of the unit simplex: sqrt(m)/(m-1)!.
double simplex_volume(int m);

}  // namespace simplexquant
