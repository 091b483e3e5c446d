#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simplexquant/core.hpp"

namespace simplexquant {

enum class Scheme {
  TypeLattice,
  TypeLatticeBiased,
  TypeLatticeDual,
  Huffman,
  GilbertMoore,
};

const char* scheme_name(Scheme scheme);  // e.g. "TYPE_LATTICE"
Scheme parse_scheme(const std::string& name);

enum class SweepMethod { ExactHoles, MonteCarlo };

const char* method_name(SweepMethod method);

/// One rate-distance row of the comparison output.
struct SweepRecord {
  Scheme scheme = Scheme::TypeLattice;
  int m = 2;
  double rate = 0.0;
  double rate_lo = 0.0;  // == rate except for the Huffman count interval
  double rate_hi = 0.0;
  std::int64_t n = 0;  // 0 for tree schemes
  double max_d1 = 0.0;
  double max_d2 = 0.0;
  double max_dinf = 0.0;
  double max_dkl = 0.0;  // may be +infinity
  SweepMethod method = SweepMethod::ExactHoles;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

struct SweepConfig {
  int m = 2;
  double max_rate = 30.0;
  std::vector<Scheme> schemes;  // empty = all five
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  // Bias for the TYPE_LATTICE_BIASED rows; beta_den = 0 selects the 1/m
  // default.
  std::uint32_t beta_num = 1;
  std::uint32_t beta_den = 0;
  Norm dual_select = Norm::L2;
};

/// Builds the rate-distance table. Type-lattice rows carry exact in-simplex
/// radii (method EXACT_HOLES, max_dkl = inf since mass can sit where a
/// reconstruction has none); biased/dual/tree rows are seeded Monte Carlo
/// maxima. Rows are ordered by scheme then rate. Deterministic for a fixed
/// config, independent of the worker count.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Header: scheme,m,rate,rate_lo,rate_hi,n,max_d1,max_d2,max_dinf,max_dkl,
/// method,samples,seed. Reals use %.12g; +infinity serializes as "inf".
std::string csv_header();
std::string to_csv_row(const SweepRecord& record);
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace simplexquant
