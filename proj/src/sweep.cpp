#include "simplexquant/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "simplexquant/enumeration.hpp"
#include "simplexquant/geometry.hpp"
#include "simplexquant/lattice.hpp"
#include "simplexquant/sampling.hpp"
#include "simplexquant/tree_quant.hpp"

namespace simplexquant {

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::TypeLattice:
      return "TYPE_LATTICE";
    case Scheme::TypeLatticeBiased:
      return "TYPE_LATTICE_BIASED";
    case Scheme::TypeLatticeDual:
      return "TYPE_LATTICE_DUAL";
    case Scheme::Huffman:
      return "HUFFMAN";
    case Scheme::GilbertMoore:
      return "GILBERT_MOORE";
  }
  return "?";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "TYPE_LATTICE") return Scheme::TypeLattice;
  if (name == "TYPE_LATTICE_BIASED") return Scheme::TypeLatticeBiased;
  if (name == "TYPE_LATTICE_DUAL") return Scheme::TypeLatticeDual;
  if (name == "HUFFMAN") return Scheme::Huffman;
  if (name == "GILBERT_MOORE") return Scheme::GilbertMoore;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

const char* method_name(SweepMethod method) {
  return method == SweepMethod::ExactHoles ? "EXACT_HOLES" : "MONTE_CARLO";
}

namespace {

constexpr int kNormCount = 4;

void fill_maxima(SweepRecord& row, const std::vector<double>& maxima) {
  row.max_d1 = maxima[static_cast<int>(Norm::L1)];
  row.max_d2 = maxima[static_cast<int>(Norm::L2)];
  row.max_dinf = maxima[static_cast<int>(Norm::LInf)];
  row.max_dkl = maxima[static_cast<int>(Norm::KL)];
}

SweepRecord base_row(const SweepConfig& config, Scheme scheme) {
  SweepRecord row;
  row.scheme = scheme;
  row.m = config.m;
  row.seed = config.seed;
  return row;
}

void append_type_lattice_rows(const SweepConfig& config,
                              std::vector<SweepRecord>& rows) {
  for (std::int64_t n = 1;; ++n) {
    const int rate = code_rate(config.m, n);
    if (static_cast<double>(rate) > config.max_rate) break;
    SweepRecord row = base_row(config, Scheme::TypeLattice);
    row.rate = row.rate_lo = row.rate_hi = static_cast<double>(rate);
    row.n = n;
    const LatticeSpec spec(config.m, n);
    row.max_d1 = covering_radius_attained(spec, Norm::L1);
    row.max_d2 = covering_radius_attained(spec, Norm::L2);
    row.max_dinf = covering_radius_attained(spec, Norm::LInf);
    // Mass next to a boundary reconstruction component makes KL diverge.
    row.max_dkl = std::numeric_limits<double>::infinity();
    row.method = SweepMethod::ExactHoles;
    row.samples = 0;
    rows.push_back(row);
  }
}

void append_biased_rows(const SweepConfig& config,
                        std::vector<SweepRecord>& rows) {
  const std::uint32_t num = config.beta_den == 0 ? 1 : config.beta_num;
  const std::uint32_t den = config.beta_den == 0
                                ? static_cast<std::uint32_t>(config.m)
                                : config.beta_den;
  for (std::int64_t n = 1;; ++n) {
    const int rate = code_rate(config.m, n);
    if (static_cast<double>(rate) > config.max_rate) break;
    SweepRecord row = base_row(config, Scheme::TypeLatticeBiased);
    row.rate = row.rate_lo = row.rate_hi = static_cast<double>(rate);
    row.n = n;
    row.method = SweepMethod::MonteCarlo;
    row.samples = config.samples;
    const LatticeSpec spec(config.m, n, num, den);
    const auto maxima = max_over_samples(
        config.seed, config.samples, config.m, kNormCount, [&spec]() {
          return [&spec, buf = std::vector<double>()](
                     const double* draw, double* values) mutable {
            buf.assign(draw, draw + spec.m);
            const auto result =
                quantize_biased(Distribution::unchecked(buf), spec);
            detail::all_distances(
                std::span<const double>(draw, static_cast<std::size_t>(spec.m)),
                result.reconstruction.span(), values);
          };
        });
    fill_maxima(row, maxima);
    rows.push_back(row);
  }
}

void append_dual_rows(const SweepConfig& config,
                      std::vector<SweepRecord>& rows) {
  for (std::int64_t n = 1;; ++n) {
    // No integer codeword contract for the dual set; report its
    // information rate, the unrounded log2 of the point count.
    const double rate = log2_big(count_dual_points(config.m, n));
    if (rate > config.max_rate) break;
    SweepRecord row = base_row(config, Scheme::TypeLatticeDual);
    row.rate = row.rate_lo = row.rate_hi = rate;
    row.n = n;
    row.method = SweepMethod::MonteCarlo;
    row.samples = config.samples;
    const LatticeSpec spec(config.m, n);
    const Norm select = config.dual_select;
    const auto maxima = max_over_samples(
        config.seed, config.samples, config.m, kNormCount, [&spec, select]() {
          return [&spec, select, buf = std::vector<double>()](
                     const double* draw, double* values) mutable {
            buf.assign(draw, draw + spec.m);
            const auto dual =
                quantize_dual(Distribution::unchecked(buf), spec, select);
            detail::all_distances(
                std::span<const double>(draw, static_cast<std::size_t>(spec.m)),
                dual.reconstruction.span(), values);
          };
        });
    fill_maxima(row, maxima);
    rows.push_back(row);
  }
}

void append_tree_row(const SweepConfig& config, Scheme scheme,
                     std::vector<SweepRecord>& rows) {
  const TreeScheme tree = scheme == Scheme::Huffman ? TreeScheme::Huffman
                                                    : TreeScheme::GilbertMoore;
  const RateInterval rate = tree_rate(config.m, tree);
  if (rate.mid() > config.max_rate) return;
  SweepRecord row = base_row(config, scheme);
  row.rate = rate.mid();
  row.rate_lo = rate.lo;
  row.rate_hi = rate.hi;
  row.n = 0;
  row.method = SweepMethod::MonteCarlo;
  row.samples = config.samples;
  const int m = config.m;
  const auto maxima = max_over_samples(
      config.seed, config.samples, m, kNormCount, [m, tree]() {
        return [m, tree, buf = std::vector<double>()](const double* draw,
                                                      double* values) mutable {
          buf.assign(draw, draw + m);
          const Distribution p = Distribution::unchecked(buf);
          const TreeQuantizeResult result = tree == TreeScheme::Huffman
                                                ? huffman_quantize(p)
                                                : gilbert_moore_quantize(p);
          detail::all_distances(
              std::span<const double>(draw, static_cast<std::size_t>(m)),
              result.reconstruction.span(), values);
        };
      });
  fill_maxima(row, maxima);
  rows.push_back(row);
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  if (config.m < 2) throw std::invalid_argument("need m >= 2");
  if (config.samples < 1) throw std::invalid_argument("need samples >= 1");
  if (config.max_rate < 1.0) {
    throw std::invalid_argument("rate cap below 1 bit admits no scheme");
  }
  std::vector<Scheme> schemes = config.schemes;
  if (schemes.empty()) {
    schemes = {Scheme::TypeLattice, Scheme::TypeLatticeBiased,
               Scheme::TypeLatticeDual, Scheme::Huffman, Scheme::GilbertMoore};
  }
  std::vector<SweepRecord> rows;
  // Fixed output order: scheme enum order, then rate ascending.
  for (Scheme scheme :
       {Scheme::TypeLattice, Scheme::TypeLatticeBiased, Scheme::TypeLatticeDual,
        Scheme::Huffman, Scheme::GilbertMoore}) {
    bool selected = false;
    for (Scheme s : schemes) selected = selected || s == scheme;
    if (!selected) continue;
    switch (scheme) {
      case Scheme::TypeLattice:
        append_type_lattice_rows(config, rows);
        break;
      case Scheme::TypeLatticeBiased:
        append_biased_rows(config, rows);
        break;
      case Scheme::TypeLatticeDual:
        append_dual_rows(config, rows);
        break;
      case Scheme::Huffman:
      case Scheme::GilbertMoore:
        append_tree_row(config, scheme, rows);
        break;
    }
  }
  return rows;
}

std::string csv_header() {
  return "scheme,m,rate,rate_lo,rate_hi,n,max_d1,max_d2,max_dinf,max_dkl,"
         "method,samples,seed";
}

namespace {

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace

std::string to_csv_row(const SweepRecord& record) {
  std::string row;
  row += scheme_name(record.scheme);
  row += ',';
  row += std::to_string(record.m);
  row += ',';
  row += format_real(record.rate);
  row += ',';
  row += format_real(record.rate_lo);
  row += ',';
  row += format_real(record.rate_hi);
  row += ',';
  row += std::to_string(record.n);
  row += ',';
  row += format_real(record.max_d1);
  row += ',';
  row += format_real(record.max_d2);
  row += ',';
  row += format_real(record.max_dinf);
  row += ',';
  row += format_real(record.max_dkl);
  row += ',';
  row += method_name(record.method);
  row += ',';
  row += std::to_string(record.samples);
  row += ',';
  row += std::to_string(record.seed);
  return row;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& record : records) {
    out << to_csv_row(record) << '\n';
  }
}

}  // namespace simplexquant
