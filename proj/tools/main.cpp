#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplexquant/codec.hpp"
#include "simplexquant/core.hpp"
#include "simplexquant/enumeration.hpp"
#include "simplexquant/geometry.hpp"
#include "simplexquant/io.hpp"
#include "simplexquant/lattice.hpp"
#include "simplexquant/sweep.hpp"
#include "simplexquant/tree_quant.hpp"

namespace sq = simplexquant;

namespace {

nlohmann::json json_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

nlohmann::json json_distances(const sq::Distribution& p,
                              const sq::Distribution& q) {
  double d[4];
  sq::detail::all_distances(p.span(), q.span(), d);
  return {{"l1", json_real(d[static_cast<int>(sq::Norm::L1)])},
          {"l2", json_real(d[static_cast<int>(sq::Norm::L2)])},
          {"linf", json_real(d[static_cast<int>(sq::Norm::LInf)])},
          {"kl", json_real(d[static_cast<int>(sq::Norm::KL)])}};
}

nlohmann::json json_probs(const sq::Distribution& dist) {
  return nlohmann::json(dist.probs());
}

nlohmann::json json_counts(const sq::TypePoint& point) {
  return nlohmann::json(point.counts);
}

std::pair<std::uint32_t, std::uint32_t> parse_beta(const std::string& text) {
  const auto parse_u32 = [](const std::string& part) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid --beta component '" + part + "'");
    }
    if (used != part.size() || value > 0xffffffffUL) {
      throw std::invalid_argument("invalid --beta component '" + part + "'");
    }
    return static_cast<std::uint32_t>(value);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return {parse_u32(text), 1};
  }
  const std::uint32_t num = parse_u32(text.substr(0, slash));
  const std::uint32_t den = parse_u32(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("--beta denominator is zero");
  return {num, den};
}

void emit(const nlohmann::json& report) {
  std::cout << report.dump() << "\n";
}

struct QuantizeOptions {
  std::string input = "-";
  int m = 0;
  std::int64_t n = 0;
  int rate = 0;
  std::string beta = "0";
  bool dual = false;
  std::string norm = "l2";
  bool renormalize = false;
  std::string out;
};

void run_quantize(const QuantizeOptions& opt) {
  if ((opt.n == 0) == (opt.rate == 0)) {
    throw std::invalid_argument("give exactly one of --n and --rate");
  }
  const sq::Distribution p =
      sq::read_distribution_file(opt.input, opt.renormalize);
  const int m = p.m();
  if (opt.m != 0 && opt.m != m) {
    throw std::invalid_argument("--m disagrees with the input dimension " +
                                std::to_string(m));
  }
  const auto [beta_num, beta_den] = parse_beta(opt.beta);
  const std::int64_t n =
      opt.n != 0 ? opt.n : sq::max_n_for_rate(m, opt.rate);

  nlohmann::json report;
  report["command"] = "quantize";
  report["m"] = m;
  report["n"] = n;

  if (opt.dual) {
    if (beta_num != 0) {
      throw std::invalid_argument("--dual does not combine with --beta");
    }
    if (!opt.out.empty()) {
      throw std::invalid_argument(
          "dual points have no index space; --out is unsupported with "
          "--dual");
    }
    const sq::LatticeSpec spec(m, n);
    const sq::DualPoint dual =
        sq::quantize_dual(p, spec, sq::parse_norm(opt.norm));
    report["mode"] = "dual";
    report["rate"] = sq::log2_big(sq::count_dual_points(m, n));
    report["coset"] = dual.coset;
    report["point"] = json_counts(dual.base);
    report["reconstruction"] = json_probs(dual.reconstruction);
    report["distances"] = json_distances(p, dual.reconstruction);
    report["select_norm"] = opt.norm;
    emit(report);
    return;
  }

  const sq::LatticeSpec spec(m, n, beta_num, beta_den);
  const sq::QuantizeResult result =
      spec.is_biased() ? sq::quantize_biased(p, spec) : sq::quantize(p, spec);
  report["mode"] = spec.is_biased() ? "biased" : "plain";
  report["beta"] = std::to_string(beta_num) + "/" + std::to_string(beta_den);
  report["rate"] = sq::code_rate(m, n);
  report["index"] = sq::rank(result.point).str();
  report["point"] = json_counts(result.point);
  report["reconstruction"] = json_probs(result.reconstruction);
  report["distances"] = json_distances(p, result.reconstruction);
  report["delta"] = result.delta_applied;
  if (!opt.out.empty()) {
    sq::write_blob_file(opt.out, sq::encode(result.point, spec));
    report["out"] = opt.out;
  }
  emit(report);
}

struct DecodeOptions {
  std::string input;
  std::string out;
};

void run_decode(const DecodeOptions& opt) {
  const sq::EncodedBlob blob = sq::read_blob_file(opt.input);
  const auto [point, spec] = sq::decode(blob);
  const sq::Distribution recon = spec.reconstruct(point);
  nlohmann::json report;
  report["command"] = "decode";
  report["m"] = spec.m;
  report["n"] = spec.n;
  report["beta"] =
      std::to_string(spec.beta_num) + "/" + std::to_string(spec.beta_den);
  report["index"] = sq::rank(point).str();
  report["point"] = json_counts(point);
  report["reconstruction"] = json_probs(recon);
  if (!opt.out.empty()) {
    std::ofstream out(opt.out, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + opt.out + " for writing");
    }
    out << sq::format_distribution(recon) << "\n";
    report["out"] = opt.out;
  }
  emit(report);
}

std::vector<std::int64_t> parse_counts(const std::string& text) {
  std::vector<std::int64_t> counts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    try {
      std::size_t used = 0;
      counts.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid count '" + part + "'");
    }
  }
  return counts;
}

struct RankOptions {
  int m = 0;
  std::int64_t n = 0;
  std::string point;
};

void run_rank(const RankOptions& opt) {
  std::vector<std::int64_t> counts = parse_counts(opt.point);
  if (opt.m != 0 && static_cast<int>(counts.size()) != opt.m) {
    throw std::invalid_argument("--m disagrees with the point dimension");
  }
  const sq::TypePoint point(std::move(counts), opt.n);
  nlohmann::json report;
  report["command"] = "rank";
  report["m"] = point.m();
  report["n"] = point.n;
  report["index"] = sq::rank(point).str();
  report["rate"] = sq::code_rate(point.m(), point.n);
  emit(report);
}

struct UnrankOptions {
  int m = 0;
  std::int64_t n = 0;
  std::string index;
};

void run_unrank(const UnrankOptions& opt) {
  sq::TypeIndex index;
  try {
    index = sq::TypeIndex(opt.index);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid --index '" + opt.index + "'");
  }
  const sq::TypePoint point = sq::unrank(index, opt.m, opt.n);
  nlohmann::json report;
  report["command"] = "unrank";
  report["m"] = opt.m;
  report["n"] = opt.n;
  report["point"] = json_counts(point);
  emit(report);
}

struct AnalyzeOptions {
  int m = 0;
  std::int64_t n = 0;
};

void run_analyze(const AnalyzeOptions& opt) {
  const sq::LatticeSpec spec(opt.m, opt.n);
  const sq::BigInt count = sq::count_types(opt.m, opt.n);
  const double exact_rate = sq::code_rate_exact(opt.m, opt.n);
  std::printf("lattice m=%d n=%lld: points=%s rate=%d bits (log2=%.6f)\n",
              opt.m, static_cast<long long>(opt.n), count.str().c_str(),
              sq::code_rate(opt.m, opt.n), exact_rate);

  const bool enumerable =
      count * opt.m <= sq::BigInt(10'000'000);
  double empirical[3] = {0.0, 0.0, 0.0};
  if (enumerable) {
    sq::for_each_hole(spec, [&](const sq::Distribution& hole) {
      const sq::QuantizeResult q = sq::quantize(hole, spec);
      empirical[0] = std::max(empirical[0], q.distances.at(sq::Norm::L1));
      empirical[1] = std::max(empirical[1], q.distances.at(sq::Norm::L2));
      empirical[2] = std::max(empirical[2], q.distances.at(sq::Norm::LInf));
    });
  }

  std::printf("%-5s %14s %14s %14s %12s %12s\n", "norm", "closed_radius",
              "attained", "empirical", "normalized", "asymptotic");
  const sq::Norm norms[3] = {sq::Norm::L1, sq::Norm::L2, sq::Norm::LInf};
  for (int i = 0; i < 3; ++i) {
    const double closed = sq::covering_radius(spec, norms[i]);
    const double attained = sq::covering_radius_attained(spec, norms[i]);
    // Distance scaling at this rate: radius * 2^(R'/(m-1)) converges to
    // the asymptotic constant as n grows.
    const double normalized =
        attained * std::exp2(exact_rate / static_cast<double>(opt.m - 1));
    const double asymptotic =
        opt.m >= 3 ? sq::asymptotic_constant(opt.m, norms[i]) : 0.0;
    if (enumerable) {
      std::printf("%-5s %14.9f %14.9f %14.9f %12.6f %12.6f\n",
                  sq::norm_name(norms[i]), closed, attained, empirical[i],
                  normalized, asymptotic);
    } else {
      std::printf("%-5s %14.9f %14.9f %14s %12.6f %12.6f\n",
                  sq::norm_name(norms[i]), closed, attained, "n/a", normalized,
                  asymptotic);
    }
  }
  std::printf("kl hole lower bound: %.9f\n",
              sq::kl_hole_lower_bound(opt.m, opt.n));
  if (opt.m >= 3) {
    const double algo = sq::asymptotic_constant(opt.m, sq::Norm::LInf);
    const double optimum = sq::optimal_bound_constant(opt.m);
    std::printf(
        "linf constants: algorithm %.6f, optimum %.6f, ratio %.6f\n", algo,
        optimum, algo / optimum);
  }
}

struct SweepOptions {
  int m = 0;
  double max_rate = 30.0;
  std::string schemes =
      "TYPE_LATTICE,TYPE_LATTICE_BIASED,TYPE_LATTICE_DUAL,HUFFMAN,"
      "GILBERT_MOORE";
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string beta = "1/m";
  std::string norm = "l2";
  std::string out = "-";
};

void run_sweep_cmd(const SweepOptions& opt, bool compare) {
  sq::SweepConfig config;
  config.m = opt.m;
  config.max_rate = opt.max_rate;
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.dual_select = sq::parse_norm(opt.norm);
  if (opt.beta == "1/m") {
    config.beta_num = 1;
    config.beta_den = 0;  // resolved to 1/m inside the sweep
  } else {
    const auto [num, den] = parse_beta(opt.beta);
    if (num == 0) {
      throw std::invalid_argument(
          "biased sweep rows need --beta > 0 (or drop the scheme)");
    }
    config.beta_num = num;
    config.beta_den = den;
  }
  if (compare) {
    config.schemes = {sq::Scheme::TypeLattice, sq::Scheme::Huffman,
                      sq::Scheme::GilbertMoore};
  } else {
    std::stringstream stream(opt.schemes);
    std::string part;
    while (std::getline(stream, part, ',')) {
      if (!part.empty()) config.schemes.push_back(sq::parse_scheme(part));
    }
    if (config.schemes.empty()) {
      throw std::invalid_argument("no schemes selected");
    }
  }
  const std::vector<sq::SweepRecord> rows = sq::run_sweep(config);
  if (opt.out == "-") {
    sq::write_csv(std::cout, rows);
  } else {
    std::ofstream out(opt.out, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + opt.out + " for writing");
    }
    sq::write_csv(out, rows);
    if (!out) {
      throw std::runtime_error("write failed for " + opt.out);
    }
  }
}

void add_sweep_flags(CLI::App* cmd, SweepOptions& opt, bool compare) {
  cmd->add_option("--m", opt.m, "alphabet size")->required();
  cmd->add_option("--max-rate", opt.max_rate, "rate cap in bits");
  if (!compare) {
    cmd->add_option("--schemes", opt.schemes, "comma-separated scheme list");
    cmd->add_option("--beta", opt.beta,
                    "bias for TYPE_LATTICE_BIASED rows (A/B or '1/m')");
  }
  cmd->add_option("--samples", opt.samples, "Monte Carlo draws per row");
  cmd->add_option("--seed", opt.seed, "sampler seed");
  cmd->add_option("--norm", opt.norm, "dual candidate-selection norm");
  cmd->add_option("--out", opt.out, "output CSV path ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simplex-quant: fixed-rate quantization of discrete probability "
      "distributions on the type lattice"};
  app.require_subcommand(1);

  QuantizeOptions quantize_opt;
  CLI::App* quantize_cmd =
      app.add_subcommand("quantize", "quantize a distribution");
  quantize_cmd->add_option("--in", quantize_opt.input,
                           "input distribution ('-' for stdin)");
  quantize_cmd->add_option("--m", quantize_opt.m,
                           "expected alphabet size (checked)");
  quantize_cmd->add_option("--n", quantize_opt.n, "lattice denominator");
  quantize_cmd->add_option("--rate", quantize_opt.rate,
                           "rate budget in bits (picks the largest n)");
  quantize_cmd->add_option("--beta", quantize_opt.beta,
                           "lattice bias as A or A/B (default 0)");
  quantize_cmd->add_flag("--dual", quantize_opt.dual,
                         "quantize on the dual lattice");
  quantize_cmd->add_option("--norm", quantize_opt.norm,
                           "dual candidate-selection norm");
  quantize_cmd->add_flag("--renormalize", quantize_opt.renormalize,
                         "treat input as a raw histogram");
  quantize_cmd->add_option("--out", quantize_opt.out, "write a .tqnt blob");

  DecodeOptions decode_opt;
  CLI::App* decode_cmd = app.add_subcommand("decode", "decode a .tqnt blob");
  decode_cmd->add_option("--in", decode_opt.input, "blob path")->required();
  decode_cmd->add_option("--out", decode_opt.out,
                         "write the reconstruction as text");

  RankOptions rank_opt;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "lexicographic index of a type point");
  rank_cmd->add_option("--m", rank_opt.m, "alphabet size (checked)");
  rank_cmd->add_option("--n", rank_opt.n, "denominator")->required();
  rank_cmd->add_option("--point", rank_opt.point, "comma-separated counts")
      ->required();

  UnrankOptions unrank_opt;
  CLI::App* unrank_cmd =
      app.add_subcommand("unrank", "type point with a given index");
  unrank_cmd->add_option("--m", unrank_opt.m, "alphabet size")->required();
  unrank_cmd->add_option("--n", unrank_opt.n, "denominator")->required();
  unrank_cmd->add_option("--index", unrank_opt.index, "decimal index")
      ->required();

  AnalyzeOptions analyze_opt;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "radii and constants of a lattice");
  analyze_cmd->add_option("--m", analyze_opt.m, "alphabet size")->required();
  analyze_cmd->add_option("--n", analyze_opt.n, "denominator")->required();

  SweepOptions sweep_opt;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "rate-distance table as CSV");
  add_sweep_flags(sweep_cmd, sweep_opt, false);

  SweepOptions compare_opt;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "sweep the type lattice against both tree schemes");
  add_sweep_flags(compare_cmd, compare_opt, true);

  try {
    app.parse(argc, argv);
    if (quantize_cmd->parsed()) run_quantize(quantize_opt);
    if (decode_cmd->parsed()) run_decode(decode_opt);
    if (rank_cmd->parsed()) run_rank(rank_opt);
    if (unrank_cmd->parsed()) run_unrank(unrank_opt);
    if (analyze_cmd->parsed()) run_analyze(analyze_opt);
    if (sweep_cmd->parsed()) run_sweep_cmd(sweep_opt, false);
    if (compare_cmd->parsed()) run_sweep_cmd(compare_opt, true);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const std::out_of_range& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const std::length_error& err) {
    std::cerr << "data error: " << err.what() << "\n";
    return 3;
  } catch (const std::runtime_error& err) {
    std::cerr << "data error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
