#include "simplexquant/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace simplexquant {

namespace {

// Top 53 bits offset by half a ulp: u in [2^-54, 1 - 2^-54], never 0 or 1,
// so -ln u is finite and positive.
double uniform_open01(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

void fill_uniform_simplex_chunk(std::uint64_t seed, std::uint64_t chunk,
                                int m, std::size_t draws, double* out) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (draws > kSamplerChunk) {
    throw std::invalid_argument("chunk holds at most kSamplerChunk draws");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk & 0xffffffffu),
                    static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 gen(seq);
  for (std::size_t d = 0; d < draws; ++d) {
    double* row = out + d * static_cast<std::size_t>(m);
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      row[i] = -std::log(uniform_open01(gen));
      sum += row[i];
    }
    for (int i = 0; i < m; ++i) row[i] /= sum;
  }
}

unsigned worker_count() {
  unsigned count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SIMPLEX_QUANT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) {
      count = std::min<long>(count, parsed);
    }
  }
  return count;
}

std::vector<double> max_over_samples(std::uint64_t seed, std::int64_t samples,
                                     int m, int width,
                                     const std::function<DrawFn()>& make_fn) {
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  if (width < 1) throw std::invalid_argument("need width >= 1");
  const std::uint64_t chunks =
      (static_cast<std::uint64_t>(samples) + kSamplerChunk - 1) / kSamplerChunk;
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count(), chunks));

  std::vector<double> result(static_cast<std::size_t>(width), 0.0);
  std::mutex result_mutex;
  std::atomic<std::uint64_t> next_chunk{0};

  auto run = [&]() {
    DrawFn fn = make_fn();
    std::vector<double> buffer(kSamplerChunk * static_cast<std::size_t>(m));
    std::vector<double> values(static_cast<std::size_t>(width));
    std::vector<double> local(static_cast<std::size_t>(width), 0.0);
    for (;;) {
      const std::uint64_t chunk =
          next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (chunk >= chunks) break;
      const std::size_t draws = static_cast<std::size_t>(
          std::min<std::uint64_t>(kSamplerChunk,
                                  static_cast<std::uint64_t>(samples) -
                                      chunk * kSamplerChunk));
      fill_uniform_simplex_chunk(seed, chunk, m, draws, buffer.data());
      for (std::size_t d = 0; d < draws; ++d) {
        fn(buffer.data() + d * static_cast<std::size_t>(m), values.data());
        for (int v = 0; v < width; ++v) {
          local[static_cast<std::size_t>(v)] =
              std::max(local[static_cast<std::size_t>(v)],
                       values[static_cast<std::size_t>(v)]);
        }
      }
    }
    std::lock_guard<std::mutex> lock(result_mutex);
    for (int v = 0; v < width; ++v) {
      result[static_cast<std::size_t>(v)] =
          std::max(result[static_cast<std::size_t>(v)],
                   local[static_cast<std::size_t>(v)]);
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  return result;
}

}  // namespace simplexquant
