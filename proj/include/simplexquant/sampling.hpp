#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace simplexquant {

/// Draws per deterministic chunk. The sample stream for (seed, total) is
/// the concatenation of chunks 0, 1, ...; each chunk is generated by its
/// own generator seeded from (seed, chunk index), so any partition of the
/// chunk range across workers reproduces the same draws.
inline constexpr std::size_t kSamplerChunk = 4096;

/// Fills `out` (row-major, draws x m) with uniform (flat Dirichlet) samples
/// of the m-simplex: normalized exponentials. The exponentials come from
/// explicit 53-bit uniforms over a std::mt19937_64 stream, whose output is
/// pinned by the standard, so draws are identical across platforms. All
/// components are strictly positive.
void fill_uniform_simplex_chunk(std::uint64_t seed, std::uint64_t chunk,
                                int m, std::size_t draws, double* out);

/// Worker cap: min(hardware_concurrency, SIMPLEX_QUANT_THREADS if set),
/// at least 1.
unsigned worker_count();

/// Per-draw evaluation: reads one draw of m components and writes
/// values[0..width). Each worker thread owns the instance make_fn gave it,
/// so closures may hold mutable scratch.
using DrawFn = std::function<void(const double* draw, double* values)>;

/// Max-reduces fn outputs over `samples` uniform simplex draws, splitting
/// chunks across worker_count() threads. The result is independent of the
/// worker count because the draw stream is fixed by (seed, chunk) and max
/// is order-free.
std::vector<double> max_over_samples(std::uint64_t seed, std::int64_t samples,
                                     int m, int width,
                                     const std::function<DrawFn()>& make_fn);

}  // namespace simplexquant
