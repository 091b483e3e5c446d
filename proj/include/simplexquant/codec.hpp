#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "simplexquant/core.hpp"
#include "simplexquant/enumeration.hpp"

namespace simplexquant {

/// Fixed-rate container for one quantized distribution. Layout:
///   bytes 0..3   magic "TQ01"
///   bytes 4..7   m        (u32, little-endian)
///   bytes 8..11  n        (u32, little-endian)
///   bytes 12..15 beta_num (u32, little-endian; 0 for a plain lattice)
///   bytes 16..19 beta_den (u32, little-endian; 1 for a plain lattice)
///   bytes 20..   payload: the lexicographic rank, big-endian, zero-padded
///                to exactly ceil(code_rate(m, n) / 8) bytes
struct EncodedBlob {
  static constexpr std::array<std::uint8_t, 4> kMagic = {'T', 'Q', '0', '1'};
  static constexpr std::size_t kHeaderSize = 20;

  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t beta_num = 0;
  std::uint32_t beta_den = 1;
  std::vector<std::uint8_t> payload;

  std::vector<std::uint8_t> to_bytes() const;

  /// Parses and validates framing (magic, header, exact payload width).
  /// Throws std::runtime_error on malformed input.
  static EncodedBlob from_bytes(std::span<const std::uint8_t> bytes);
};

/// Serializes a lattice point. Deterministic byte-for-byte. Throws
/// std::invalid_argument when the point does not belong to the spec.
EncodedBlob encode(const TypePoint& point, const LatticeSpec& spec);

/// Inverse of encode: recovers the point and the lattice it belongs to.
/// Throws std::runtime_error when the payload index is out of range or the
/// header describes an invalid lattice.
std::pair<TypePoint, LatticeSpec> decode(const EncodedBlob& blob);

void write_blob_file(const std::filesystem::path& path,
                     const EncodedBlob& blob);
EncodedBlob read_blob_file(const std::filesystem::path& path);

}  // namespace simplexquant
