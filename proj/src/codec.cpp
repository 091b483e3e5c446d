#include "simplexquant/codec.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace simplexquant {

namespace {

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t value) {
  out.push_back(static_cast<std::uint8_t>(value & 0xff));
  out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((value >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((value >> 24) & 0xff));
}

std::uint32_t get_u32_le(std::span<const std::uint8_t> bytes,
                         std::size_t offset) {
  return static_cast<std::uint32_t>(bytes[offset]) |
         (static_cast<std::uint32_t>(bytes[offset + 1]) << 8) |
         (static_cast<std::uint32_t>(bytes[offset + 2]) << 16) |
         (static_cast<std::uint32_t>(bytes[offset + 3]) << 24);
}

std::size_t payload_width(int m, std::int64_t n) {
  return (static_cast<std::size_t>(code_rate(m, n)) + 7) / 8;
}

}  // namespace

std::vector<std::uint8_t> EncodedBlob::to_bytes() const {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kHeaderSize + payload.size());
  put_u32_le(out, m);
  put_u32_le(out, n);
  put_u32_le(out, beta_num);
  put_u32_le(out, beta_den);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

EncodedBlob EncodedBlob::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    throw std::runtime_error("blob truncated: shorter than the header");
  }
  for (std::size_t i = 0; i < kMagic.size(); ++i) {
    if (bytes[i] != kMagic[i]) {
      throw std::runtime_error("bad magic: not a TQ01 blob");
    }
  }
  EncodedBlob blob;
  blob.m = get_u32_le(bytes, 4);
  blob.n = get_u32_le(bytes, 8);
  blob.beta_num = get_u32_le(bytes, 12);
  blob.beta_den = get_u32_le(bytes, 16);
  if (blob.m < 2 || blob.n < 1 || blob.beta_den == 0) {
    throw std::runtime_error("blob header describes an invalid lattice");
  }
  const std::size_t width =
      payload_width(static_cast<int>(blob.m), static_cast<std::int64_t>(blob.n));
  if (bytes.size() != kHeaderSize + width) {
    throw std::runtime_error("blob payload width mismatch: expected " +
                             std::to_string(width) + " bytes, got " +
                             std::to_string(bytes.size() - kHeaderSize));
  }
  blob.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
  return blob;
}

EncodedBlob encode(const TypePoint& point, const LatticeSpec& spec) {
  if (point.m() != spec.m || point.n != spec.n) {
    throw std::invalid_argument("type point does not belong to this lattice");
  }
  if (spec.m > static_cast<std::int64_t>(
                   std::numeric_limits<std::uint32_t>::max()) ||
      spec.n > static_cast<std::int64_t>(
                   std::numeric_limits<std::uint32_t>::max())) {
    throw std::invalid_argument("lattice parameters exceed the u32 header");
  }
  EncodedBlob blob;
  blob.m = static_cast<std::uint32_t>(spec.m);
  blob.n = static_cast<std::uint32_t>(spec.n);
  blob.beta_num = spec.beta_num;
  blob.beta_den = spec.beta_den;

  const TypeIndex index = rank(point);
  const std::size_t width = payload_width(spec.m, spec.n);
  std::vector<std::uint8_t> digits;
  boost::multiprecision::export_bits(index, std::back_inserter(digits), 8);
  // export_bits emits a single zero byte for index 0 and the minimal
  // big-endian digits otherwise; left-pad to the fixed width.
  if (index == 0) digits.clear();
  blob.payload.assign(width - digits.size(), 0);
  blob.payload.insert(blob.payload.end(), digits.begin(), digits.end());
  return blob;
}

std::pair<TypePoint, LatticeSpec> decode(const EncodedBlob& blob) {
  if (blob.m < 2 || blob.n < 1 || blob.beta_den == 0) {
    throw std::runtime_error("blob header describes an invalid lattice");
  }
  const int m = static_cast<int>(blob.m);
  const std::int64_t n = static_cast<std::int64_t>(blob.n);
  const std::size_t width = payload_width(m, n);
  if (blob.payload.size() != width) {
    throw std::runtime_error("blob payload width mismatch");
  }
  TypeIndex index = 0;
  if (!blob.payload.empty()) {
    boost::multiprecision::import_bits(index, blob.payload.begin(),
                                       blob.payload.end(), 8);
  }
  if (index >= count_types(m, n)) {
    throw std::runtime_error("index out of range for the declared lattice");
  }
  LatticeSpec spec(m, n, blob.beta_num, blob.beta_den);
  TypePoint point = unrank(index, m, n);
  return {std::move(point), spec};
}

void write_blob_file(const std::filesystem::path& path,
                     const EncodedBlob& blob) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  const auto bytes = blob.to_bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

EncodedBlob read_blob_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return EncodedBlob::from_bytes(bytes);
}

}  // namespace simplexquant
