#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssi {

using Bytes = std::vector<uint8_t>;
using Hash32 = std::array<uint8_t, 32>;
using PublicKey = std::array<uint8_t, 32>;
using Nonce32 = std::array<uint8_t, 32>;
using ByteSpan = std::span<const uint8_t>;

inline ByteSpan as_span(const Bytes& b) { return ByteSpan(b.data(), b.size()); }
inline ByteSpan as_span(std::string_view s) {
  return ByteSpan(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}
template <size_t N>
ByteSpan as_span(const std::array<uint8_t, N>& a) {
  return ByteSpan(a.data(), N);
}

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);  // throws Error(malformed_encoding)
Hash32 hash32_from_hex(std::string_view hex);

inline bool is_zero(ByteSpan b) {
  for (uint8_t x : b)
    if (x != 0) return false;
  return true;
}

// Big-endian serializer for the canonical wire encodings.
class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u16be(uint16_t v) {
    out_.push_back(uint8_t(v >> 8));
    out_.push_back(uint8_t(v));
  }
  void u32be(uint32_t v) {
    for (int i = 3; i >= 0; --i) out_.push_back(uint8_t(v >> (8 * i)));
  }
  void u64be(uint64_t v) {
    for (int i = 7; i >= 0; --i) out_.push_back(uint8_t(v >> (8 * i)));
  }
  void raw(ByteSpan b) { out_.insert(out_.end(), b.begin(), b.end()); }
  template <size_t N>
  void raw(const std::array<uint8_t, N>& a) {
    out_.insert(out_.end(), a.begin(), a.end());
  }
  void str(std::string_view s) { raw(as_span(s)); }
  // length-prefixed variable field
  void var32(ByteSpan b) {
    u32be(uint32_t(b.size()));
    raw(b);
  }

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }
  size_t size() const { return out_.size(); }

 private:
  Bytes out_;
};

// Bounds-checked reader; throws Error(malformed_encoding) on underflow.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  uint8_t u8();
  uint16_t u16be();
  uint32_t u32be();
  uint64_t u64be();
  ByteSpan raw(size_t n);
  template <size_t N>
  std::array<uint8_t, N> arr() {
    ByteSpan s = raw(N);
    std::array<uint8_t, N> a;
    std::memcpy(a.data(), s.data(), N);
    return a;
  }
  Bytes var32();
  std::string str(size_t n);

  size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return remaining() == 0; }
  void expect_done() const;  // throws if trailing bytes remain

 private:
  void need(size_t n) const;
  ByteSpan data_;
  size_t pos_ = 0;
};

inline uint64_t be64_decode(ByteSpan b) {
  uint64_t v = 0;
  for (size_t i = 0; i < 8; ++i) v = (v << 8) | b[i];
  return v;
}

inline std::array<uint8_t, 8> be64_encode(uint64_t v) {
  std::array<uint8_t, 8> out;
  for (int i = 7; i >= 0; --i) {
    out[7 - i] = uint8_t(v >> (8 * i));
  }
  return out;
}

}  // namespace ssi
