#include "ssi/bytes.hpp"

#include "ssi/errors.hpp"

namespace ssi {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::string to_hex(ByteSpan data) {
  std::string s;
  s.reserve(data.size() * 2);
  for (uint8_t b : data) {
    s.push_back(kHexDigits[b >> 4]);
    s.push_back(kHexDigits[b & 0x0f]);
  }
  return s;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0)
    throw Error(Errc::malformed_encoding, "odd-length hex string");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0)
      throw Error(Errc::malformed_encoding, "invalid hex digit");
    out.push_back(uint8_t((hi << 4) | lo));
  }
  return out;
}

Hash32 hash32_from_hex(std::string_view hex) {
  Bytes b = from_hex(hex);
  if (b.size() != 32)
    throw Error(Errc::malformed_encoding, "expected 32-byte hex value");
  Hash32 h;
  std::memcpy(h.data(), b.data(), 32);
  return h;
}

void ByteReader::need(size_t n) const {
  if (remaining() < n)
    throw Error(Errc::malformed_encoding, "truncated input");
}

uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

uint16_t ByteReader::u16be() {
  need(2);
  uint16_t v = uint16_t(data_[pos_] << 8 | data_[pos_ + 1]);
  pos_ += 2;
  return v;
}

uint32_t ByteReader::u32be() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
  pos_ += 4;
  return v;
}

uint64_t ByteReader::u64be() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
  pos_ += 8;
  return v;
}

ByteSpan ByteReader::raw(size_t n) {
  need(n);
  ByteSpan s = data_.subspan(pos_, n);
  pos_ += n;
  return s;
}

Bytes ByteReader::var32() {
  uint32_t n = u32be();
  ByteSpan s = raw(n);
  return Bytes(s.begin(), s.end());
}

std::string ByteReader::str(size_t n) {
  ByteSpan s = raw(n);
  return std::string(reinterpret_cast<const char*>(s.data()), s.size());
}

void ByteReader::expect_done() const {
  if (!done())
    throw Error(Errc::malformed_encoding, "trailing bytes after record");
}

}  // namespace ssi
