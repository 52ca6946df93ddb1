#include "ssi/rng.hpp"

#include <sodium.h>

#include <cstring>

#include "ssi/hash.hpp"

namespace ssi {

uint64_t Rng::u64() {
  uint8_t b[8];
  fill(b, 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
  return v;
}

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) return 0;
  // rejection sampling over the top of the range
  uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    uint64_t v = u64();
    if (v < limit) return v % bound;
  }
}

void SystemRng::fill(uint8_t* out, size_t len) {
  ensure_sodium();
  randombytes_buf(out, len);
}

DeterministicRng::DeterministicRng(uint64_t seed, std::string_view label) {
  ensure_sodium();
  ByteWriter w;
  w.str("ssi-ledger/drbg.v1");
  w.u64be(seed);
  w.str(label);
  key_ = sha256(as_span(w.bytes()));
}

void DeterministicRng::fill(uint8_t* out, size_t len) {
  // Each request consumes a fresh chacha20 nonce; the stream never repeats
  // within one instance.
  uint8_t nonce[8];
  for (int i = 7; i >= 0; --i) nonce[7 - i] = uint8_t(block_ >> (8 * i));
  ++block_;
  std::memset(out, 0, len);
  crypto_stream_chacha20_xor(out, out, len, nonce, key_.data());
}

}  // namespace ssi
