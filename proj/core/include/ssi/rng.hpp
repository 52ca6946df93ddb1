#pragma once

#include <cstdint>
#include <string_view>

#include "ssi/bytes.hpp"

namespace ssi {

// Randomness source. Protocol and proof code takes an explicit Rng so the
// simulator and tests can replay runs bit-for-bit.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(uint8_t* out, size_t len) = 0;

  Bytes bytes(size_t n) {
    Bytes b(n);
    fill(b.data(), n);
    return b;
  }
  template <size_t N>
  std::array<uint8_t, N> array() {
    std::array<uint8_t, N> a;
    fill(a.data(), N);
    return a;
  }
  Nonce32 nonce() { return array<32>(); }
  uint64_t u64();
  // uniform in [0, bound) without modulo bias
  uint64_t below(uint64_t bound);
};

// OS randomness (libsodium randombytes).
class SystemRng final : public Rng {
 public:
  void fill(uint8_t* out, size_t len) override;
};

// ChaCha20-keystream DRBG. Same (seed, label) always yields the same stream;
// distinct labels give independent substreams of one master seed.
class DeterministicRng final : public Rng {
 public:
  DeterministicRng(uint64_t seed, std::string_view label);
  explicit DeterministicRng(uint64_t seed) : DeterministicRng(seed, "") {}
  void fill(uint8_t* out, size_t len) override;

 private:
  std::array<uint8_t, 32> key_;
  uint64_t block_ = 0;
};

}  // namespace ssi
