#pragma once

#include <sodium/crypto_hash_sha256.h>

#include "ssi/bytes.hpp"

namespace ssi {

// Initializes libsodium once; cheap to call repeatedly.
void ensure_sodium();

// SHA-256 is the digest everywhere a 32-byte digest appears in the wire
// formats.
Hash32 sha256(ByteSpan data);
std::array<uint8_t, 64> sha512(ByteSpan data);
Hash32 hmac_sha256(ByteSpan key, ByteSpan data);

class Sha256 {
 public:
  Sha256();
  Sha256& update(ByteSpan data);
  Sha256& update(std::string_view s) { return update(as_span(s)); }
  template <size_t N>
  Sha256& update(const std::array<uint8_t, N>& a) {
    return update(ByteSpan(a.data(), N));
  }
  Hash32 finish();

 private:
  crypto_hash_sha256_state state_;
};

}  // namespace ssi
