#include "ssi/hash.hpp"

#include <sodium.h>

#include "ssi/errors.hpp"

namespace ssi {

namespace {
struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) throw Error(Errc::io_error, "sodium_init failed");
  }
};
}  // namespace

void ensure_sodium() { static SodiumInit init; }

Hash32 sha256(ByteSpan data) {
  ensure_sodium();
  Hash32 out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

std::array<uint8_t, 64> sha512(ByteSpan data) {
  ensure_sodium();
  std::array<uint8_t, 64> out;
  crypto_hash_sha512(out.data(), data.data(), data.size());
  return out;
}

Hash32 hmac_sha256(ByteSpan key, ByteSpan data) {
  ensure_sodium();
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.data(), key.size());
  crypto_auth_hmacsha256_update(&st, data.data(), data.size());
  Hash32 out;
  crypto_auth_hmacsha256_final(&st, out.data());
  return out;
}

Sha256::Sha256() {
  ensure_sodium();
  crypto_hash_sha256_init(&state_);
}

Sha256& Sha256::update(ByteSpan data) {
  crypto_hash_sha256_update(&state_, data.data(), data.size());
  return *this;
}

Hash32 Sha256::finish() {
  Hash32 out;
  crypto_hash_sha256_final(&state_, out.data());
  return out;
}

}  // namespace ssi
