#pragma once

#include <string_view>

#include "ssi/bytes.hpp"
#include "ssi/rng.hpp"

namespace ssi {

// Detached Ed25519 signature. Wire format: 64 raw bytes, no wrapping.
struct Signature {
  std::array<uint8_t, 64> bytes{};

  bool operator==(const Signature&) const = default;
};

// Ed25519 keypair derived from a 32-byte seed. Signing is deterministic:
// the same key and message always produce the same signature.
class KeyPair {
 public:
  // throws Error(invalid_seed) unless seed is exactly 32 bytes
  static KeyPair from_seed(ByteSpan seed);
  static KeyPair generate(Rng& rng);

  const PublicKey& public_key() const { return public_key_; }
  std::array<uint8_t, 32> seed() const;

  Signature sign(ByteSpan message) const;

 private:
  KeyPair() = default;
  PublicKey public_key_{};
  std::array<uint8_t, 64> secret_{};  // libsodium layout: seed || public key
};

// generate_identity of the public surface; seed must be 32 bytes.
KeyPair generate_identity(ByteSpan seed);

bool verify_signature(const PublicKey& public_key, ByteSpan message,
                      const Signature& sig);
// Length-checked variant: throws Error(malformed_key) / Error(malformed_signature).
bool verify_signature(ByteSpan public_key, ByteSpan message, ByteSpan sig);

// Deterministic per-attribute subkey: keyed hash of the root seed and the
// attribute name. The derived seed reveals nothing about the root seed.
KeyPair derive_attribute_key(const KeyPair& identity,
                             std::string_view attribute_name);

}  // namespace ssi
