#include "ssi/identity.hpp"

#include <sodium.h>

#include "ssi/errors.hpp"
#include "ssi/hash.hpp"

namespace ssi {

KeyPair KeyPair::from_seed(ByteSpan seed) {
  ensure_sodium();
  if (seed.size() != crypto_sign_SEEDBYTES)
    throw Error(Errc::invalid_seed, "seed must be 32 bytes");
  KeyPair kp;
  crypto_sign_seed_keypair(kp.public_key_.data(), kp.secret_.data(),
                           seed.data());
  return kp;
}

KeyPair KeyPair::generate(Rng& rng) {
  auto seed = rng.array<32>();
  return from_seed(as_span(seed));
}

std::array<uint8_t, 32> KeyPair::seed() const {
  std::array<uint8_t, 32> s;
  std::memcpy(s.data(), secret_.data(), 32);
  return s;
}

Signature KeyPair::sign(ByteSpan message) const {
  Signature sig;
  crypto_sign_detached(sig.bytes.data(), nullptr, message.data(),
                       message.size(), secret_.data());
  return sig;
}

KeyPair generate_identity(ByteSpan seed) { return KeyPair::from_seed(seed); }

bool verify_signature(const PublicKey& public_key, ByteSpan message,
                      const Signature& sig) {
  ensure_sodium();
  return crypto_sign_verify_detached(sig.bytes.data(), message.data(),
                                     message.size(), public_key.data()) == 0;
}

bool verify_signature(ByteSpan public_key, ByteSpan message, ByteSpan sig) {
  if (public_key.size() != crypto_sign_PUBLICKEYBYTES)
    throw Error(Errc::malformed_key, "public key must be 32 bytes");
  if (sig.size() != crypto_sign_BYTES)
    throw Error(Errc::malformed_signature, "signature must be 64 bytes");
  PublicKey pk;
  std::memcpy(pk.data(), public_key.data(), pk.size());
  Signature s;
  std::memcpy(s.bytes.data(), sig.data(), s.bytes.size());
  return verify_signature(pk, message, s);
}

KeyPair derive_attribute_key(const KeyPair& identity,
                             std::string_view attribute_name) {
  if (attribute_name.empty())
    throw Error(Errc::invalid_attribute_name, "attribute name is empty");
  ByteWriter w;
  w.str("ssi-ledger/attr-key.v1");
  w.str(attribute_name);
  auto seed = identity.seed();
  Hash32 derived = hmac_sha256(as_span(seed), as_span(w.bytes()));
  return KeyPair::from_seed(as_span(derived));
}

}  // namespace ssi
