#pragma once

#include <string>

#include "ssi/bytes.hpp"
#include "ssi/identity.hpp"
#include "ssi/proofs.hpp"

namespace ssi {

// The five-field claim record. Times are milliseconds since the Unix epoch;
// validity_term is an absolute expiry instant, 0 meaning the claim never
// expires.
struct ClaimMetadata {
  std::string name;          // attribute identifier, opaque UTF-8
  uint64_t timestamp_ms = 0;  // claim creation time
  uint64_t validity_term_ms = 0;
  std::string proof_format;  // registry key
  Hash32 proof_link{};       // SHA-256 of the canonical commitment bytes

  // Canonical encoding, the hashing and block-payload form:
  // name_len(2 BE) || name || timestamp(8 BE) || validity_term(8 BE) ||
  // format_len(1) || format || proof_link(32)
  Bytes encode() const;
  static ClaimMetadata decode(ByteReader& r);

  bool operator==(const ClaimMetadata&) const = default;
};

// throws on invariant violations (name/format bounds, term before timestamp)
void validate_metadata(const ClaimMetadata& metadata);

Hash32 metadata_hash(const ClaimMetadata& metadata);

enum class Validity { valid, expired };

// Expired strictly after the term: a claim is still valid at exactly
// validity_term.
Validity claim_validity(const ClaimMetadata& metadata, uint64_t now_ms);

struct Claim {
  ClaimMetadata metadata;
  PublicKey owner_public_key{};
  proofs::Commitment commitment;
};

// Commits to the value under the named backend and assembles the metadata
// record. The witness stays with the owner.
std::pair<Claim, proofs::Witness> create_claim(
    const KeyPair& owner, const proofs::Registry& registry,
    const std::string& name, ByteSpan value, uint64_t validity_term_ms,
    const std::string& proof_format, uint64_t now_ms, Rng& rng);

}  // namespace ssi
