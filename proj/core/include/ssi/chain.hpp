#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ssi/claims.hpp"
#include "ssi/identity.hpp"

namespace ssi::chain {

enum class BlockType : uint8_t {
  claim_origin = 1,
  pure_attestation = 2,
  intent = 3,
  intent_response = 4,
  revocation = 5,
};

enum class IntentStatus : uint8_t { current = 0, revoked = 1 };

// First block carrying a claim's full metadata.
struct ClaimOriginPayload {
  ClaimMetadata metadata;
  bool operator==(const ClaimOriginPayload&) const = default;
};

// A later attestation signs only the block hash of the claim origin.
struct PureAttestationPayload {
  Hash32 metadata_block_hash{};
  bool operator==(const PureAttestationPayload&) const = default;
};

// Pre-proof statement of intent to present a claim; anchors the audit trail.
struct IntentPayload {
  Hash32 metadata_block_hash{};
  Nonce32 challenge_nonce{};
  uint64_t intent_timestamp_ms = 0;
  bool operator==(const IntentPayload&) const = default;
};

// Attestor's challenge-bound statement that an attestation is still current.
struct IntentResponsePayload {
  Hash32 intent_block_hash{};
  IntentStatus status = IntentStatus::current;
  uint64_t response_timestamp_ms = 0;
  bool operator==(const IntentResponsePayload&) const = default;
};

// Attestor withdraws an attestation it previously made.
struct RevocationPayload {
  Hash32 metadata_block_hash{};
  uint64_t revocation_timestamp_ms = 0;
  bool operator==(const RevocationPayload&) const = default;
};

using BlockPayload =
    std::variant<ClaimOriginPayload, PureAttestationPayload, IntentPayload,
                 IntentResponsePayload, RevocationPayload>;

BlockType payload_type(const BlockPayload& payload);
Bytes encode_payload(const BlockPayload& payload);
BlockPayload decode_payload(BlockType type, ByteSpan bytes);

// One signed half of a double-signed chain entry. sequence numbers start at
// 1 per chain; previous_hash is all zeros exactly for the first block.
// Blocks with no counterparty (attestor revocations) carry zeroed link
// fields and a single signature.
struct HalfBlock {
  BlockType block_type = BlockType::claim_origin;
  PublicKey public_key{};
  uint64_t sequence_number = 0;
  PublicKey link_public_key{};
  uint64_t link_sequence_number = 0;
  Hash32 previous_hash{};
  uint64_t timestamp_ms = 0;
  BlockPayload payload;
  Signature signature;

  // block_type(1) || public_key(32) || sequence(8 BE) || link_public_key(32)
  // || link_sequence(8 BE) || previous_hash(32) || timestamp(8 BE) ||
  // payload_len(4 BE) || payload
  Bytes presign_encode() const;
  Bytes encode() const;  // presign bytes || signature(64)
  static HalfBlock decode(ByteSpan bytes);

  bool is_self_signed() const { return is_zero(as_span(link_public_key)); }

  bool operator==(const HalfBlock&) const = default;
};

// block identity: SHA-256(presign bytes || signature)
Hash32 block_hash(const HalfBlock& block);

bool verify_block_signature(const HalfBlock& block);

// proposal: counterparty-signed half; agreement: the half the chain owner
// countersigns and appends to their own chain. The chain owner always signs
// last.
struct BlockPair {
  HalfBlock proposal;
  HalfBlock agreement;
  bool operator==(const BlockPair&) const = default;
};

// Validates pair linkage and both signatures.
bool verify_pair(const BlockPair& pair);

class BlockStore;  // store.hpp

// Builds and signs the proposer's half. expected_tail names the block the
// caller believes is the signer's current tail; a mismatch with the store
// raises StaleTail.
HalfBlock create_proposal(const BlockStore& store, const KeyPair& signer,
                          const PublicKey& counterparty, BlockPayload payload,
                          const std::optional<Hash32>& expected_tail_hash,
                          uint64_t now_ms);

// Pure variant used when the caller already holds the tail block.
HalfBlock make_proposal(const KeyPair& signer, const PublicKey& counterparty,
                        BlockPayload payload,
                        const std::optional<HalfBlock>& signer_tail,
                        uint64_t now_ms);

// Verifies the proposal and produces the owner's agreement half on top of
// the owner's chain. Throws BadProposalSignature / LinkMismatch.
BlockPair countersign(const KeyPair& owner, const HalfBlock& proposal,
                      const std::optional<HalfBlock>& owner_tail,
                      uint64_t now_ms);

// Single-signature block on the signer's own chain (revocations).
HalfBlock make_self_block(const KeyPair& signer, BlockPayload payload,
                          const std::optional<HalfBlock>& tail,
                          uint64_t now_ms);

struct Violation {
  uint64_t sequence = 0;
  std::string what;
};

// Full-chain check for one public key: signatures, contiguity from 1,
// previous-hash linkage, payload well-formedness. Returns every violation.
std::vector<Violation> validate_chain(std::span<const HalfBlock> blocks);

// Two validly signed, distinct blocks at the same (key, sequence).
struct ForkProof {
  HalfBlock block_a;
  HalfBlock block_b;
};

std::optional<ForkProof> detect_fork(const HalfBlock& a, const HalfBlock& b);

}  // namespace ssi::chain
