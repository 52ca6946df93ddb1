#pragma once

#include <variant>

#include "ssi/audit.hpp"
#include "ssi/chain.hpp"
#include "ssi/proofs.hpp"

namespace ssi::protocol {

using audit::SnapshotReceipt;
using chain::BlockPair;
using chain::HalfBlock;

enum class MsgType : uint8_t {
  attestation_request = 1,
  attestation_proposal = 2,
  attestation_agreement = 3,
  verification_request = 4,
  claim_presentation = 5,
  proof_message = 6,
  intent_proposal = 7,
  intent_agreement = 8,
  snapshot_receipt = 9,
  active_check_request = 10,
  active_check_response = 11,
  revocation_announce = 12,
  key_ownership_challenge = 13,
  key_ownership_response = 14,
  interactive_move = 15,
};

const char* message_type_name(MsgType t);

enum class Escalation : uint8_t { passive = 0, intent = 1, active = 2 };
enum class ProofMode : uint8_t { non_interactive = 0, interactive = 1 };

const char* escalation_name(Escalation e);
std::optional<Escalation> escalation_from_name(std::string_view name);

// owner -> attestor over the confidential attestation channel; the only
// message that ever carries the value and witness secret
struct AttestationRequest {
  ClaimMetadata metadata;
  Bytes value;
  Bytes witness_randomness;
  std::optional<HalfBlock> origin_agreement;  // present for later attestations
};

struct AttestationProposal {
  HalfBlock block;
};

struct AttestationAgreement {
  HalfBlock block;
};

struct VerificationRequest {
  std::string name;
  proofs::Predicate predicate;
  Nonce32 verifier_nonce{};
  Escalation escalation = Escalation::passive;
  ProofMode proof_mode = ProofMode::non_interactive;
};

struct ClaimPresentation {
  BlockPair origin;
  std::vector<BlockPair> attestations;  // pure attestation pairs
  proofs::Commitment commitment;
};

struct ProofMessage {
  proofs::Proof proof;
};

struct IntentProposal {
  HalfBlock block;
};

struct IntentAgreement {
  HalfBlock block;
};

struct SnapshotReceiptMsg {
  SnapshotReceipt receipt;
};

// owner -> attestor relay during active verification; carries the owner's
// already-signed intent-response proposal for the attestor to countersign
struct ActiveCheckRequest {
  Hash32 metadata_block_hash{};
  Nonce32 challenge_nonce{};
  uint64_t intent_timestamp_ms = 0;
  HalfBlock response_proposal;
};

struct ActiveCheckResponse {
  BlockPair pair;
};

struct RevocationAnnounce {
  HalfBlock revocation;
};

struct KeyOwnershipChallenge {
  uint64_t timestamp_ms = 0;
  Nonce32 nonce{};
};

struct KeyOwnershipResponse {
  Signature signature;
};

// interactive proof moves relayed through the verification session
struct InteractiveMove {
  uint8_t move_number = 0;  // 1: prover commit, 2: challenge, 3: response
  Bytes payload;
};

using WireMessage =
    std::variant<AttestationRequest, AttestationProposal, AttestationAgreement,
                 VerificationRequest, ClaimPresentation, ProofMessage,
                 IntentProposal, IntentAgreement, SnapshotReceiptMsg,
                 ActiveCheckRequest, ActiveCheckResponse, RevocationAnnounce,
                 KeyOwnershipChallenge, KeyOwnershipResponse, InteractiveMove>;

MsgType message_type(const WireMessage& msg);

// Frame: body_len(4 BE) || type(1) || body. Unknown type codes are rejected.
Bytes encode_message(const WireMessage& msg);
WireMessage decode_message(ByteSpan frame);  // throws protocol_violation

// canonical challenge bytes for key-ownership signatures
Bytes key_ownership_signing_bytes(uint64_t timestamp_ms, const Nonce32& nonce);

}  // namespace ssi::protocol
