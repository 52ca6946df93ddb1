#pragma once

#include <functional>
#include <set>

#include "ssi/ledger.hpp"
#include "ssi/wire.hpp"

namespace ssi::protocol {

using chain::Ledger;

// Flat allow-list trust: a claim counts once per distinct trusted attestor.
struct VerificationPolicy {
  std::set<PublicKey> trusted_attestors;
  uint32_t minimum_attestations = 1;
  Escalation escalation = Escalation::passive;
  uint64_t clock_skew_ms = 30'000;

  bool trusts(const PublicKey& key) const {
    return trusted_attestors.count(key) != 0;
  }
};

struct VerificationOutcome {
  bool accepted = false;
  std::vector<std::string> reasons;  // every failed check, named

  bool has_reason(std::string_view r) const {
    for (const auto& x : reasons)
      if (x == r) return true;
    return false;
  }
};

// Everything a verifier session gathered; the decision procedure runs over
// exactly this record.
struct CollectedVerification {
  std::string requested_name;
  proofs::Predicate predicate = proofs::Predicate::in_range(0, 0);
  Nonce32 verifier_nonce{};
  Escalation escalation = Escalation::passive;
  ProofMode proof_mode = ProofMode::non_interactive;
  PublicKey owner{};
  PublicKey verifier{};
  VerificationPolicy policy;

  std::optional<ClaimPresentation> presentation;
  std::optional<proofs::Proof> proof;  // non-interactive
  std::optional<Bytes> interactive_first_move;
  std::optional<Bytes> interactive_response;
  Nonce32 interactive_challenge{};
  std::optional<BlockPair> intent_pair;
  std::optional<SnapshotReceipt> receipt;
  std::optional<BlockPair> active_response;
  bool revoked_at_source = false;
  std::optional<HalfBlock> revocation_evidence;
  bool attestor_offline = false;
};

// The verifier's full check: pair signatures, trust counting, validity,
// proof link, proof verification, and the escalation-specific evidence.
// Every failed check lands in reasons.
VerificationOutcome evaluate_verification(const CollectedVerification& c,
                                          const proofs::Registry& registry,
                                          uint64_t now_ms);

// Messages are addressed by peer public key; the transport (simulator,
// in-process pump, or socket) routes envelopes.
struct Envelope {
  PublicKey from{};
  PublicKey to{};
  uint64_t session_id = 0;
  WireMessage message;
};

struct SessionResult {
  enum class Kind { attestation, verification, key_ownership } kind;
  bool ok = false;
  std::string error;  // error name when !ok and no outcome applies
  VerificationOutcome outcome;
};

class Peer;

struct PeerObserver {
  virtual ~PeerObserver() = default;
  virtual void on_append(const Peer& peer, const HalfBlock& block,
                         chain::AppendResult result) {
    (void)peer, (void)block, (void)result;
  }
};

// A protocol endpoint: owns an identity key, a wallet of claims, the
// attestation registry of claims it vouched for, and the sessions it is
// running. One Peer may act as owner, attestor and verifier.
class Peer {
 public:
  struct OwnedClaim {
    Claim claim;
    proofs::Witness witness;
    std::optional<BlockPair> origin;
    std::vector<BlockPair> attestations;
    Hash32 origin_hash() const;  // block hash of the origin agreement
  };

  Peer(std::string name, KeyPair key, Ledger& ledger,
       const proofs::Registry& registry, Rng& rng);

  const std::string& name() const { return name_; }
  const PublicKey& public_key() const { return key_.public_key(); }
  const KeyPair& key() const { return key_; }
  Ledger& ledger() { return *ledger_; }

  void set_observer(PeerObserver* obs) { observer_ = obs; }
  void add_known_peer(const PublicKey& pk) { known_peers_.push_back(pk); }
  void register_second_key(const KeyPair& kp) { second_keys_.push_back(kp); }

  // adversarial behavior switches (simulator scenarios)
  void set_replay_proof(bool v) { replay_proof_ = v; }
  void set_decline_intent(bool v) { decline_intent_ = v; }
  void set_decline_countersign(bool v) { decline_countersign_ = v; }
  void set_reject_attestations(bool v) { reject_attestations_ = v; }

  // --- initiating APIs; envelopes to deliver are appended to out ---
  uint64_t begin_attestation(const PublicKey& attestor,
                             const std::string& name, Bytes value,
                             const std::string& format, uint64_t validity_term,
                             uint64_t now, std::vector<Envelope>& out);
  uint64_t begin_verification(const PublicKey& owner, const std::string& name,
                              proofs::Predicate predicate,
                              VerificationPolicy policy, ProofMode mode,
                              uint64_t now, std::vector<Envelope>& out);
  uint64_t begin_key_ownership(const PublicKey& owner,
                               const PublicKey& second_key, uint64_t now,
                               std::vector<Envelope>& out);
  // NotTheAttestor unless this peer attested the claim
  HalfBlock revoke(const Hash32& metadata_block_hash, uint64_t now,
                   std::vector<Envelope>& out);

  // rewrites the own chain tail: signs an alternative block at the same
  // sequence (the whitewash move); returns the conflicting block
  HalfBlock whitewash_tail(uint64_t now);

  void handle(const Envelope& in, uint64_t now, std::vector<Envelope>& out);
  // fires the session's pending deadline, if any
  void handle_timeout(uint64_t session_key, uint64_t now);

  std::optional<SessionResult> result(uint64_t session_id) const;
  // sessions this peer initiated that have not finished
  std::vector<uint64_t> open_sessions() const;
  uint64_t session_deadline(uint64_t session_key) const;

  const OwnedClaim* find_claim(const std::string& name) const;
  std::optional<Hash32> claim_ref(const std::string& name) const;
  const std::vector<audit::AuditSnapshot::PresentedReceipt>& held_receipts()
      const {
    return held_receipts_;
  }
  const std::vector<HalfBlock>& known_revocations() const {
    return known_revocations_;
  }
  bool has_attested(const Hash32& metadata_block_hash) const {
    return attested_.count(metadata_block_hash) != 0;
  }

  static constexpr uint64_t kSessionTimeoutMs = 5'000;

 private:
  struct VerifySessionState;
  struct OwnerSessionState;
  struct AttestSessionState;
  struct AttestorSessionState;
  struct KeyOwnershipState;

  uint64_t next_session_id() { return ++session_counter_; }
  void send(std::vector<Envelope>& out, const PublicKey& to,
            uint64_t session_id, WireMessage msg) {
    out.push_back(Envelope{public_key(), to, session_id, std::move(msg)});
  }
  chain::AppendResult append_pair(const BlockPair& pair);
  chain::AppendResult append_self(const HalfBlock& block);
  std::optional<HalfBlock> own_tail() const {
    return ledger_->tail(key_.public_key());
  }
  void finish(uint64_t session_id, SessionResult result);

  // message handlers (verifier side)
  void on_presentation(VerifySessionState& s, const ClaimPresentation& m,
                       uint64_t now, std::vector<Envelope>& out);
  void on_intent_agreement(VerifySessionState& s, const IntentAgreement& m,
                           uint64_t now, std::vector<Envelope>& out);
  void decide(VerifySessionState& s, uint64_t now);
  // owner side
  void on_verification_request(const Envelope& in, uint64_t now,
                               std::vector<Envelope>& out);
  void owner_send_proof(OwnerSessionState& s, uint64_t session_id, uint64_t now,
                        std::vector<Envelope>& out);
  // attestor side
  void on_attestation_request(const Envelope& in, uint64_t now,
                              std::vector<Envelope>& out);
  void on_active_check(const Envelope& in, uint64_t now,
                       std::vector<Envelope>& out);

  std::string name_;
  KeyPair key_;
  Ledger* ledger_;
  const proofs::Registry* registry_;
  Rng* rng_;
  PeerObserver* observer_ = nullptr;

  uint64_t session_counter_ = 0;
  std::map<std::string, OwnedClaim> wallet_;
  std::map<Hash32, ClaimMetadata> attested_;
  std::map<Hash32, HalfBlock> my_revocations_;
  std::vector<HalfBlock> known_revocations_;
  std::vector<audit::AuditSnapshot::PresentedReceipt> held_receipts_;
  std::vector<PublicKey> known_peers_;
  std::vector<KeyPair> second_keys_;
  std::optional<proofs::Proof> last_proof_;

  bool replay_proof_ = false;
  bool decline_intent_ = false;
  bool decline_countersign_ = false;
  bool reject_attestations_ = false;

  // initiator sessions keyed by session id; responder sessions keyed by
  // (initiator key, session id) folded into a map key
  std::map<uint64_t, std::shared_ptr<VerifySessionState>> verify_sessions_;
  std::map<uint64_t, std::shared_ptr<AttestSessionState>> attest_sessions_;
  std::map<uint64_t, std::shared_ptr<KeyOwnershipState>> key_sessions_;
  std::map<std::pair<Bytes, uint64_t>, std::shared_ptr<OwnerSessionState>>
      owner_sessions_;
  std::map<std::pair<Bytes, uint64_t>, std::shared_ptr<AttestorSessionState>>
      attestor_sessions_;
  std::map<uint64_t, SessionResult> results_;
};

// ---- In-process flows (local transport; also the benchmarked regions) ----

struct AttestationResult {
  BlockPair origin_or_attestation;
  Claim claim;
};

// Runs the full attestation conversation between two in-process peers.
// Throws AttestorRejected / OwnerDeclined / Timeout.
AttestationResult attestation_flow(Peer& owner, Peer& attestor,
                                   const std::string& name, Bytes value,
                                   const std::string& format,
                                   uint64_t validity_term, uint64_t now);

// Runs a verification conversation. attestor may be null except for the
// active escalation. Returns the outcome and, for intent/active runs, the
// snapshot receipt the verifier stored.
std::pair<VerificationOutcome, std::optional<SnapshotReceipt>>
verification_flow(Peer& verifier, Peer& owner, Peer* attestor,
                  const std::string& name, proofs::Predicate predicate,
                  VerificationPolicy policy, ProofMode mode, uint64_t now);

bool key_ownership_flow(Peer& verifier, Peer& owner,
                        const PublicKey& second_key, uint64_t now);

// Delivers envelopes between the given peers until quiescent; peers not in
// the list are unreachable (their mail is dropped).
void pump(std::vector<Envelope> pending, std::span<Peer*> peers, uint64_t now);

}  // namespace ssi::protocol
