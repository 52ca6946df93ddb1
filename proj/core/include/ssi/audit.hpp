#pragma once

#include <variant>

#include "ssi/ledger.hpp"

namespace ssi::audit {

using chain::BlockStore;
using chain::ForkProof;
using chain::HalfBlock;
using chain::PowBlock;
using chain::PowForkProof;

// Owner's signature over (timestamp T1, chain tail hash). The tail hash
// transitively commits to the whole chain prefix, so this receipt plus the
// presented blocks is all the audit evidence a verifier must keep.
struct SnapshotReceipt {
  PublicKey owner_public_key{};
  uint64_t receipt_timestamp_ms = 0;  // T1
  Hash32 tail_hash{};
  Signature owner_signature;

  // owner_public_key(32) || receipt_timestamp(8 BE) || tail_hash(32);
  // the signature covers exactly these 72 bytes
  Bytes signed_bytes() const;
  Bytes encode() const;  // signed bytes || signature(64)
  static SnapshotReceipt decode(ByteSpan bytes);
  bool verify() const;

  bool operator==(const SnapshotReceipt&) const = default;
};

SnapshotReceipt make_snapshot_receipt(const KeyPair& owner,
                                      const BlockStore& store,
                                      uint64_t now_ms);  // EmptyChain

// A claim revoked at T0 but presented at T1 > T0. The revocation block is
// the attestor's signed statement; claim_ref ties it to the receipt's
// presentation.
struct WithheldRevocationProof {
  SnapshotReceipt receipt;
  HalfBlock revocation;
  Hash32 claim_ref{};
};

// Self-contained fraud evidence, verifiable with no storage access.
struct FraudProof {
  std::variant<ForkProof, PowForkProof, WithheldRevocationProof> evidence;

  Bytes encode() const;
  static FraudProof decode(ByteSpan bytes);
  std::string kind() const;
  std::string describe() const;
};

// WithheldRevocation iff the revocation names claim_ref and T0 < T1 strictly.
// Throws InvalidEvidence for bad signatures on either input.
std::optional<FraudProof> detect_withheld_revocation(
    const SnapshotReceipt& receipt, const HalfBlock& revocation,
    const Hash32& claim_ref);

// Re-derives the fraud condition from embedded evidence only.
bool verify_fraud_proof(const FraudProof& proof);

// Everything an auditor has seen: chains, retained conflicts, mined blocks,
// receipts taken by verifiers, and disseminated revocations.
struct AuditSnapshot {
  struct PresentedReceipt {
    SnapshotReceipt receipt;
    Hash32 claim_ref{};  // metadata block hash the presentation referenced
  };

  std::map<PublicKey, std::vector<HalfBlock>> chains;
  std::vector<HalfBlock> conflict_blocks;
  std::vector<PowBlock> pow_blocks;
  std::vector<PresentedReceipt> receipts;
  std::vector<HalfBlock> revocations;

  void add_store(const BlockStore& store);

  // directory round trip (chains/, receipts.bin, revocations.bin, pow.log)
  void save(const std::filesystem::path& dir) const;
  static AuditSnapshot load(const std::filesystem::path& dir);
};

// Every derivable fraud proof, exactly once: all same-(key, seq) fork pairs,
// all same-height pow fork pairs, all (receipt, revocation) timestamp
// inconsistencies.
std::vector<FraudProof> audit_global(const AuditSnapshot& snapshot);

}  // namespace ssi::audit
