#include "ssi/audit.hpp"

#include <fstream>
#include <set>

#include "ssi/errors.hpp"
#include "ssi/hash.hpp"

namespace ssi::audit {

namespace fs = std::filesystem;

Bytes SnapshotReceipt::signed_bytes() const {
  ByteWriter w;
  w.raw(owner_public_key);
  w.u64be(receipt_timestamp_ms);
  w.raw(tail_hash);
  return w.take();
}

Bytes SnapshotReceipt::encode() const {
  Bytes out = signed_bytes();
  out.insert(out.end(), owner_signature.bytes.begin(),
             owner_signature.bytes.end());
  return out;
}

SnapshotReceipt SnapshotReceipt::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  SnapshotReceipt s;
  s.owner_public_key = r.arr<32>();
  s.receipt_timestamp_ms = r.u64be();
  s.tail_hash = r.arr<32>();
  s.owner_signature.bytes = r.arr<64>();
  r.expect_done();
  return s;
}

bool SnapshotReceipt::verify() const {
  return verify_signature(owner_public_key, as_span(signed_bytes()),
                          owner_signature);
}

SnapshotReceipt make_snapshot_receipt(const KeyPair& owner,
                                      const BlockStore& store,
                                      uint64_t now_ms) {
  std::optional<HalfBlock> tail = store.tail(owner.public_key());
  if (!tail) throw Error(Errc::empty_chain, "owner has no blocks");
  SnapshotReceipt r;
  r.owner_public_key = owner.public_key();
  r.receipt_timestamp_ms = now_ms;
  r.tail_hash = chain::block_hash(*tail);
  r.owner_signature = owner.sign(as_span(r.signed_bytes()));
  return r;
}

// ---- FraudProof ---------------------------------------------------------------

namespace {
constexpr uint8_t kKindFork = 1;
constexpr uint8_t kKindWithheld = 2;
constexpr uint8_t kKindPowFork = 3;

const chain::RevocationPayload* revocation_payload(const HalfBlock& b) {
  return std::get_if<chain::RevocationPayload>(&b.payload);
}
}  // namespace

Bytes FraudProof::encode() const {
  ByteWriter w;
  if (const auto* f = std::get_if<ForkProof>(&evidence)) {
    w.u8(kKindFork);
    w.var32(as_span(f->block_a.encode()));
    w.var32(as_span(f->block_b.encode()));
  } else if (const auto* p = std::get_if<PowForkProof>(&evidence)) {
    w.u8(kKindPowFork);
    w.var32(as_span(p->block_a.encode()));
    w.var32(as_span(p->block_b.encode()));
  } else {
    const auto& wr = std::get<WithheldRevocationProof>(evidence);
    w.u8(kKindWithheld);
    w.raw(as_span(wr.receipt.encode()));
    w.var32(as_span(wr.revocation.encode()));
    w.raw(wr.claim_ref);
  }
  return w.take();
}

FraudProof FraudProof::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  uint8_t kind = r.u8();
  FraudProof out;
  if (kind == kKindFork) {
    ForkProof f;
    f.block_a = HalfBlock::decode(as_span(r.var32()));
    f.block_b = HalfBlock::decode(as_span(r.var32()));
    out.evidence = std::move(f);
  } else if (kind == kKindPowFork) {
    PowForkProof p;
    p.block_a = PowBlock::decode(as_span(r.var32()));
    p.block_b = PowBlock::decode(as_span(r.var32()));
    out.evidence = std::move(p);
  } else if (kind == kKindWithheld) {
    WithheldRevocationProof wr;
    wr.receipt = SnapshotReceipt::decode(r.raw(136));
    wr.revocation = HalfBlock::decode(as_span(r.var32()));
    wr.claim_ref = r.arr<32>();
    out.evidence = std::move(wr);
  } else {
    throw Error(Errc::malformed_encoding, "unknown fraud proof kind");
  }
  r.expect_done();
  return out;
}

std::string FraudProof::kind() const {
  if (std::holds_alternative<ForkProof>(evidence)) return "Fork";
  if (std::holds_alternative<PowForkProof>(evidence)) return "PowFork";
  return "WithheldRevocation";
}

std::string FraudProof::describe() const {
  if (const auto* f = std::get_if<ForkProof>(&evidence)) {
    return "Fork key=" + to_hex(as_span(f->block_a.public_key)) +
           " seq=" + std::to_string(f->block_a.sequence_number);
  }
  if (const auto* p = std::get_if<PowForkProof>(&evidence)) {
    return "PowFork height=" + std::to_string(p->block_a.height);
  }
  const auto& wr = std::get<WithheldRevocationProof>(evidence);
  const auto* rp = revocation_payload(wr.revocation);
  return "WithheldRevocation claim=" + to_hex(as_span(wr.claim_ref)) +
         " T0=" + std::to_string(rp ? rp->revocation_timestamp_ms : 0) +
         " T1=" + std::to_string(wr.receipt.receipt_timestamp_ms);
}

std::optional<FraudProof> detect_withheld_revocation(
    const SnapshotReceipt& receipt, const HalfBlock& revocation,
    const Hash32& claim_ref) {
  if (!receipt.verify())
    throw Error(Errc::invalid_evidence, "receipt signature");
  if (!chain::verify_block_signature(revocation))
    throw Error(Errc::invalid_evidence, "revocation block signature");
  const auto* payload = revocation_payload(revocation);
  if (!payload) throw Error(Errc::invalid_evidence, "not a revocation block");

  if (payload->metadata_block_hash != claim_ref) return std::nullopt;
  // fraud requires the revocation to exist strictly before presentation
  if (payload->revocation_timestamp_ms >= receipt.receipt_timestamp_ms)
    return std::nullopt;
  return FraudProof{WithheldRevocationProof{receipt, revocation, claim_ref}};
}

bool verify_fraud_proof(const FraudProof& proof) {
  if (const auto* f = std::get_if<ForkProof>(&proof.evidence)) {
    return chain::detect_fork(f->block_a, f->block_b).has_value();
  }
  if (const auto* p = std::get_if<PowForkProof>(&proof.evidence)) {
    return chain::pow_detect_fork(p->block_a, p->block_b).has_value();
  }
  const auto& wr = std::get<WithheldRevocationProof>(proof.evidence);
  if (!wr.receipt.verify()) return false;
  if (!chain::verify_block_signature(wr.revocation)) return false;
  const auto* payload = revocation_payload(wr.revocation);
  if (!payload) return false;
  return payload->metadata_block_hash == wr.claim_ref &&
         payload->revocation_timestamp_ms < wr.receipt.receipt_timestamp_ms;
}

// ---- AuditSnapshot --------------------------------------------------------------

void AuditSnapshot::add_store(const BlockStore& store) {
  for (const PublicKey& key : store.keys()) chains[key] = store.blocks(key);
  for (const HalfBlock& b : store.conflicts()) conflict_blocks.push_back(b);
}

void AuditSnapshot::save(const fs::path& dir) const {
  fs::create_directories(dir / "chains");
  for (const auto& [key, blocks] : chains) {
    std::ofstream f(dir / "chains" / (to_hex(as_span(key)) + ".log"),
                    std::ios::binary | std::ios::trunc);
    for (const HalfBlock& b : blocks) {
      ByteWriter w;
      w.var32(as_span(b.encode()));
      f.write(reinterpret_cast<const char*>(w.bytes().data()),
              std::streamsize(w.size()));
    }
  }
  {
    std::ofstream f(dir / "conflicts.bin", std::ios::binary | std::ios::trunc);
    for (const HalfBlock& b : conflict_blocks) {
      ByteWriter w;
      w.var32(as_span(b.encode()));
      f.write(reinterpret_cast<const char*>(w.bytes().data()),
              std::streamsize(w.size()));
    }
  }
  {
    std::ofstream f(dir / "receipts.bin", std::ios::binary | std::ios::trunc);
    for (const PresentedReceipt& r : receipts) {
      ByteWriter w;
      w.raw(as_span(r.receipt.encode()));
      w.raw(r.claim_ref);
      f.write(reinterpret_cast<const char*>(w.bytes().data()),
              std::streamsize(w.size()));
    }
  }
  {
    std::ofstream f(dir / "revocations.bin",
                    std::ios::binary | std::ios::trunc);
    for (const HalfBlock& b : revocations) {
      ByteWriter w;
      w.var32(as_span(b.encode()));
      f.write(reinterpret_cast<const char*>(w.bytes().data()),
              std::streamsize(w.size()));
    }
  }
  if (!pow_blocks.empty()) {
    std::ofstream f(dir / "pow.log", std::ios::binary | std::ios::trunc);
    for (const PowBlock& b : pow_blocks) {
      ByteWriter w;
      w.var32(as_span(b.encode()));
      f.write(reinterpret_cast<const char*>(w.bytes().data()),
              std::streamsize(w.size()));
    }
  }
}

namespace {
Bytes read_all(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(f),
               std::istreambuf_iterator<char>());
}

std::vector<Bytes> read_frames(const fs::path& p) {
  std::vector<Bytes> out;
  if (!fs::exists(p)) return out;
  Bytes data = read_all(p);
  ByteReader r(as_span(data));
  while (!r.done()) out.push_back(r.var32());
  return out;
}
}  // namespace

AuditSnapshot AuditSnapshot::load(const fs::path& dir) {
  AuditSnapshot snap;
  if (fs::exists(dir / "chains")) {
    for (const auto& entry : fs::directory_iterator(dir / "chains")) {
      if (entry.path().extension() != ".log") continue;
      std::vector<HalfBlock> blocks;
      for (const Bytes& frame : read_frames(entry.path()))
        blocks.push_back(HalfBlock::decode(as_span(frame)));
      if (blocks.empty()) continue;
      snap.chains[blocks.front().public_key] = std::move(blocks);
    }
  }
  for (const Bytes& frame : read_frames(dir / "conflicts.bin"))
    snap.conflict_blocks.push_back(HalfBlock::decode(as_span(frame)));
  if (fs::exists(dir / "receipts.bin")) {
    Bytes data = read_all(dir / "receipts.bin");
    ByteReader r(as_span(data));
    while (!r.done()) {
      PresentedReceipt pr;
      pr.receipt = SnapshotReceipt::decode(r.raw(136));
      pr.claim_ref = r.arr<32>();
      snap.receipts.push_back(std::move(pr));
    }
  }
  for (const Bytes& frame : read_frames(dir / "revocations.bin"))
    snap.revocations.push_back(HalfBlock::decode(as_span(frame)));
  for (const Bytes& frame : read_frames(dir / "pow.log"))
    snap.pow_blocks.push_back(PowBlock::decode(as_span(frame)));
  return snap;
}

// ---- audit_global -----------------------------------------------------------------

std::vector<FraudProof> audit_global(const AuditSnapshot& snapshot) {
  std::vector<FraudProof> out;

  // forks: every unordered pair of distinct valid blocks at one (key, seq)
  std::map<std::pair<PublicKey, uint64_t>, std::vector<HalfBlock>> slots;
  auto add_block = [&](const HalfBlock& b) {
    auto& slot = slots[{b.public_key, b.sequence_number}];
    Hash32 h = chain::block_hash(b);
    for (const HalfBlock& seen : slot)
      if (chain::block_hash(seen) == h) return;
    slot.push_back(b);
  };
  for (const auto& [_, blocks] : snapshot.chains)
    for (const HalfBlock& b : blocks) add_block(b);
  for (const HalfBlock& b : snapshot.conflict_blocks) add_block(b);

  for (const auto& [_, slot] : slots) {
    for (size_t i = 0; i < slot.size(); ++i)
      for (size_t j = i + 1; j < slot.size(); ++j)
        if (auto fork = chain::detect_fork(slot[i], slot[j]))
          out.push_back(FraudProof{*fork});
  }

  // pow forks by height
  std::map<uint64_t, std::vector<PowBlock>> heights;
  for (const PowBlock& b : snapshot.pow_blocks) {
    auto& hs = heights[b.height];
    Hash32 h = b.header_hash();
    bool dup = false;
    for (const PowBlock& seen : hs)
      if (seen.header_hash() == h) dup = true;
    if (!dup) hs.push_back(b);
  }
  for (const auto& [_, hs] : heights)
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        if (auto fork = chain::pow_detect_fork(hs[i], hs[j]))
          out.push_back(FraudProof{*fork});

  // withheld revocations: receipts paired with revocations of the same claim
  std::set<Bytes> seen_withheld;
  std::vector<HalfBlock> revocations = snapshot.revocations;
  for (const auto& [_, blocks] : snapshot.chains)
    for (const HalfBlock& b : blocks)
      if (std::holds_alternative<chain::RevocationPayload>(b.payload))
        revocations.push_back(b);

  for (const auto& pr : snapshot.receipts) {
    if (!pr.receipt.verify()) continue;
    for (const HalfBlock& rev : revocations) {
      if (!chain::verify_block_signature(rev)) continue;
      std::optional<FraudProof> proof;
      try {
        proof = detect_withheld_revocation(pr.receipt, rev, pr.claim_ref);
      } catch (const Error&) {
        continue;
      }
      if (!proof) continue;
      Bytes enc = proof->encode();
      if (seen_withheld.insert(enc).second) out.push_back(std::move(*proof));
    }
  }
  return out;
}

}  // namespace ssi::audit
