#include "ssi/chain.hpp"

#include "ssi/errors.hpp"
#include "ssi/hash.hpp"
#include "ssi/store.hpp"

namespace ssi::chain {

BlockType payload_type(const BlockPayload& payload) {
  return std::visit(
      [](const auto& p) -> BlockType {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClaimOriginPayload>)
          return BlockType::claim_origin;
        else if constexpr (std::is_same_v<T, PureAttestationPayload>)
          return BlockType::pure_attestation;
        else if constexpr (std::is_same_v<T, IntentPayload>)
          return BlockType::intent;
        else if constexpr (std::is_same_v<T, IntentResponsePayload>)
          return BlockType::intent_response;
        else
          return BlockType::revocation;
      },
      payload);
}

Bytes encode_payload(const BlockPayload& payload) {
  ByteWriter w;
  std::visit(
      [&w](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClaimOriginPayload>) {
          w.raw(as_span(p.metadata.encode()));
        } else if constexpr (std::is_same_v<T, PureAttestationPayload>) {
          w.raw(p.metadata_block_hash);
        } else if constexpr (std::is_same_v<T, IntentPayload>) {
          w.raw(p.metadata_block_hash);
          w.raw(p.challenge_nonce);
          w.u64be(p.intent_timestamp_ms);
        } else if constexpr (std::is_same_v<T, IntentResponsePayload>) {
          w.raw(p.intent_block_hash);
          w.u8(uint8_t(p.status));
          w.u64be(p.response_timestamp_ms);
        } else {
          w.raw(p.metadata_block_hash);
          w.u64be(p.revocation_timestamp_ms);
        }
      },
      payload);
  return w.take();
}

BlockPayload decode_payload(BlockType type, ByteSpan bytes) {
  ByteReader r(bytes);
  BlockPayload out;
  switch (type) {
    case BlockType::claim_origin:
      out = ClaimOriginPayload{ClaimMetadata::decode(r)};
      break;
    case BlockType::pure_attestation:
      out = PureAttestationPayload{r.arr<32>()};
      break;
    case BlockType::intent: {
      IntentPayload p;
      p.metadata_block_hash = r.arr<32>();
      p.challenge_nonce = r.arr<32>();
      p.intent_timestamp_ms = r.u64be();
      out = p;
      break;
    }
    case BlockType::intent_response: {
      IntentResponsePayload p;
      p.intent_block_hash = r.arr<32>();
      uint8_t status = r.u8();
      if (status > 1)
        throw Error(Errc::malformed_encoding, "bad intent response status");
      p.status = IntentStatus(status);
      p.response_timestamp_ms = r.u64be();
      out = p;
      break;
    }
    case BlockType::revocation: {
      RevocationPayload p;
      p.metadata_block_hash = r.arr<32>();
      p.revocation_timestamp_ms = r.u64be();
      out = p;
      break;
    }
    default:
      throw Error(Errc::malformed_encoding, "unknown block type");
  }
  r.expect_done();
  return out;
}

Bytes HalfBlock::presign_encode() const {
  ByteWriter w;
  w.u8(uint8_t(block_type));
  w.raw(public_key);
  w.u64be(sequence_number);
  w.raw(link_public_key);
  w.u64be(link_sequence_number);
  w.raw(previous_hash);
  w.u64be(timestamp_ms);
  Bytes p = encode_payload(payload);
  w.u32be(uint32_t(p.size()));
  w.raw(as_span(p));
  return w.take();
}

Bytes HalfBlock::encode() const {
  Bytes out = presign_encode();
  out.insert(out.end(), signature.bytes.begin(), signature.bytes.end());
  return out;
}

HalfBlock HalfBlock::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  HalfBlock b;
  uint8_t type = r.u8();
  if (type < 1 || type > 5)
    throw Error(Errc::malformed_encoding, "unknown block type");
  b.block_type = BlockType(type);
  b.public_key = r.arr<32>();
  b.sequence_number = r.u64be();
  b.link_public_key = r.arr<32>();
  b.link_sequence_number = r.u64be();
  b.previous_hash = r.arr<32>();
  b.timestamp_ms = r.u64be();
  Bytes payload_bytes = r.var32();
  b.payload = decode_payload(b.block_type, as_span(payload_bytes));
  b.signature.bytes = r.arr<64>();
  r.expect_done();
  return b;
}

Hash32 block_hash(const HalfBlock& block) {
  return sha256(as_span(block.encode()));
}

bool verify_block_signature(const HalfBlock& block) {
  return verify_signature(block.public_key, as_span(block.presign_encode()),
                          block.signature);
}

bool verify_pair(const BlockPair& pair) {
  const HalfBlock& prop = pair.proposal;
  const HalfBlock& agr = pair.agreement;
  if (agr.link_public_key != prop.public_key) return false;
  if (prop.link_public_key != agr.public_key) return false;
  if (agr.link_sequence_number != prop.sequence_number) return false;
  if (encode_payload(prop.payload) != encode_payload(agr.payload)) return false;
  if (prop.block_type != agr.block_type) return false;
  return verify_block_signature(prop) && verify_block_signature(agr);
}

namespace {
HalfBlock build_on_tail(const KeyPair& signer, BlockPayload payload,
                        const std::optional<HalfBlock>& tail, uint64_t now_ms) {
  HalfBlock b;
  b.block_type = payload_type(payload);
  b.public_key = signer.public_key();
  b.sequence_number = tail ? tail->sequence_number + 1 : 1;
  b.previous_hash = tail ? block_hash(*tail) : Hash32{};
  b.timestamp_ms = now_ms;
  b.payload = std::move(payload);
  return b;
}
}  // namespace

HalfBlock make_proposal(const KeyPair& signer, const PublicKey& counterparty,
                        BlockPayload payload,
                        const std::optional<HalfBlock>& signer_tail,
                        uint64_t now_ms) {
  HalfBlock b = build_on_tail(signer, std::move(payload), signer_tail, now_ms);
  b.link_public_key = counterparty;
  b.link_sequence_number = 0;  // counterparty half does not exist yet
  b.signature = signer.sign(as_span(b.presign_encode()));
  return b;
}

HalfBlock create_proposal(const BlockStore& store, const KeyPair& signer,
                          const PublicKey& counterparty, BlockPayload payload,
                          const std::optional<Hash32>& expected_tail_hash,
                          uint64_t now_ms) {
  std::optional<HalfBlock> tail = store.tail(signer.public_key());
  std::optional<Hash32> tail_hash;
  if (tail) tail_hash = block_hash(*tail);
  if (tail_hash != expected_tail_hash)
    throw Error(Errc::stale_tail, "chain tail changed");
  return make_proposal(signer, counterparty, std::move(payload), tail, now_ms);
}

BlockPair countersign(const KeyPair& owner, const HalfBlock& proposal,
                      const std::optional<HalfBlock>& owner_tail,
                      uint64_t now_ms) {
  if (!verify_block_signature(proposal))
    throw Error(Errc::bad_proposal_signature, "proposal signature invalid");
  if (proposal.link_public_key != owner.public_key())
    throw Error(Errc::link_mismatch, "proposal addressed to another key");

  HalfBlock agr = build_on_tail(owner, proposal.payload, owner_tail, now_ms);
  agr.link_public_key = proposal.public_key;
  agr.link_sequence_number = proposal.sequence_number;
  agr.signature = owner.sign(as_span(agr.presign_encode()));
  return BlockPair{proposal, agr};
}

HalfBlock make_self_block(const KeyPair& signer, BlockPayload payload,
                          const std::optional<HalfBlock>& tail,
                          uint64_t now_ms) {
  HalfBlock b = build_on_tail(signer, std::move(payload), tail, now_ms);
  b.signature = signer.sign(as_span(b.presign_encode()));
  return b;
}

namespace {
bool payload_timestamps_ok(const BlockPayload& payload) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, IntentPayload>)
          return p.intent_timestamp_ms > 0;
        else if constexpr (std::is_same_v<T, IntentResponsePayload>)
          return p.response_timestamp_ms > 0;
        else if constexpr (std::is_same_v<T, RevocationPayload>)
          return p.revocation_timestamp_ms > 0;
        else
          return true;
      },
      payload);
}
}  // namespace

std::vector<Violation> validate_chain(std::span<const HalfBlock> blocks) {
  std::vector<Violation> out;
  if (blocks.empty()) return out;

  const PublicKey& key = blocks.front().public_key;
  uint64_t expected_seq = 1;
  const HalfBlock* prev = nullptr;
  for (const HalfBlock& b : blocks) {
    if (b.public_key != key)
      out.push_back({b.sequence_number, "block signed by a different key"});
    if (b.sequence_number != expected_seq) {
      out.push_back({expected_seq, "gap at sequence " +
                                       std::to_string(expected_seq)});
      expected_seq = b.sequence_number;  // resynchronize to report the rest
    }
    if (b.sequence_number == 1) {
      if (!is_zero(as_span(b.previous_hash)))
        out.push_back({b.sequence_number, "first block has previous hash"});
    } else if (prev) {
      if (b.previous_hash != block_hash(*prev))
        out.push_back({b.sequence_number, "previous hash mismatch"});
    } else {
      out.push_back({b.sequence_number, "chain does not start at sequence 1"});
    }
    if (!verify_block_signature(b))
      out.push_back({b.sequence_number, "invalid signature"});
    if (b.timestamp_ms == 0 || !payload_timestamps_ok(b.payload))
      out.push_back({b.sequence_number, "non-positive timestamp"});
    if (b.block_type != payload_type(b.payload))
      out.push_back({b.sequence_number, "block type does not match payload"});
    prev = &b;
    expected_seq = b.sequence_number + 1;
  }
  return out;
}

std::optional<ForkProof> detect_fork(const HalfBlock& a, const HalfBlock& b) {
  if (a.public_key != b.public_key) return std::nullopt;
  if (a.sequence_number != b.sequence_number) return std::nullopt;
  Hash32 ha = block_hash(a);
  Hash32 hb = block_hash(b);
  if (ha == hb) return std::nullopt;
  if (!verify_block_signature(a) || !verify_block_signature(b))
    return std::nullopt;
  // canonical order so detect_fork(a,b) and detect_fork(b,a) agree
  if (hb < ha) return ForkProof{b, a};
  return ForkProof{a, b};
}

}  // namespace ssi::chain
