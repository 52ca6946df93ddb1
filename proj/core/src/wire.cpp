#include "ssi/wire.hpp"

#include "ssi/errors.hpp"

namespace ssi::protocol {

const char* message_type_name(MsgType t) {
  switch (t) {
    case MsgType::attestation_request: return "AttestationRequest";
    case MsgType::attestation_proposal: return "AttestationProposal";
    case MsgType::attestation_agreement: return "AttestationAgreement";
    case MsgType::verification_request: return "VerificationRequest";
    case MsgType::claim_presentation: return "ClaimPresentation";
    case MsgType::proof_message: return "ProofMessage";
    case MsgType::intent_proposal: return "IntentProposal";
    case MsgType::intent_agreement: return "IntentAgreement";
    case MsgType::snapshot_receipt: return "SnapshotReceipt";
    case MsgType::active_check_request: return "ActiveCheckRequest";
    case MsgType::active_check_response: return "ActiveCheckResponse";
    case MsgType::revocation_announce: return "RevocationAnnounce";
    case MsgType::key_ownership_challenge: return "KeyOwnershipChallenge";
    case MsgType::key_ownership_response: return "KeyOwnershipResponse";
    case MsgType::interactive_move: return "InteractiveMove";
  }
  return "Unknown";
}

const char* escalation_name(Escalation e) {
  switch (e) {
    case Escalation::passive: return "passive";
    case Escalation::intent: return "intent";
    case Escalation::active: return "active";
  }
  return "unknown";
}

std::optional<Escalation> escalation_from_name(std::string_view name) {
  if (name == "passive") return Escalation::passive;
  if (name == "intent") return Escalation::intent;
  if (name == "active") return Escalation::active;
  return std::nullopt;
}

MsgType message_type(const WireMessage& msg) {
  return MsgType(uint8_t(msg.index()) + 1);
}

namespace {

void write_block(ByteWriter& w, const HalfBlock& b) { w.var32(as_span(b.encode())); }

HalfBlock read_block(ByteReader& r) {
  return HalfBlock::decode(as_span(r.var32()));
}

void write_pair(ByteWriter& w, const BlockPair& p) {
  write_block(w, p.proposal);
  write_block(w, p.agreement);
}

BlockPair read_pair(ByteReader& r) {
  BlockPair p;
  p.proposal = read_block(r);
  p.agreement = read_block(r);
  return p;
}

void write_commitment(ByteWriter& w, const proofs::Commitment& c) {
  w.u8(uint8_t(c.format.size()));
  w.str(c.format);
  w.var32(as_span(c.bytes));
}

proofs::Commitment read_commitment(ByteReader& r) {
  proofs::Commitment c;
  uint8_t len = r.u8();
  c.format = r.str(len);
  c.bytes = r.var32();
  return c;
}

Bytes encode_body(const WireMessage& msg) {
  ByteWriter w;
  std::visit(
      [&w](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, AttestationRequest>) {
          w.var32(as_span(m.metadata.encode()));
          w.var32(as_span(m.value));
          w.var32(as_span(m.witness_randomness));
          w.u8(m.origin_agreement ? 1 : 0);
          if (m.origin_agreement) write_block(w, *m.origin_agreement);
        } else if constexpr (std::is_same_v<T, AttestationProposal> ||
                             std::is_same_v<T, AttestationAgreement> ||
                             std::is_same_v<T, IntentProposal> ||
                             std::is_same_v<T, IntentAgreement>) {
          write_block(w, m.block);
        } else if constexpr (std::is_same_v<T, VerificationRequest>) {
          w.u16be(uint16_t(m.name.size()));
          w.str(m.name);
          w.raw(as_span(m.predicate.encode()));
          w.raw(m.verifier_nonce);
          w.u8(uint8_t(m.escalation));
          w.u8(uint8_t(m.proof_mode));
        } else if constexpr (std::is_same_v<T, ClaimPresentation>) {
          write_pair(w, m.origin);
          w.u16be(uint16_t(m.attestations.size()));
          for (const auto& p : m.attestations) write_pair(w, p);
          write_commitment(w, m.commitment);
        } else if constexpr (std::is_same_v<T, ProofMessage>) {
          w.u8(uint8_t(m.proof.format.size()));
          w.str(m.proof.format);
          w.var32(as_span(m.proof.transcript));
          w.raw(m.proof.bound_nonce);
        } else if constexpr (std::is_same_v<T, SnapshotReceiptMsg>) {
          w.raw(as_span(m.receipt.encode()));
        } else if constexpr (std::is_same_v<T, ActiveCheckRequest>) {
          w.raw(m.metadata_block_hash);
          w.raw(m.challenge_nonce);
          w.u64be(m.intent_timestamp_ms);
          write_block(w, m.response_proposal);
        } else if constexpr (std::is_same_v<T, ActiveCheckResponse>) {
          write_pair(w, m.pair);
        } else if constexpr (std::is_same_v<T, RevocationAnnounce>) {
          write_block(w, m.revocation);
        } else if constexpr (std::is_same_v<T, KeyOwnershipChallenge>) {
          w.u64be(m.timestamp_ms);
          w.raw(m.nonce);
        } else if constexpr (std::is_same_v<T, KeyOwnershipResponse>) {
          w.raw(m.signature.bytes);
        } else if constexpr (std::is_same_v<T, InteractiveMove>) {
          w.u8(m.move_number);
          w.var32(as_span(m.payload));
        }
      },
      msg);
  return w.take();
}

WireMessage decode_body(MsgType type, ByteSpan body) {
  ByteReader r(body);
  WireMessage out;
  switch (type) {
    case MsgType::attestation_request: {
      AttestationRequest m;
      Bytes meta = r.var32();
      ByteReader mr(as_span(meta));
      m.metadata = ClaimMetadata::decode(mr);
      mr.expect_done();
      m.value = r.var32();
      m.witness_randomness = r.var32();
      if (r.u8() != 0) m.origin_agreement = read_block(r);
      out = std::move(m);
      break;
    }
    case MsgType::attestation_proposal:
      out = AttestationProposal{read_block(r)};
      break;
    case MsgType::attestation_agreement:
      out = AttestationAgreement{read_block(r)};
      break;
    case MsgType::verification_request: {
      VerificationRequest m;
      uint16_t len = r.u16be();
      m.name = r.str(len);
      m.predicate = proofs::Predicate::decode(r);
      m.verifier_nonce = r.arr<32>();
      uint8_t esc = r.u8();
      if (esc > 2) throw Error(Errc::malformed_encoding, "bad escalation");
      m.escalation = Escalation(esc);
      uint8_t mode = r.u8();
      if (mode > 1) throw Error(Errc::malformed_encoding, "bad proof mode");
      m.proof_mode = ProofMode(mode);
      out = std::move(m);
      break;
    }
    case MsgType::claim_presentation: {
      ClaimPresentation m;
      m.origin = read_pair(r);
      uint16_t n = r.u16be();
      for (uint16_t i = 0; i < n; ++i) m.attestations.push_back(read_pair(r));
      m.commitment = read_commitment(r);
      out = std::move(m);
      break;
    }
    case MsgType::proof_message: {
      ProofMessage m;
      uint8_t len = r.u8();
      m.proof.format = r.str(len);
      m.proof.transcript = r.var32();
      m.proof.bound_nonce = r.arr<32>();
      out = std::move(m);
      break;
    }
    case MsgType::intent_proposal:
      out = IntentProposal{read_block(r)};
      break;
    case MsgType::intent_agreement:
      out = IntentAgreement{read_block(r)};
      break;
    case MsgType::snapshot_receipt:
      out = SnapshotReceiptMsg{SnapshotReceipt::decode(r.raw(136))};
      break;
    case MsgType::active_check_request: {
      ActiveCheckRequest m;
      m.metadata_block_hash = r.arr<32>();
      m.challenge_nonce = r.arr<32>();
      m.intent_timestamp_ms = r.u64be();
      m.response_proposal = read_block(r);
      out = std::move(m);
      break;
    }
    case MsgType::active_check_response:
      out = ActiveCheckResponse{read_pair(r)};
      break;
    case MsgType::revocation_announce:
      out = RevocationAnnounce{read_block(r)};
      break;
    case MsgType::key_ownership_challenge: {
      KeyOwnershipChallenge m;
      m.timestamp_ms = r.u64be();
      m.nonce = r.arr<32>();
      out = std::move(m);
      break;
    }
    case MsgType::key_ownership_response: {
      KeyOwnershipResponse m;
      m.signature.bytes = r.arr<64>();
      out = std::move(m);
      break;
    }
    case MsgType::interactive_move: {
      InteractiveMove m;
      m.move_number = r.u8();
      m.payload = r.var32();
      out = std::move(m);
      break;
    }
    default:
      throw Error(Errc::protocol_violation, "unknown message type");
  }
  r.expect_done();
  return out;
}

}  // namespace

Bytes encode_message(const WireMessage& msg) {
  Bytes body = encode_body(msg);
  ByteWriter w;
  w.u32be(uint32_t(body.size()));
  w.u8(uint8_t(message_type(msg)));
  w.raw(as_span(body));
  return w.take();
}

WireMessage decode_message(ByteSpan frame) {
  try {
    ByteReader r(frame);
    uint32_t body_len = r.u32be();
    uint8_t type = r.u8();
    if (type < 1 || type > 15)
      throw Error(Errc::protocol_violation, "unknown message type code");
    ByteSpan body = r.raw(body_len);
    r.expect_done();
    return decode_body(MsgType(type), body);
  } catch (const Error& e) {
    if (e.code() == Errc::protocol_violation) throw;
    throw Error(Errc::protocol_violation, e.what());
  }
}

Bytes key_ownership_signing_bytes(uint64_t timestamp_ms, const Nonce32& nonce) {
  ByteWriter w;
  w.str("ssi-ledger/key-ownership.v1");
  w.u64be(timestamp_ms);
  w.raw(nonce);
  return w.take();
}

}  // namespace ssi::protocol
