#include "ssi/proofs.hpp"

#include "proofs_internal.hpp"

namespace ssi::proofs {

Predicate Predicate::equals(Bytes candidate) {
  if (candidate.empty())
    throw Error(Errc::invalid_predicate, "equals candidate is empty");
  Predicate p;
  p.kind = Kind::equals;
  p.candidate = std::move(candidate);
  return p;
}

Predicate Predicate::in_range(uint64_t low, uint64_t high) {
  if (low > high) throw Error(Errc::invalid_predicate, "low > high");
  Predicate p;
  p.kind = Kind::in_range;
  p.low = low;
  p.high = high;
  return p;
}

Bytes Predicate::encode() const {
  ByteWriter w;
  w.u8(uint8_t(kind));
  if (kind == Kind::equals) {
    w.var32(as_span(candidate));
  } else {
    w.u64be(low);
    w.u64be(high);
  }
  return w.take();
}

Predicate Predicate::decode(ByteReader& r) {
  uint8_t k = r.u8();
  if (k == uint8_t(Kind::equals)) {
    return equals(r.var32());
  }
  if (k == uint8_t(Kind::in_range)) {
    uint64_t lo = r.u64be();
    uint64_t hi = r.u64be();
    return in_range(lo, hi);
  }
  throw Error(Errc::malformed_encoding, "unknown predicate kind");
}

// ---- Backend interactive defaults ------------------------------------------

std::pair<Bytes, std::shared_ptr<Backend::ProverState>>
Backend::prove_commit_phase(const Witness&, const Commitment&, const Predicate&,
                            Rng&) const {
  throw Error(Errc::interactive_unsupported, id());
}

Bytes Backend::prove_response_phase(ProverState&, const Nonce32&) const {
  throw Error(Errc::interactive_unsupported, id());
}

bool Backend::verify_with_challenge(const Commitment&, const Predicate&,
                                    ByteSpan, ByteSpan, const Nonce32&) const {
  throw Error(Errc::interactive_unsupported, id());
}

Hash32 Backend::challenge_digest(const Commitment&, const Predicate&, ByteSpan,
                                 const Nonce32&) const {
  throw Error(Errc::interactive_unsupported, id());
}

// ---- Registry ---------------------------------------------------------------

void Registry::add(std::shared_ptr<const Backend> backend) {
  backends_[backend->id()] = std::move(backend);
}

const Backend& Registry::get(std::string_view format) const {
  auto it = backends_.find(format);
  if (it == backends_.end())
    throw Error(Errc::unknown_proof_format, std::string(format));
  return *it->second;
}

bool Registry::contains(std::string_view format) const {
  return backends_.find(format) != backends_.end();
}

std::vector<std::string> Registry::formats() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : backends_) out.push_back(name);
  return out;
}

const Registry& Registry::standard() {
  static const Registry reg = [] {
    Registry r;
    r.add(std::make_shared<detail::DiscloseBackend>());
    r.add(std::make_shared<detail::ExactSigmaBackend>());
    r.add(std::make_shared<detail::RangeBitsBackend>());
    return r;
  }();
  return reg;
}

// ---- Free functions ----------------------------------------------------------

std::pair<Commitment, Witness> commit(const Registry& reg,
                                      std::string_view format, ByteSpan value,
                                      Rng& rng) {
  return reg.get(format).commit(value, rng);
}

bool attestor_check(const Registry& reg, std::string_view format,
                    ByteSpan value, const Commitment& commitment,
                    const Witness& witness) {
  const Backend& b = reg.get(format);
  try {
    Commitment recomputed = b.derive_commitment(value, witness);
    return recomputed.bytes == commitment.bytes &&
           commitment.format == b.id();
  } catch (const Error&) {
    return false;  // any mismatch or undecodable witness material
  }
}

Proof prove(const Registry& reg, const Witness& witness,
            const Commitment& commitment, const Predicate& predicate,
            const Nonce32& verifier_nonce, Rng& rng) {
  return reg.get(witness.format)
      .prove(witness, commitment, predicate, verifier_nonce, rng);
}

bool verify_proof(const Registry& reg, const Commitment& commitment,
                  const Predicate& predicate, const Proof& proof,
                  const Nonce32& verifier_nonce) {
  if (proof.format != commitment.format) return false;
  return reg.get(proof.format)
      .verify(commitment, predicate, proof, verifier_nonce);
}

// ---- Interactive sessions -----------------------------------------------------

ProverSession::ProverSession(const Backend& backend, Witness witness,
                             Commitment commitment, Predicate predicate,
                             Rng& rng)
    : backend_(backend),
      witness_(std::move(witness)),
      commitment_(std::move(commitment)),
      predicate_(std::move(predicate)),
      rng_(rng) {
  if (!backend.supports_interactive())
    throw Error(Errc::interactive_unsupported, backend.id());
}

Bytes ProverSession::first_move() {
  if (state_ == State::finished)
    throw Error(Errc::session_already_finished, "prover session");
  if (state_ != State::fresh)
    throw Error(Errc::out_of_order_message, "first_move already sent");
  auto [move, st] =
      backend_.prove_commit_phase(witness_, commitment_, predicate_, rng_);
  prover_state_ = std::move(st);
  state_ = State::committed;
  return move;
}

Bytes ProverSession::respond(const Nonce32& challenge) {
  if (state_ == State::finished)
    throw Error(Errc::session_already_finished, "prover session");
  if (state_ != State::committed)
    throw Error(Errc::out_of_order_message, "challenge before first move");
  Bytes response = backend_.prove_response_phase(*prover_state_, challenge);
  state_ = State::finished;
  return response;
}

VerifierSession::VerifierSession(const Backend& backend, Commitment commitment,
                                 Predicate predicate, Rng& rng)
    : backend_(backend),
      commitment_(std::move(commitment)),
      predicate_(std::move(predicate)),
      rng_(rng) {
  if (!backend.supports_interactive())
    throw Error(Errc::interactive_unsupported, backend.id());
}

void VerifierSession::receive_first_move(ByteSpan first_move) {
  if (state_ == State::finished)
    throw Error(Errc::session_already_finished, "verifier session");
  if (state_ != State::await_first_move)
    throw Error(Errc::out_of_order_message, "unexpected first move");
  first_move_.assign(first_move.begin(), first_move.end());
  state_ = State::await_challenge;
}

Nonce32 VerifierSession::issue_challenge() {
  if (state_ == State::finished)
    throw Error(Errc::session_already_finished, "verifier session");
  if (state_ != State::await_challenge)
    throw Error(Errc::out_of_order_message, "challenge out of order");
  challenge_ = rng_.nonce();
  state_ = State::await_response;
  return challenge_;
}

bool VerifierSession::receive_response(ByteSpan response) {
  if (state_ == State::finished)
    throw Error(Errc::session_already_finished, "verifier session");
  if (state_ != State::await_response)
    throw Error(Errc::out_of_order_message, "response out of order");
  state_ = State::finished;
  return backend_.verify_with_challenge(commitment_, predicate_,
                                        as_span(first_move_), response,
                                        challenge_);
}

}  // namespace ssi::proofs
