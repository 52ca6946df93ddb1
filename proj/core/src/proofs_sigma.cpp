#include "proofs_internal.hpp"
#include "ssi/hash.hpp"

namespace ssi::proofs::detail {

using group::Element;
using group::Scalar;

group::Scalar read_scalar(ByteReader& r) {
  ByteSpan be = r.raw(32);
  auto s = Scalar::from_be_bytes(be);
  if (!s) throw Error(Errc::malformed_transcript, "non-canonical scalar");
  return *s;
}

group::Element read_element(ByteReader& r) {
  ByteSpan b = r.raw(32);
  auto e = Element::decode(b);
  if (!e) throw Error(Errc::malformed_transcript, "invalid group element");
  return *e;
}

namespace {
const std::string kId{kExactSigma};
constexpr std::string_view kChallengeTag = "ssi-ledger/exact-sigma.v1/challenge";

// value enters the commitment as SHA-256(value) reduced into the scalar field
Scalar message_scalar(ByteSpan value) {
  return Scalar::reduce_be(sha256(value));
}

struct SigmaProverState final : Backend::ProverState {
  Scalar blinding;   // witness randomness r
  Scalar w;          // Schnorr nonce
};
}  // namespace

const std::string& ExactSigmaBackend::id() const { return kId; }

std::pair<Commitment, Witness> ExactSigmaBackend::commit(ByteSpan value,
                                                         Rng& rng) const {
  if (value.empty())
    throw Error(Errc::value_rejected_by_backend, "empty value");
  Scalar m = message_scalar(value);
  Scalar r = Scalar::random(rng);
  Element c = group::pedersen_commit(m, r);
  Commitment out{kId, Bytes(c.enc.begin(), c.enc.end())};
  auto r_be = r.to_be_bytes();
  Witness wit{kId, Bytes(value.begin(), value.end()),
              Bytes(r_be.begin(), r_be.end())};
  return {std::move(out), std::move(wit)};
}

Commitment ExactSigmaBackend::derive_commitment(ByteSpan value,
                                                const Witness& witness) const {
  auto r = Scalar::from_be_bytes(as_span(witness.randomness));
  if (!r) throw Error(Errc::malformed_encoding, "witness blinding scalar");
  Element c = group::pedersen_commit(message_scalar(value), *r);
  return Commitment{kId, Bytes(c.enc.begin(), c.enc.end())};
}

Hash32 ExactSigmaBackend::challenge_digest(const Commitment& commitment,
                                           const Predicate& predicate,
                                           ByteSpan first_move,
                                           const Nonce32& nonce) const {
  // e = SHA-256(tag || C || m || t || verifier_nonce) reduced mod the order
  ByteWriter w;
  w.str(kChallengeTag);
  w.raw(as_span(commitment.bytes));
  w.raw(message_scalar(as_span(predicate.candidate)).to_be_bytes());
  w.raw(first_move);
  w.raw(nonce);
  return sha256(as_span(w.bytes()));
}

std::pair<Bytes, std::shared_ptr<Backend::ProverState>>
ExactSigmaBackend::prove_commit_phase(const Witness& witness,
                                      const Commitment& commitment,
                                      const Predicate& predicate,
                                      Rng& rng) const {
  if (predicate.kind != Predicate::Kind::equals)
    throw Error(Errc::unsupported_predicate,
                "exact-sigma.v1 proves equality only");
  if (witness.value != predicate.candidate)
    throw Error(Errc::predicate_false_for_witness, "value != candidate");
  if (derive_commitment(as_span(witness.value), witness).bytes !=
      commitment.bytes)
    throw Error(Errc::predicate_false_for_witness,
                "witness does not open the commitment");

  auto st = std::make_shared<SigmaProverState>();
  st->blinding = *Scalar::from_be_bytes(as_span(witness.randomness));
  st->w = Scalar::random(rng);
  Element t = Element::pedersen_h().mul(st->w);
  return {Bytes(t.enc.begin(), t.enc.end()), st};
}

Bytes ExactSigmaBackend::prove_response_phase(ProverState& state,
                                              const Nonce32& challenge) const {
  auto& st = static_cast<SigmaProverState&>(state);
  Scalar e = Scalar::reduce_be(challenge);
  Scalar z = st.w.add(e.mul(st.blinding));
  auto be = z.to_be_bytes();
  return Bytes(be.begin(), be.end());
}

bool ExactSigmaBackend::verify_with_challenge(const Commitment& commitment,
                                              const Predicate& predicate,
                                              ByteSpan first_move,
                                              ByteSpan response,
                                              const Nonce32& challenge) const {
  if (predicate.kind != Predicate::Kind::equals) return false;
  auto c = Element::decode(as_span(commitment.bytes));
  if (!c) return false;

  ByteReader tr(first_move);
  Element t = read_element(tr);
  tr.expect_done();
  ByteReader rr(response);
  Scalar z = read_scalar(rr);
  rr.expect_done();

  // statement: C - m*G = r*H; accept iff z*H == t + e*(C - m*G)
  Scalar m = message_scalar(as_span(predicate.candidate));
  Element y = c->sub(Element::base_mul(m));
  Scalar e = Scalar::reduce_be(challenge);
  Element lhs = Element::pedersen_h().mul(z);
  Element rhs = t.add(y.mul(e));
  return lhs == rhs;
}

Proof ExactSigmaBackend::prove(const Witness& witness,
                               const Commitment& commitment,
                               const Predicate& predicate,
                               const Nonce32& verifier_nonce, Rng& rng) const {
  auto [first_move, st] =
      prove_commit_phase(witness, commitment, predicate, rng);
  Hash32 e = challenge_digest(commitment, predicate, as_span(first_move),
                              verifier_nonce);
  Bytes response = prove_response_phase(*st, e);
  ByteWriter w;
  w.raw(as_span(first_move));
  w.raw(as_span(response));
  return Proof{kId, w.take(), verifier_nonce};
}

bool ExactSigmaBackend::verify(const Commitment& commitment,
                               const Predicate& predicate, const Proof& proof,
                               const Nonce32& verifier_nonce) const {
  if (proof.transcript.size() != 64)
    throw Error(Errc::malformed_transcript, "exact-sigma.v1 transcript length");
  ByteSpan first_move = as_span(proof.transcript).subspan(0, 32);
  ByteSpan response = as_span(proof.transcript).subspan(32, 32);
  if (predicate.kind != Predicate::Kind::equals) return false;
  Hash32 e = challenge_digest(commitment, predicate, first_move, verifier_nonce);
  return verify_with_challenge(commitment, predicate, first_move, response, e);
}

}  // namespace ssi::proofs::detail
