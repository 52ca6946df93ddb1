#include "proofs_internal.hpp"
#include "ssi/hash.hpp"

namespace ssi::proofs::detail {

namespace {
const std::string kId{kDisclose};
constexpr std::string_view kBindTag = "ssi-ledger/disclose.v1/bind";

// Binds a disclosure to one verifier nonce: the verifier recomputes this tag
// and a transcript replayed under any other nonce fails.
Hash32 bind_tag(const Commitment& commitment, ByteSpan salt, ByteSpan value,
                const Nonce32& nonce) {
  ByteWriter w;
  w.str(kBindTag);
  w.raw(as_span(commitment.bytes));
  w.raw(salt);
  w.u32be(uint32_t(value.size()));
  w.raw(value);
  w.raw(nonce);
  return sha256(as_span(w.bytes()));
}
}  // namespace

const std::string& DiscloseBackend::id() const { return kId; }

std::pair<Commitment, Witness> DiscloseBackend::commit(ByteSpan value,
                                                       Rng& rng) const {
  if (value.empty())
    throw Error(Errc::value_rejected_by_backend, "empty value");
  Bytes salt = rng.bytes(32);
  ByteWriter w;
  w.raw(as_span(salt));
  w.raw(value);
  Hash32 digest = sha256(as_span(w.bytes()));
  Commitment c{kId, Bytes(digest.begin(), digest.end())};
  Witness wit{kId, Bytes(value.begin(), value.end()), std::move(salt)};
  return {std::move(c), std::move(wit)};
}

Commitment DiscloseBackend::derive_commitment(ByteSpan value,
                                              const Witness& witness) const {
  if (witness.randomness.size() != 32)
    throw Error(Errc::malformed_encoding, "salt must be 32 bytes");
  ByteWriter w;
  w.raw(as_span(witness.randomness));
  w.raw(value);
  Hash32 digest = sha256(as_span(w.bytes()));
  return Commitment{kId, Bytes(digest.begin(), digest.end())};
}

Proof DiscloseBackend::prove(const Witness& witness,
                             const Commitment& commitment,
                             const Predicate& predicate,
                             const Nonce32& verifier_nonce, Rng&) const {
  if (predicate.kind != Predicate::Kind::equals)
    throw Error(Errc::unsupported_predicate, "disclose.v1 proves equality only");
  if (witness.value != predicate.candidate)
    throw Error(Errc::predicate_false_for_witness, "value != candidate");
  if (derive_commitment(as_span(witness.value), witness).bytes !=
      commitment.bytes)
    throw Error(Errc::predicate_false_for_witness,
                "witness does not open the commitment");

  ByteWriter w;
  w.raw(as_span(witness.randomness));
  w.u32be(uint32_t(witness.value.size()));
  w.raw(as_span(witness.value));
  w.raw(bind_tag(commitment, as_span(witness.randomness),
                 as_span(witness.value), verifier_nonce));
  return Proof{kId, w.take(), verifier_nonce};
}

bool DiscloseBackend::verify(const Commitment& commitment,
                             const Predicate& predicate, const Proof& proof,
                             const Nonce32& verifier_nonce) const {
  if (predicate.kind != Predicate::Kind::equals) return false;
  if (commitment.bytes.size() != 32) return false;

  ByteReader r(as_span(proof.transcript));
  Bytes salt, value;
  Hash32 bind;
  try {
    ByteSpan s = r.raw(32);
    salt.assign(s.begin(), s.end());
    value = r.var32();
    bind = r.arr<32>();
    r.expect_done();
  } catch (const Error&) {
    throw Error(Errc::malformed_transcript, "disclose.v1 transcript");
  }

  ByteWriter w;
  w.raw(as_span(salt));
  w.raw(as_span(value));
  Hash32 recomputed = sha256(as_span(w.bytes()));
  if (!std::equal(recomputed.begin(), recomputed.end(),
                  commitment.bytes.begin()))
    return false;
  if (value != predicate.candidate) return false;
  return bind ==
         bind_tag(commitment, as_span(salt), as_span(value), verifier_nonce);
}

}  // namespace ssi::proofs::detail
