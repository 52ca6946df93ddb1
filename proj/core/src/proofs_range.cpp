#include <bit>

#include "proofs_internal.hpp"
#include "ssi/hash.hpp"

namespace ssi::proofs::detail {

using group::Element;
using group::Scalar;

namespace {
const std::string kId{kRangeBits};
constexpr std::string_view kChallengeTag = "ssi-ledger/range-bits.v1/challenge";

// One bit commitment C = bit*G + r*H with a two-branch OR proof that the
// committed bit is 0 or 1. The false branch is simulated with a random
// sub-challenge; the sub-challenges of both branches sum to the global one.
struct BitProver {
  int bit;
  Scalar r;        // bit blinding
  Scalar w;        // Schnorr nonce of the true branch
  Scalar e_sim;    // simulated sub-challenge of the false branch
  Scalar z_sim;    // simulated response of the false branch
  Element c;       // bit commitment
  Element t0, t1;  // branch commitments
};

struct SideProver {
  std::vector<BitProver> bits;
  Scalar delta;   // aggregation witness
  Scalar w_agg;   // aggregation Schnorr nonce
  Element t_agg;
};

struct RangeProverState final : Backend::ProverState {
  unsigned k = 0;
  SideProver lo, hi;
};

struct BitTranscript {
  Element c, t0, t1;
  Scalar e0, z0, z1;
};

struct SideTranscript {
  std::vector<BitTranscript> bits;
  Element t_agg;
  Scalar z_agg;
};

uint64_t value_u64(ByteSpan value) {
  if (value.size() != 8)
    throw Error(Errc::value_rejected_by_backend,
                "range-bits.v1 takes an 8-byte big-endian integer");
  return be64_decode(value);
}

SideProver build_side(uint64_t d, unsigned k, const Scalar& delta_base,
                      Rng& rng) {
  SideProver side;
  Scalar r_sum = Scalar::zero();
  const Element h = Element::pedersen_h();
  const Element g = Element::base();
  for (unsigned i = 0; i < k; ++i) {
    BitProver bp;
    bp.bit = int((d >> i) & 1);
    bp.r = Scalar::random(rng);
    bp.c = group::pedersen_commit(Scalar::from_u64(uint64_t(bp.bit)), bp.r);
    bp.w = Scalar::random(rng);
    bp.e_sim = Scalar::random(rng);
    bp.z_sim = Scalar::random(rng);
    Element t_true = h.mul(bp.w);
    // simulate the false branch: t_false = z*H - e*Y_false
    Element y_false = bp.bit == 0 ? bp.c.sub(g) : bp.c;
    Element t_false = h.mul(bp.z_sim).sub(y_false.mul(bp.e_sim));
    bp.t0 = bp.bit == 0 ? t_true : t_false;
    bp.t1 = bp.bit == 0 ? t_false : t_true;
    r_sum = r_sum.add(bp.r.mul(Scalar::from_u64(uint64_t(1) << i)));
    side.bits.push_back(bp);
  }
  side.delta = delta_base.sub(r_sum);
  side.w_agg = Scalar::random(rng);
  side.t_agg = Element::pedersen_h().mul(side.w_agg);
  return side;
}

void write_side_first_move(ByteWriter& w, const SideProver& side) {
  for (const auto& b : side.bits) w.raw(b.c.enc);
  for (const auto& b : side.bits) {
    w.raw(b.t0.enc);
    w.raw(b.t1.enc);
  }
  w.raw(side.t_agg.enc);
}

void write_side_response(ByteWriter& w, const SideProver& side,
                         const Scalar& e) {
  for (const auto& b : side.bits) {
    Scalar e_true = e.sub(b.e_sim);
    Scalar z_true = b.w.add(e_true.mul(b.r));
    Scalar e0 = b.bit == 0 ? e_true : b.e_sim;
    Scalar z0 = b.bit == 0 ? z_true : b.z_sim;
    Scalar z1 = b.bit == 0 ? b.z_sim : z_true;
    put_scalar(w, e0);
    put_scalar(w, z0);
    put_scalar(w, z1);
  }
  put_scalar(w, side.w_agg.add(e.mul(side.delta)));
}

SideTranscript read_side(ByteReader& fm, ByteReader& resp, unsigned k) {
  SideTranscript side;
  side.bits.resize(k);
  for (unsigned i = 0; i < k; ++i) side.bits[i].c = read_element(fm);
  for (unsigned i = 0; i < k; ++i) {
    side.bits[i].t0 = read_element(fm);
    side.bits[i].t1 = read_element(fm);
  }
  side.t_agg = read_element(fm);
  for (unsigned i = 0; i < k; ++i) {
    side.bits[i].e0 = read_scalar(resp);
    side.bits[i].z0 = read_scalar(resp);
    side.bits[i].z1 = read_scalar(resp);
  }
  side.z_agg = read_scalar(resp);
  return side;
}

// anchor: C - low*G for the lower side, high*G - C for the upper side
bool verify_side(const SideTranscript& side, const Element& anchor,
                 const Scalar& e) {
  const Element h = Element::pedersen_h();
  const Element g = Element::base();
  for (const auto& b : side.bits) {
    Scalar e1 = e.sub(b.e0);
    if (h.mul(b.z0) != b.t0.add(b.c.mul(b.e0))) return false;
    if (h.mul(b.z1) != b.t1.add(b.c.sub(g).mul(e1))) return false;
  }
  // sum = 2^0*C_0 + ... + 2^(k-1)*C_(k-1), evaluated Horner style
  Element sum = Element::identity();
  for (size_t i = side.bits.size(); i-- > 0;)
    sum = sum.dbl().add(side.bits[i].c);
  Element y = anchor.sub(sum);
  return h.mul(side.z_agg) == side.t_agg.add(y.mul(e));
}
}  // namespace

unsigned RangeBitsBackend::bit_count(uint64_t low, uint64_t high) {
  return unsigned(std::bit_width(high - low));
}

const std::string& RangeBitsBackend::id() const { return kId; }

std::pair<Commitment, Witness> RangeBitsBackend::commit(ByteSpan value,
                                                        Rng& rng) const {
  uint64_t v = value_u64(value);
  Scalar r = Scalar::random(rng);
  Element c = group::pedersen_commit(Scalar::from_u64(v), r);
  Commitment out{kId, Bytes(c.enc.begin(), c.enc.end())};
  auto r_be = r.to_be_bytes();
  Witness wit{kId, Bytes(value.begin(), value.end()),
              Bytes(r_be.begin(), r_be.end())};
  return {std::move(out), std::move(wit)};
}

Commitment RangeBitsBackend::derive_commitment(ByteSpan value,
                                               const Witness& witness) const {
  uint64_t v = value_u64(value);
  auto r = Scalar::from_be_bytes(as_span(witness.randomness));
  if (!r) throw Error(Errc::malformed_encoding, "witness blinding scalar");
  Element c = group::pedersen_commit(Scalar::from_u64(v), *r);
  return Commitment{kId, Bytes(c.enc.begin(), c.enc.end())};
}

Hash32 RangeBitsBackend::challenge_digest(const Commitment& commitment,
                                          const Predicate& predicate,
                                          ByteSpan first_move,
                                          const Nonce32& nonce) const {
  ByteWriter w;
  w.str(kChallengeTag);
  w.raw(as_span(commitment.bytes));
  w.u64be(predicate.low);
  w.u64be(predicate.high);
  w.raw(first_move);
  w.raw(nonce);
  return sha256(as_span(w.bytes()));
}

std::pair<Bytes, std::shared_ptr<Backend::ProverState>>
RangeBitsBackend::prove_commit_phase(const Witness& witness,
                                     const Commitment& commitment,
                                     const Predicate& predicate,
                                     Rng& rng) const {
  if (predicate.kind != Predicate::Kind::in_range)
    throw Error(Errc::unsupported_predicate,
                "range-bits.v1 proves range membership only");
  uint64_t v = value_u64(as_span(witness.value));
  if (v < predicate.low || v > predicate.high)
    throw Error(Errc::predicate_false_for_witness, "value outside range");
  if (derive_commitment(as_span(witness.value), witness).bytes !=
      commitment.bytes)
    throw Error(Errc::predicate_false_for_witness,
                "witness does not open the commitment");

  auto r = *Scalar::from_be_bytes(as_span(witness.randomness));
  auto st = std::make_shared<RangeProverState>();
  st->k = bit_count(predicate.low, predicate.high);
  st->lo = build_side(v - predicate.low, st->k, r, rng);
  st->hi = build_side(predicate.high - v, st->k, r.negate(), rng);

  ByteWriter w;
  write_side_first_move(w, st->lo);
  write_side_first_move(w, st->hi);
  return {w.take(), st};
}

Bytes RangeBitsBackend::prove_response_phase(ProverState& state,
                                             const Nonce32& challenge) const {
  auto& st = static_cast<RangeProverState&>(state);
  Scalar e = Scalar::reduce_be(challenge);
  ByteWriter w;
  write_side_response(w, st.lo, e);
  write_side_response(w, st.hi, e);
  return w.take();
}

bool RangeBitsBackend::verify_with_challenge(const Commitment& commitment,
                                             const Predicate& predicate,
                                             ByteSpan first_move,
                                             ByteSpan response,
                                             const Nonce32& challenge) const {
  if (predicate.kind != Predicate::Kind::in_range) return false;
  unsigned k = bit_count(predicate.low, predicate.high);
  if (first_move.size() != first_move_size(k) ||
      response.size() != response_size(k))
    throw Error(Errc::malformed_transcript, "range-bits.v1 transcript length");
  auto c = Element::decode(as_span(commitment.bytes));
  if (!c) return false;

  ByteReader fm(first_move);
  ByteReader resp(response);
  SideTranscript lo = read_side(fm, resp, k);
  SideTranscript hi = read_side(fm, resp, k);
  fm.expect_done();
  resp.expect_done();

  Scalar e = Scalar::reduce_be(challenge);
  Element anchor_lo = c->sub(Element::base_mul(Scalar::from_u64(predicate.low)));
  Element anchor_hi = Element::base_mul(Scalar::from_u64(predicate.high)).sub(*c);
  return verify_side(lo, anchor_lo, e) && verify_side(hi, anchor_hi, e);
}

Proof RangeBitsBackend::prove(const Witness& witness,
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

bool RangeBitsBackend::verify(const Commitment& commitment,
                              const Predicate& predicate, const Proof& proof,
                              const Nonce32& verifier_nonce) const {
  if (predicate.kind != Predicate::Kind::in_range) return false;
  unsigned k = bit_count(predicate.low, predicate.high);
  size_t fm_size = first_move_size(k);
  if (proof.transcript.size() != fm_size + response_size(k))
    throw Error(Errc::malformed_transcript, "range-bits.v1 transcript length");
  ByteSpan fm = as_span(proof.transcript).subspan(0, fm_size);
  ByteSpan resp = as_span(proof.transcript).subspan(fm_size);
  Hash32 e = challenge_digest(commitment, predicate, fm, verifier_nonce);
  return verify_with_challenge(commitment, predicate, fm, resp, e);
}

}  // namespace ssi::proofs::detail
