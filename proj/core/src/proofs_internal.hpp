#pragma once

// Backend implementations behind the proof registry. Not installed.

#include "ssi/group.hpp"
#include "ssi/proofs.hpp"

namespace ssi::proofs {

struct Backend::ProverState {
  virtual ~ProverState() = default;
};

namespace detail {

// Plain disclosure behind a salted hash; reveals the value to the verifier.
class DiscloseBackend final : public Backend {
 public:
  const std::string& id() const override;
  std::pair<Commitment, Witness> commit(ByteSpan value, Rng& rng) const override;
  Commitment derive_commitment(ByteSpan value,
                               const Witness& witness) const override;
  Proof prove(const Witness& witness, const Commitment& commitment,
              const Predicate& predicate, const Nonce32& verifier_nonce,
              Rng& rng) const override;
  bool verify(const Commitment& commitment, const Predicate& predicate,
              const Proof& proof, const Nonce32& verifier_nonce) const override;
};

// Pedersen commitment to SHA-256(value); Schnorr proof that the commitment
// opens to exactly the verifier's candidate value.
class ExactSigmaBackend final : public Backend {
 public:
  const std::string& id() const override;
  std::pair<Commitment, Witness> commit(ByteSpan value, Rng& rng) const override;
  Commitment derive_commitment(ByteSpan value,
                               const Witness& witness) const override;
  Proof prove(const Witness& witness, const Commitment& commitment,
              const Predicate& predicate, const Nonce32& verifier_nonce,
              Rng& rng) const override;
  bool verify(const Commitment& commitment, const Predicate& predicate,
              const Proof& proof, const Nonce32& verifier_nonce) const override;

  bool supports_interactive() const override { return true; }
  std::pair<Bytes, std::shared_ptr<ProverState>> prove_commit_phase(
      const Witness& witness, const Commitment& commitment,
      const Predicate& predicate, Rng& rng) const override;
  Bytes prove_response_phase(ProverState& state,
                             const Nonce32& challenge) const override;
  bool verify_with_challenge(const Commitment& commitment,
                             const Predicate& predicate, ByteSpan first_move,
                             ByteSpan response,
                             const Nonce32& challenge) const override;
  Hash32 challenge_digest(const Commitment& commitment,
                          const Predicate& predicate, ByteSpan first_move,
                          const Nonce32& verifier_nonce) const override;
};

// Pedersen commitment to an unsigned 64-bit value; range membership shown by
// bit decomposition of v-low and high-v, one two-branch OR-proof per bit and
// one aggregation proof per side.
class RangeBitsBackend final : public Backend {
 public:
  const std::string& id() const override;
  std::pair<Commitment, Witness> commit(ByteSpan value, Rng& rng) const override;
  Commitment derive_commitment(ByteSpan value,
                               const Witness& witness) const override;
  Proof prove(const Witness& witness, const Commitment& commitment,
              const Predicate& predicate, const Nonce32& verifier_nonce,
              Rng& rng) const override;
  bool verify(const Commitment& commitment, const Predicate& predicate,
              const Proof& proof, const Nonce32& verifier_nonce) const override;

  bool supports_interactive() const override { return true; }
  std::pair<Bytes, std::shared_ptr<ProverState>> prove_commit_phase(
      const Witness& witness, const Commitment& commitment,
      const Predicate& predicate, Rng& rng) const override;
  Bytes prove_response_phase(ProverState& state,
                             const Nonce32& challenge) const override;
  bool verify_with_challenge(const Commitment& commitment,
                             const Predicate& predicate, ByteSpan first_move,
                             ByteSpan response,
                             const Nonce32& challenge) const override;
  Hash32 challenge_digest(const Commitment& commitment,
                          const Predicate& predicate, ByteSpan first_move,
                          const Nonce32& verifier_nonce) const override;

  // smallest k with 2^k > high - low
  static unsigned bit_count(uint64_t low, uint64_t high);
  static size_t first_move_size(unsigned k) { return (3 * size_t(k) + 1) * 64; }
  static size_t response_size(unsigned k) { return (3 * size_t(k) + 1) * 64; }
};

// scalar wire helpers (32 bytes big-endian, canonical)
inline void put_scalar(ByteWriter& w, const group::Scalar& s) {
  w.raw(s.to_be_bytes());
}
group::Scalar read_scalar(ByteReader& r);      // malformed_transcript
group::Element read_element(ByteReader& r);    // malformed_transcript

}  // namespace detail
}  // namespace ssi::proofs
