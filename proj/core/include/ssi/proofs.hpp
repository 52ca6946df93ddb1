#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ssi/bytes.hpp"
#include "ssi/errors.hpp"
#include "ssi/rng.hpp"

namespace ssi::proofs {

// Registered format ids.
inline constexpr std::string_view kDisclose = "disclose.v1";
inline constexpr std::string_view kExactSigma = "exact-sigma.v1";
inline constexpr std::string_view kRangeBits = "range-bits.v1";

// What a verifier asks to be shown about a committed value.
struct Predicate {
  enum class Kind : uint8_t { equals = 1, in_range = 2 };

  Kind kind;
  Bytes candidate;        // equals: the exact value the verifier supplies
  uint64_t low = 0;       // in_range bounds, inclusive
  uint64_t high = 0;

  static Predicate equals(Bytes candidate);            // candidate nonempty
  static Predicate in_range(uint64_t low, uint64_t high);  // low <= high

  Bytes encode() const;
  static Predicate decode(ByteReader& r);
};

// Public commitment to a value; the stable object a claim's proof link
// references. disclose.v1 carries a 32-byte digest, the sigma backends a
// group element.
struct Commitment {
  std::string format;
  Bytes bytes;

  bool operator==(const Commitment&) const = default;
};

// Owner-held secret opening of a commitment. Never leaves the owner except
// over the attestation channel.
struct Witness {
  std::string format;
  Bytes value;
  Bytes randomness;
};

// Predicate proof bound to one verifier nonce.
struct Proof {
  std::string format;
  Bytes transcript;
  Nonce32 bound_nonce{};
};

class ProverSession;
class VerifierSession;

// One proof construction behind the registry. Stateless; all randomness is
// explicit.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual const std::string& id() const = 0;

  // throws value_rejected_by_backend
  virtual std::pair<Commitment, Witness> commit(ByteSpan value,
                                                Rng& rng) const = 0;
  // recomputes the commitment from an opening (attestor-side check)
  virtual Commitment derive_commitment(ByteSpan value,
                                       const Witness& witness) const = 0;
  // throws predicate_false_for_witness / unsupported_predicate
  virtual Proof prove(const Witness& witness, const Commitment& commitment,
                      const Predicate& predicate, const Nonce32& verifier_nonce,
                      Rng& rng) const = 0;
  // deterministic; throws malformed_transcript on undecodable transcripts
  virtual bool verify(const Commitment& commitment, const Predicate& predicate,
                      const Proof& proof,
                      const Nonce32& verifier_nonce) const = 0;

  virtual bool supports_interactive() const { return false; }

  // Interactive three-move hooks. first_move holds every prover message that
  // precedes the challenge; response everything after. The non-interactive
  // transcript is first_move || response with the challenge derived by
  // Fiat-Shamir instead of received.
  struct ProverState;
  virtual std::pair<Bytes, std::shared_ptr<ProverState>> prove_commit_phase(
      const Witness& witness, const Commitment& commitment,
      const Predicate& predicate, Rng& rng) const;
  virtual Bytes prove_response_phase(ProverState& state,
                                     const Nonce32& challenge) const;
  virtual bool verify_with_challenge(const Commitment& commitment,
                                     const Predicate& predicate,
                                     ByteSpan first_move, ByteSpan response,
                                     const Nonce32& challenge) const;
  // Fiat-Shamir challenge digest over (statement, first_move, nonce);
  // exposed so interactive and non-interactive runs can be compared.
  virtual Hash32 challenge_digest(const Commitment& commitment,
                                  const Predicate& predicate,
                                  ByteSpan first_move,
                                  const Nonce32& verifier_nonce) const;
};

// Maps format ids to backends. A format id resolves to exactly one backend.
class Registry {
 public:
  void add(std::shared_ptr<const Backend> backend);
  const Backend& get(std::string_view format) const;  // unknown_proof_format
  bool contains(std::string_view format) const;
  std::vector<std::string> formats() const;

  // disclose.v1, exact-sigma.v1, range-bits.v1
  static const Registry& standard();

 private:
  std::map<std::string, std::shared_ptr<const Backend>, std::less<>> backends_;
};

// Free functions mirroring the module surface.
std::pair<Commitment, Witness> commit(const Registry& reg,
                                      std::string_view format, ByteSpan value,
                                      Rng& rng);
bool attestor_check(const Registry& reg, std::string_view format,
                    ByteSpan value, const Commitment& commitment,
                    const Witness& witness);
Proof prove(const Registry& reg, const Witness& witness,
            const Commitment& commitment, const Predicate& predicate,
            const Nonce32& verifier_nonce, Rng& rng);
bool verify_proof(const Registry& reg, const Commitment& commitment,
                  const Predicate& predicate, const Proof& proof,
                  const Nonce32& verifier_nonce);

// Single-use three-move session, prover side.
class ProverSession {
 public:
  ProverSession(const Backend& backend, Witness witness, Commitment commitment,
                Predicate predicate, Rng& rng);

  // move 1: prover commitment material
  Bytes first_move();
  // move 3: response to the verifier challenge
  Bytes respond(const Nonce32& challenge);

 private:
  enum class State { fresh, committed, finished } state_ = State::fresh;
  const Backend& backend_;
  Witness witness_;
  Commitment commitment_;
  Predicate predicate_;
  Rng& rng_;
  std::shared_ptr<Backend::ProverState> prover_state_;
};

// Single-use three-move session, verifier side.
class VerifierSession {
 public:
  VerifierSession(const Backend& backend, Commitment commitment,
                  Predicate predicate, Rng& rng);

  void receive_first_move(ByteSpan first_move);
  // move 2: fresh random 32-byte challenge
  Nonce32 issue_challenge();
  // accept decision; matches verify_proof with the challenge substituted
  bool receive_response(ByteSpan response);

 private:
  enum class State {
    await_first_move,
    await_challenge,
    await_response,
    finished
  } state_ = State::await_first_move;
  const Backend& backend_;
  Commitment commitment_;
  Predicate predicate_;
  Rng& rng_;
  Bytes first_move_;
  Nonce32 challenge_{};
};

}  // namespace ssi::proofs
