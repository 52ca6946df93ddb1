#pragma once

#include <stdexcept>
#include <string>

namespace ssi {

enum class Errc {
  // identity
  invalid_seed,
  malformed_key,
  malformed_signature,
  invalid_attribute_name,
  // claims
  unknown_proof_format,
  invalid_validity_term,
  invalid_claim_name,
  // proofs
  value_rejected_by_backend,
  predicate_false_for_witness,
  unsupported_predicate,
  invalid_predicate,
  malformed_transcript,
  interactive_unsupported,
  out_of_order_message,
  session_already_finished,
  // chain
  stale_tail,
  bad_proposal_signature,
  link_mismatch,
  payload_rejected,
  malformed_encoding,
  storage_corruption,
  // protocol
  attestor_rejected,
  owner_declined,
  timeout,
  protocol_violation,
  owner_refused_intent,
  attestor_offline,
  not_the_attestor,
  unknown_claim,
  // audit
  empty_chain,
  invalid_evidence,
  // sim / cli
  script_error,
  unknown_backend,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  explicit Error(Errc code) : Error(code, "") {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ssi
