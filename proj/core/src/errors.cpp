#include "ssi/errors.hpp"

namespace ssi {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_seed: return "InvalidSeed";
    case Errc::malformed_key: return "MalformedKey";
    case Errc::malformed_signature: return "MalformedSignature";
    case Errc::invalid_attribute_name: return "InvalidAttributeName";
    case Errc::unknown_proof_format: return "UnknownProofFormat";
    case Errc::invalid_validity_term: return "InvalidValidityTerm";
    case Errc::invalid_claim_name: return "InvalidClaimName";
    case Errc::value_rejected_by_backend: return "ValueRejectedByBackend";
    case Errc::predicate_false_for_witness: return "PredicateFalseForWitness";
    case Errc::unsupported_predicate: return "UnsupportedPredicate";
    case Errc::invalid_predicate: return "InvalidPredicate";
    case Errc::malformed_transcript: return "MalformedTranscript";
    case Errc::interactive_unsupported: return "InteractiveUnsupported";
    case Errc::out_of_order_message: return "OutOfOrderMessage";
    case Errc::session_already_finished: return "SessionAlreadyFinished";
    case Errc::stale_tail: return "StaleTail";
    case Errc::bad_proposal_signature: return "BadProposalSignature";
    case Errc::link_mismatch: return "LinkMismatch";
    case Errc::payload_rejected: return "PayloadRejected";
    case Errc::malformed_encoding: return "MalformedEncoding";
    case Errc::storage_corruption: return "StorageCorruption";
    case Errc::attestor_rejected: return "AttestorRejected";
    case Errc::owner_declined: return "OwnerDeclined";
    case Errc::timeout: return "Timeout";
    case Errc::protocol_violation: return "ProtocolViolation";
    case Errc::owner_refused_intent: return "OwnerRefusedIntent";
    case Errc::attestor_offline: return "AttestorOffline";
    case Errc::not_the_attestor: return "NotTheAttestor";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::empty_chain: return "EmptyChain";
    case Errc::invalid_evidence: return "InvalidEvidence";
    case Errc::script_error: return "ScriptError";
    case Errc::unknown_backend: return "UnknownBackend";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace ssi
