#include "ssi/claims.hpp"

#include "ssi/errors.hpp"
#include "ssi/hash.hpp"

namespace ssi {

namespace {
constexpr size_t kMaxNameBytes = 1024;
constexpr size_t kMaxFormatBytes = 255;

bool format_id_ok(const std::string& f) {
  if (f.empty() || f.size() > kMaxFormatBytes) return false;
  for (char c : f)
    if (uint8_t(c) < 0x21 || uint8_t(c) > 0x7e) return false;  // printable ASCII
  return true;
}
}  // namespace

void validate_metadata(const ClaimMetadata& m) {
  if (m.name.empty() || m.name.size() > kMaxNameBytes)
    throw Error(Errc::invalid_claim_name,
                "name must be 1..1024 bytes of UTF-8");
  if (!format_id_ok(m.proof_format))
    throw Error(Errc::unknown_proof_format, "bad format identifier");
  if (m.validity_term_ms != 0 && m.validity_term_ms <= m.timestamp_ms)
    throw Error(Errc::invalid_validity_term,
                "validity term not after creation time");
}

Bytes ClaimMetadata::encode() const {
  ByteWriter w;
  w.u16be(uint16_t(name.size()));
  w.str(name);
  w.u64be(timestamp_ms);
  w.u64be(validity_term_ms);
  w.u8(uint8_t(proof_format.size()));
  w.str(proof_format);
  w.raw(proof_link);
  return w.take();
}

ClaimMetadata ClaimMetadata::decode(ByteReader& r) {
  ClaimMetadata m;
  uint16_t name_len = r.u16be();
  m.name = r.str(name_len);
  m.timestamp_ms = r.u64be();
  m.validity_term_ms = r.u64be();
  uint8_t fmt_len = r.u8();
  m.proof_format = r.str(fmt_len);
  m.proof_link = r.arr<32>();
  validate_metadata(m);
  return m;
}

Hash32 metadata_hash(const ClaimMetadata& metadata) {
  return sha256(as_span(metadata.encode()));
}

Validity claim_validity(const ClaimMetadata& metadata, uint64_t now_ms) {
  if (metadata.validity_term_ms != 0 && now_ms > metadata.validity_term_ms)
    return Validity::expired;
  return Validity::valid;
}

std::pair<Claim, proofs::Witness> create_claim(
    const KeyPair& owner, const proofs::Registry& registry,
    const std::string& name, ByteSpan value, uint64_t validity_term_ms,
    const std::string& proof_format, uint64_t now_ms, Rng& rng) {
  if (!registry.contains(proof_format))
    throw Error(Errc::unknown_proof_format, proof_format);
  if (value.empty())
    throw Error(Errc::value_rejected_by_backend, "empty value");
  if (validity_term_ms != 0 && validity_term_ms <= now_ms)
    throw Error(Errc::invalid_validity_term, "term must be 0 or after now");

  auto [commitment, witness] = registry.get(proof_format).commit(value, rng);

  Claim claim;
  claim.metadata.name = name;
  claim.metadata.timestamp_ms = now_ms;
  claim.metadata.validity_term_ms = validity_term_ms;
  claim.metadata.proof_format = proof_format;
  claim.metadata.proof_link = sha256(as_span(commitment.bytes));
  claim.owner_public_key = owner.public_key();
  claim.commitment = std::move(commitment);
  validate_metadata(claim.metadata);
  return {std::move(claim), std::move(witness)};
}

}  // namespace ssi
