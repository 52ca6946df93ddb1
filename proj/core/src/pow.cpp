#include "ssi/pow.hpp"

#include "ssi/errors.hpp"
#include "ssi/hash.hpp"

namespace ssi::chain {

Bytes PowBlock::encode() const {
  ByteWriter w;
  w.u64be(height);
  w.raw(previous_hash);
  w.u64be(timestamp_ms);
  w.u8(difficulty_bits);
  w.u64be(nonce);
  w.u32be(uint32_t(payload.size()));
  w.raw(as_span(payload));
  return w.take();
}

PowBlock PowBlock::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  PowBlock b;
  b.height = r.u64be();
  b.previous_hash = r.arr<32>();
  b.timestamp_ms = r.u64be();
  b.difficulty_bits = r.u8();
  b.nonce = r.u64be();
  b.payload = r.var32();
  r.expect_done();
  return b;
}

Hash32 PowBlock::header_hash() const { return sha256(as_span(encode())); }

bool has_leading_zero_bits(const Hash32& h, unsigned bits) {
  unsigned full = bits / 8;
  unsigned rem = bits % 8;
  for (unsigned i = 0; i < full; ++i)
    if (h[i] != 0) return false;
  if (rem != 0 && full < h.size())
    if (h[full] >> (8 - rem) != 0) return false;
  return true;
}

bool check_pow(const PowBlock& block) {
  return has_leading_zero_bits(block.header_hash(), block.difficulty_bits);
}

PowChain::PowChain(uint8_t difficulty_bits, uint64_t nonce_seed)
    : difficulty_(difficulty_bits),
      nonce_rng_(nonce_seed, "pow-nonce-search") {
  if (difficulty_bits > kMaxPowDifficulty)
    throw Error(Errc::unknown_backend, "difficulty above desk scale");
}

const PowBlock& PowChain::append(Bytes payload, uint64_t now_ms) {
  PowBlock b;
  b.height = blocks_.empty() ? 1 : blocks_.back().height + 1;
  b.previous_hash = blocks_.empty() ? Hash32{} : blocks_.back().header_hash();
  b.timestamp_ms = now_ms;
  b.difficulty_bits = difficulty_;
  b.payload = std::move(payload);
  b.nonce = nonce_rng_.u64();
  while (!check_pow(b)) ++b.nonce;
  blocks_.push_back(std::move(b));
  return blocks_.back();
}

std::optional<PowBlock> PowChain::head() const {
  if (blocks_.empty()) return std::nullopt;
  return blocks_.back();
}

std::vector<std::string> PowChain::validate() const {
  std::vector<std::string> out;
  Hash32 prev{};
  uint64_t height = 1;
  for (const PowBlock& b : blocks_) {
    if (b.height != height)
      out.push_back("height gap at " + std::to_string(height));
    if (b.previous_hash != prev)
      out.push_back("previous hash mismatch at height " +
                    std::to_string(b.height));
    if (!check_pow(b))
      out.push_back("difficulty not met at height " + std::to_string(b.height));
    prev = b.header_hash();
    height = b.height + 1;
  }
  return out;
}

const PowBlock& pow_append(PowChain& chain, Bytes payload, uint64_t now_ms) {
  return chain.append(std::move(payload), now_ms);
}

std::optional<PowForkProof> pow_detect_fork(const PowBlock& a,
                                            const PowBlock& b) {
  if (a.height != b.height) return std::nullopt;
  Hash32 ha = a.header_hash();
  Hash32 hb = b.header_hash();
  if (ha == hb) return std::nullopt;
  if (!check_pow(a) || !check_pow(b)) return std::nullopt;
  if (hb < ha) return PowForkProof{b, a};
  return PowForkProof{a, b};
}

}  // namespace ssi::chain
