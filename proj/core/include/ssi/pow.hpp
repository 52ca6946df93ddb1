#pragma once

#include <optional>
#include <vector>

#include "ssi/bytes.hpp"
#include "ssi/rng.hpp"

namespace ssi::chain {

// Block on the single-process proof-of-work global chain. The payload is
// opaque to mining; the ledger layer stores the same protocol content here
// that the personalized backend keeps in per-identity chains.
struct PowBlock {
  uint64_t height = 0;  // starts at 1
  Hash32 previous_hash{};
  uint64_t timestamp_ms = 0;
  uint8_t difficulty_bits = 0;
  uint64_t nonce = 0;
  Bytes payload;

  // height(8 BE) || previous_hash(32) || timestamp(8 BE) || difficulty(1) ||
  // nonce(8 BE) || payload_len(4 BE) || payload
  Bytes encode() const;
  static PowBlock decode(ByteSpan bytes);
  Hash32 header_hash() const;  // SHA-256 of the encoding

  bool operator==(const PowBlock&) const = default;
};

bool has_leading_zero_bits(const Hash32& h, unsigned bits);

// header hash meets the block's stated difficulty
bool check_pow(const PowBlock& block);

inline constexpr unsigned kMaxPowDifficulty = 24;

// Single-process global chain; mining iterates nonces from a seeded start,
// so a given (seed, payload sequence) always mines the same blocks.
class PowChain {
 public:
  PowChain(uint8_t difficulty_bits, uint64_t nonce_seed);

  const PowBlock& append(Bytes payload, uint64_t now_ms);
  const std::vector<PowBlock>& blocks() const { return blocks_; }
  std::optional<PowBlock> head() const;
  uint8_t difficulty() const { return difficulty_; }

  // full-chain validation: linkage, heights, difficulty
  std::vector<std::string> validate() const;

 private:
  uint8_t difficulty_;
  DeterministicRng nonce_rng_;
  std::vector<PowBlock> blocks_;
};

// mines a block for the payload on top of the chain state
const PowBlock& pow_append(PowChain& chain, Bytes payload, uint64_t now_ms);

// Two valid distinct blocks at the same height.
struct PowForkProof {
  PowBlock block_a;
  PowBlock block_b;
};

std::optional<PowForkProof> pow_detect_fork(const PowBlock& a,
                                            const PowBlock& b);

}  // namespace ssi::chain
