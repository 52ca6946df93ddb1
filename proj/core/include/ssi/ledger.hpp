#pragma once

#include <memory>

#include "ssi/pow.hpp"
#include "ssi/store.hpp"

namespace ssi::chain {

// Chain backend behind the protocol flows. Both backends persist the same
// double-signed block pairs; they differ in how entries are anchored.
class Ledger {
 public:
  virtual ~Ledger() = default;

  virtual AppendResult append_pair(const BlockPair& pair) = 0;
  virtual AppendResult append_self(const HalfBlock& block) = 0;
  virtual std::optional<HalfBlock> tail(const PublicKey& key) const = 0;
  virtual const BlockStore& store() const = 0;
  virtual std::vector<PowBlock> pow_blocks() const { return {}; }
  virtual std::string_view backend_name() const = 0;
};

// Personalized chains: the pairs themselves are the ledger.
class TrustchainLedger final : public Ledger {
 public:
  explicit TrustchainLedger(BlockStore& store) : store_(store) {}

  AppendResult append_pair(const BlockPair& pair) override {
    return store_.append_pair(pair);
  }
  AppendResult append_self(const HalfBlock& block) override {
    return store_.append(block);
  }
  std::optional<HalfBlock> tail(const PublicKey& key) const override {
    return store_.tail(key);
  }
  const BlockStore& store() const override { return store_; }
  std::string_view backend_name() const override { return "trustchain"; }

 private:
  BlockStore& store_;
};

// Global proof-of-work chain: every completed entry is additionally mined
// into one shared chain. Per-identity retrieval still runs over the stored
// half-blocks, so protocol semantics are unchanged.
class PowLedger final : public Ledger {
 public:
  PowLedger(BlockStore& store, uint8_t difficulty_bits, uint64_t nonce_seed)
      : store_(store), global_(difficulty_bits, nonce_seed) {}

  AppendResult append_pair(const BlockPair& pair) override;
  AppendResult append_self(const HalfBlock& block) override;
  std::optional<HalfBlock> tail(const PublicKey& key) const override {
    return store_.tail(key);
  }
  const BlockStore& store() const override { return store_; }
  std::vector<PowBlock> pow_blocks() const override { return global_.blocks(); }
  std::string_view backend_name() const override { return "pow"; }

  const PowChain& global_chain() const { return global_; }

 private:
  BlockStore& store_;
  PowChain global_;
};

// Mined-payload framing for the pow backend: kind(1)=pair: both halves,
// kind(2)=self: one half-block.
Bytes encode_pow_entry(const BlockPair& pair);
Bytes encode_pow_entry(const HalfBlock& block);

}  // namespace ssi::chain
