#pragma once

#include <filesystem>
#include <map>
#include <mutex>

#include "ssi/chain.hpp"

namespace ssi::chain {

enum class AppendResult : uint8_t {
  ok,
  // A different block already holds this (key, sequence). The newcomer is
  // retained in the conflict set: fork evidence must survive.
  duplicate_sequence,
};

// Append-only block storage, one logical chain per public key. Safe for
// concurrent use; appends to one chain are serialized.
class BlockStore {
 public:
  virtual ~BlockStore() = default;

  virtual AppendResult append(const HalfBlock& block) = 0;
  virtual std::optional<HalfBlock> get(const PublicKey& key,
                                       uint64_t sequence) const = 0;
  virtual std::optional<HalfBlock> tail(const PublicKey& key) const = 0;
  virtual std::vector<HalfBlock> blocks(const PublicKey& key) const = 0;
  virtual std::vector<PublicKey> keys() const = 0;
  // retained same-(key, seq) conflicts, in arrival order
  virtual std::vector<HalfBlock> conflicts() const = 0;

  // proposal goes to the proposer's chain, agreement to the owner's
  AppendResult append_pair(const BlockPair& pair);
};

class MemoryStore final : public BlockStore {
 public:
  AppendResult append(const HalfBlock& block) override;
  std::optional<HalfBlock> get(const PublicKey& key,
                               uint64_t sequence) const override;
  std::optional<HalfBlock> tail(const PublicKey& key) const override;
  std::vector<HalfBlock> blocks(const PublicKey& key) const override;
  std::vector<PublicKey> keys() const override;
  std::vector<HalfBlock> conflicts() const override;

 private:
  mutable std::mutex mu_;
  std::map<PublicKey, std::map<uint64_t, HalfBlock>> chains_;
  std::vector<HalfBlock> conflicts_;
};

// Directory layout: one append-only log per chain plus an offset index.
//   chains/<hex public key>.log   frames of [u32 BE length || block bytes]
//   chains/<hex public key>.idx   u32 BE count, then per record
//                                 u64 BE sequence || u64 BE offset || u8 flags
//                                 (flags bit0: conflict)
// The index is a cache; a missing or stale index is rebuilt from the log.
class FileStore final : public BlockStore {
 public:
  explicit FileStore(const std::filesystem::path& dir);

  AppendResult append(const HalfBlock& block) override;
  std::optional<HalfBlock> get(const PublicKey& key,
                               uint64_t sequence) const override;
  std::optional<HalfBlock> tail(const PublicKey& key) const override;
  std::vector<HalfBlock> blocks(const PublicKey& key) const override;
  std::vector<PublicKey> keys() const override;
  std::vector<HalfBlock> conflicts() const override;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  struct IndexEntry {
    uint64_t sequence;
    uint64_t offset;  // frame start within the log file
    bool conflict;
  };
  void load();
  void persist(const PublicKey& key, const HalfBlock& block, bool conflict);
  void rewrite_index(const PublicKey& key);

  std::filesystem::path dir_;
  mutable std::mutex mu_;
  std::map<PublicKey, std::map<uint64_t, HalfBlock>> chains_;
  std::vector<HalfBlock> conflicts_;
  std::map<PublicKey, std::vector<IndexEntry>> index_;
  std::map<PublicKey, uint64_t> log_size_;
};

}  // namespace ssi::chain
