#include "ssi/store.hpp"

#include <fstream>

#include "ssi/errors.hpp"

namespace ssi::chain {

namespace fs = std::filesystem;

AppendResult BlockStore::append_pair(const BlockPair& pair) {
  AppendResult a = append(pair.proposal);
  AppendResult b = append(pair.agreement);
  return (a == AppendResult::duplicate_sequence ||
          b == AppendResult::duplicate_sequence)
             ? AppendResult::duplicate_sequence
             : AppendResult::ok;
}

namespace {
// ok: slot free or identical block already present (idempotent)
// conflict: different block at the same sequence
enum class SlotState { fresh, identical, conflict };

SlotState slot_state(const std::map<uint64_t, HalfBlock>& chain,
                     const HalfBlock& block) {
  auto it = chain.find(block.sequence_number);
  if (it == chain.end()) return SlotState::fresh;
  return block_hash(it->second) == block_hash(block) ? SlotState::identical
                                                     : SlotState::conflict;
}
}  // namespace

AppendResult MemoryStore::append(const HalfBlock& block) {
  std::lock_guard lock(mu_);
  auto& chain = chains_[block.public_key];
  switch (slot_state(chain, block)) {
    case SlotState::fresh:
      chain.emplace(block.sequence_number, block);
      return AppendResult::ok;
    case SlotState::identical:
      return AppendResult::ok;
    case SlotState::conflict:
      conflicts_.push_back(block);
      return AppendResult::duplicate_sequence;
  }
  return AppendResult::ok;
}

std::optional<HalfBlock> MemoryStore::get(const PublicKey& key,
                                          uint64_t sequence) const {
  std::lock_guard lock(mu_);
  auto it = chains_.find(key);
  if (it == chains_.end()) return std::nullopt;
  auto bit = it->second.find(sequence);
  if (bit == it->second.end()) return std::nullopt;
  return bit->second;
}

std::optional<HalfBlock> MemoryStore::tail(const PublicKey& key) const {
  std::lock_guard lock(mu_);
  auto it = chains_.find(key);
  if (it == chains_.end() || it->second.empty()) return std::nullopt;
  return it->second.rbegin()->second;
}

std::vector<HalfBlock> MemoryStore::blocks(const PublicKey& key) const {
  std::lock_guard lock(mu_);
  std::vector<HalfBlock> out;
  auto it = chains_.find(key);
  if (it == chains_.end()) return out;
  for (const auto& [_, b] : it->second) out.push_back(b);
  return out;
}

std::vector<PublicKey> MemoryStore::keys() const {
  std::lock_guard lock(mu_);
  std::vector<PublicKey> out;
  for (const auto& [k, _] : chains_) out.push_back(k);
  return out;
}

std::vector<HalfBlock> MemoryStore::conflicts() const {
  std::lock_guard lock(mu_);
  return conflicts_;
}

// ---- FileStore ---------------------------------------------------------------

FileStore::FileStore(const fs::path& dir) : dir_(dir) {
  fs::create_directories(dir_ / "chains");
  load();
}

namespace {
fs::path log_path(const fs::path& dir, const PublicKey& key) {
  return dir / "chains" / (to_hex(as_span(key)) + ".log");
}
fs::path idx_path(const fs::path& dir, const PublicKey& key) {
  return dir / "chains" / (to_hex(as_span(key)) + ".idx");
}

Bytes read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot open " + p.string());
  return Bytes(std::istreambuf_iterator<char>(f),
               std::istreambuf_iterator<char>());
}
}  // namespace

void FileStore::load() {
  if (!fs::exists(dir_ / "chains")) return;
  for (const auto& entry : fs::directory_iterator(dir_ / "chains")) {
    if (entry.path().extension() != ".log") continue;
    std::string hex = entry.path().stem().string();
    Bytes key_bytes;
    try {
      key_bytes = from_hex(hex);
    } catch (const Error&) {
      continue;  // foreign file
    }
    if (key_bytes.size() != 32) continue;
    PublicKey key;
    std::copy(key_bytes.begin(), key_bytes.end(), key.begin());

    Bytes data = read_file(entry.path());
    ByteReader r(as_span(data));
    auto& chain = chains_[key];
    auto& idx = index_[key];
    while (!r.done()) {
      uint64_t offset = data.size() - r.remaining();
      Bytes frame;
      try {
        frame = r.var32();
      } catch (const Error&) {
        throw Error(Errc::storage_corruption,
                    "truncated frame in " + entry.path().string());
      }
      HalfBlock block;
      try {
        block = HalfBlock::decode(as_span(frame));
      } catch (const Error&) {
        throw Error(Errc::storage_corruption,
                    "undecodable block in " + entry.path().string());
      }
      bool conflict = slot_state(chain, block) == SlotState::conflict;
      if (conflict) {
        conflicts_.push_back(block);
      } else {
        chain.emplace(block.sequence_number, block);
      }
      idx.push_back({block.sequence_number, offset, conflict});
    }
    log_size_[key] = data.size();
  }
}

void FileStore::persist(const PublicKey& key, const HalfBlock& block,
                        bool conflict) {
  uint64_t offset = log_size_[key];
  ByteWriter w;
  w.var32(as_span(block.encode()));
  {
    std::ofstream f(log_path(dir_, key), std::ios::binary | std::ios::app);
    if (!f) throw Error(Errc::io_error, "cannot append to chain log");
    f.write(reinterpret_cast<const char*>(w.bytes().data()),
            std::streamsize(w.size()));
    f.flush();
  }
  log_size_[key] = offset + w.size();
  index_[key].push_back({block.sequence_number, offset, conflict});
  rewrite_index(key);
}

void FileStore::rewrite_index(const PublicKey& key) {
  auto it = index_.find(key);
  if (it == index_.end()) return;
  ByteWriter w;
  w.u32be(uint32_t(it->second.size()));
  for (const IndexEntry& e : it->second) {
    w.u64be(e.sequence);
    w.u64be(e.offset);
    w.u8(e.conflict ? 1 : 0);
  }
  std::ofstream f(idx_path(dir_, key), std::ios::binary | std::ios::trunc);
  if (f)
    f.write(reinterpret_cast<const char*>(w.bytes().data()),
            std::streamsize(w.size()));
}

AppendResult FileStore::append(const HalfBlock& block) {
  std::lock_guard lock(mu_);
  auto& chain = chains_[block.public_key];
  switch (slot_state(chain, block)) {
    case SlotState::fresh:
      chain.emplace(block.sequence_number, block);
      persist(block.public_key, block, false);
      return AppendResult::ok;
    case SlotState::identical:
      return AppendResult::ok;
    case SlotState::conflict:
      conflicts_.push_back(block);
      persist(block.public_key, block, true);
      return AppendResult::duplicate_sequence;
  }
  return AppendResult::ok;
}

std::optional<HalfBlock> FileStore::get(const PublicKey& key,
                                        uint64_t sequence) const {
  std::lock_guard lock(mu_);
  auto it = chains_.find(key);
  if (it == chains_.end()) return std::nullopt;
  auto bit = it->second.find(sequence);
  if (bit == it->second.end()) return std::nullopt;
  return bit->second;
}

std::optional<HalfBlock> FileStore::tail(const PublicKey& key) const {
  std::lock_guard lock(mu_);
  auto it = chains_.find(key);
  if (it == chains_.end() || it->second.empty()) return std::nullopt;
  return it->second.rbegin()->second;
}

std::vector<HalfBlock> FileStore::blocks(const PublicKey& key) const {
  std::lock_guard lock(mu_);
  std::vector<HalfBlock> out;
  auto it = chains_.find(key);
  if (it == chains_.end()) return out;
  for (const auto& [_, b] : it->second) out.push_back(b);
  return out;
}

std::vector<PublicKey> FileStore::keys() const {
  std::lock_guard lock(mu_);
  std::vector<PublicKey> out;
  for (const auto& [k, _] : chains_) out.push_back(k);
  return out;
}

std::vector<HalfBlock> FileStore::conflicts() const {
  std::lock_guard lock(mu_);
  return conflicts_;
}

}  // namespace ssi::chain
