#include "ssi/ledger.hpp"

namespace ssi::chain {

Bytes encode_pow_entry(const BlockPair& pair) {
  ByteWriter w;
  w.u8(1);
  w.var32(as_span(pair.proposal.encode()));
  w.var32(as_span(pair.agreement.encode()));
  return w.take();
}

Bytes encode_pow_entry(const HalfBlock& block) {
  ByteWriter w;
  w.u8(2);
  w.var32(as_span(block.encode()));
  return w.take();
}

AppendResult PowLedger::append_pair(const BlockPair& pair) {
  AppendResult r = store_.append_pair(pair);
  global_.append(encode_pow_entry(pair), pair.agreement.timestamp_ms);
  return r;
}

AppendResult PowLedger::append_self(const HalfBlock& block) {
  AppendResult r = store_.append(block);
  global_.append(encode_pow_entry(block), block.timestamp_ms);
  return r;
}

}  // namespace ssi::chain
