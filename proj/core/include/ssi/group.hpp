#pragma once

#include <optional>

#include "ssi/bytes.hpp"
#include "ssi/hash.hpp"
#include "ssi/rng.hpp"

namespace ssi::group {

// Scalars mod the ristretto255 group order. Stored in libsodium's
// little-endian layout; the canonical wire form is 32 bytes big-endian.
struct Scalar {
  std::array<uint8_t, 32> le{};

  static Scalar zero() { return Scalar{}; }
  static Scalar one();
  static Scalar from_u64(uint64_t v);
  // uniform scalar from 64 rng bytes reduced mod the order
  static Scalar random(Rng& rng);
  // digest interpreted as a 256-bit big-endian integer, reduced mod the order
  static Scalar reduce_be(const Hash32& digest);
  // canonical wire decode; rejects values >= group order
  static std::optional<Scalar> from_be_bytes(ByteSpan be32);

  std::array<uint8_t, 32> to_be_bytes() const;

  bool is_zero() const { return is_zero_bytes(); }
  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar mul(const Scalar& o) const;
  Scalar negate() const;

  bool operator==(const Scalar&) const = default;

 private:
  bool is_zero_bytes() const {
    for (uint8_t b : le)
      if (b) return false;
    return true;
  }
};

// Ristretto255 group element held in its canonical 32-byte encoding.
// The identity element encodes as 32 zero bytes.
struct Element {
  std::array<uint8_t, 32> enc{};

  static Element identity() { return Element{}; }
  static Element base();          // the group's standard generator
  static Element pedersen_h();    // hash-to-group("ssi-ledger/h.v1")
  static Element base_mul(const Scalar& s);
  static Element from_uniform(const std::array<uint8_t, 64>& u);
  // validates the encoding (canonical ristretto point)
  static std::optional<Element> decode(ByteSpan b);

  bool is_identity() const {
    for (uint8_t b : enc)
      if (b) return false;
    return true;
  }

  Element add(const Element& o) const;
  Element sub(const Element& o) const;
  Element mul(const Scalar& s) const;
  Element dbl() const { return add(*this); }

  bool operator==(const Element&) const = default;
};

// C = v*G + r*H
Element pedersen_commit(const Scalar& v, const Scalar& r);

}  // namespace ssi::group
