// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "gho/bytes.hpp"

namespace gho::math {

/// Residues modulo a prime q. `Traits` supplies the integer type, a type wide
/// enough to hold a product of two residues, the modulus, and the fixed
/// big-endian byte width used on the wire.
template <class Traits>
class PrimeField {
 public:
  using Int = typename Traits::Int;
  using Wide = typename Traits::Wide;
  static constexpr std::size_t kBytes = Traits::kBytes;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t v) : v_(reduce_u64(v)) {}

  static const Int& modulus() { return Traits::modulus(); }
  static PrimeField zero() { return PrimeField(); }
  static PrimeField one() { return PrimeField(1); }

  /// Reduces an arbitrary integer into the field.
  static PrimeField from_int(const Int& v) {
    PrimeField r;
    r.v_ = v % modulus();
    return r;
  }

  const Int& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == Int(0); }

  friend PrimeField operator+(const PrimeField& a, const PrimeField& b) {
    PrimeField r;
    const Int gap = modulus() - b.v_;
    r.v_ = a.v_ >= gap ? Int(a.v_ - gap) : Int(a.v_ + b.v_);
    return r;
  }
  friend PrimeField operator-(const PrimeField& a, const PrimeField& b) {
    PrimeField r;
    r.v_ = a.v_ >= b.v_ ? Int(a.v_ - b.v_) : Int(modulus() - (b.v_ - a.v_));
    return r;
  }
  friend PrimeField operator-(const PrimeField& a) { return PrimeField() - a; }
  friend PrimeField operator*(const PrimeField& a, const PrimeField& b) {
    PrimeField r;
    r.v_ = static_cast<Int>((Wide(a.v_) * Wide(b.v_)) % Wide(modulus()));
    return r;
  }
  PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
  PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
  PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.v_ == b.v_; }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }
  friend bool operator<(const PrimeField& a, const PrimeField& b) { return a.v_ < b.v_; }

  PrimeField pow(Int e) const {
    PrimeField base = *this, acc = one();
    while (e != Int(0)) {
      if ((e & Int(1)) != Int(0)) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Multiplicative inverse by Fermat's little theorem.
  PrimeField inverse() const {
    if (is_zero()) throw Error(Errc::InvalidPolynomial, "inverse of zero scalar");
    return pow(modulus() - Int(2));
  }

  /// Fixed-width big-endian encoding of the residue.
  Bytes to_bytes() const {
    Bytes out(kBytes);
    Int v = v_;
    for (std::size_t i = kBytes; i-- > 0;) {
      out[i] = static_cast<std::uint8_t>(v & Int(0xff));
      v >>= 8;
    }
    return out;
  }

  /// Strict decoding: exactly kBytes, value below q.
  static PrimeField from_bytes(ByteView b) {
    if (b.size() != kBytes) throw Error(Errc::MalformedMessage, "scalar has wrong width");
    Int v = read_be(b);
    if (v >= modulus()) throw Error(Errc::MalformedMessage, "scalar not reduced");
    PrimeField r;
    r.v_ = v;
    return r;
  }

  /// Maps a digest of any length to a scalar by reduction mod q.
  static PrimeField from_digest(ByteView digest) {
    Wide acc(0);
    const Wide q(modulus());
    for (auto byte : digest) acc = ((acc << 8) | Wide(byte)) % q;
    return from_int(static_cast<Int>(acc));
  }

  /// Uniform residue in [0, q) by rejection sampling.
  template <class URBG>
  static PrimeField random(URBG& rng) {
    const Int& q = modulus();
    std::size_t bits = 0;
    for (Int t = q; t != Int(0); t >>= 1) ++bits;
    for (;;) {
      Int v(0);
      std::size_t filled = 0;
      while (filled < bits) {
        std::uint64_t word = rng();
        const std::size_t take = std::min<std::size_t>(64, bits - filled);
        if (take < 64) word &= (std::uint64_t{1} << take) - 1;
        v = (v << take) | Int(word);
        filled += take;
      }
      if (v < q) {
        PrimeField r;
        r.v_ = v;
        return r;
      }
    }
  }

  template <class URBG>
  static PrimeField random_nonzero(URBG& rng) {
    for (;;) {
      auto r = random(rng);
      if (!r.is_zero()) return r;
    }
  }

 private:
  static Int read_be(ByteView b) {
    Int v(0);
    for (auto byte : b) v = (v << 8) | Int(byte);
    return v;
  }
  static Int reduce_u64(std::uint64_t v) {
    return static_cast<Int>(Wide(v) % Wide(modulus()));
  }

  Int v_{0};
};

}  // namespace gho::math
