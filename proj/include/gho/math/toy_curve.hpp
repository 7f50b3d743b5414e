// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "gho/math/group.hpp"
#include "gho/math/prime_field.hpp"

namespace gho::math {

// y^2 = x^3 - 3x + 39 over F_65479. The curve has 65521 points, a prime, so
// every non-identity point generates the whole group. Small enough to
// enumerate, which the exhaustive tests rely on.

struct ToyScalarTraits {
  using Int = std::uint32_t;
  using Wide = std::uint64_t;
  static constexpr std::size_t kBytes = 2;
  static const Int& modulus() {
    static const Int q = 65521;
    return q;
  }
};

using ToyScalar = PrimeField<ToyScalarTraits>;

class ToyPoint {
 public:
  static constexpr std::uint32_t kP = 65479;
  static constexpr std::uint32_t kA = kP - 3;
  static constexpr std::uint32_t kB = 39;

  ToyPoint() = default;  // identity

  /// Affine point; throws MalformedMessage if (x, y) is not on the curve.
  ToyPoint(std::uint32_t x, std::uint32_t y) : x_(x), y_(y), infinity_(false) {
    if (x >= kP || y >= kP || !on_curve(x, y)) throw Error(Errc::MalformedMessage, "point not on toy curve");
  }

  bool is_identity() const noexcept { return infinity_; }
  std::uint32_t x() const noexcept { return x_; }
  std::uint32_t y() const noexcept { return y_; }

  static bool on_curve(std::uint32_t x, std::uint32_t y) {
    return mulm(y, y) == rhs(x);
  }

  friend bool operator==(const ToyPoint& a, const ToyPoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  friend ToyPoint operator-(const ToyPoint& a) {
    if (a.infinity_ || a.y_ == 0) return a;
    return make(a.x_, kP - a.y_);
  }

  friend ToyPoint operator+(const ToyPoint& a, const ToyPoint& b) {
    if (a.infinity_) return b;
    if (b.infinity_) return a;
    std::uint32_t lambda;
    if (a.x_ == b.x_) {
      if (a.y_ != b.y_ || a.y_ == 0) return ToyPoint();
      // tangent: (3x^2 + a) / 2y
      lambda = mulm(addm(mulm(3, mulm(a.x_, a.x_)), kA), inv(addm(a.y_, a.y_)));
    } else {
      lambda = mulm(subm(b.y_, a.y_), inv(subm(b.x_, a.x_)));
    }
    const std::uint32_t x3 = subm(subm(mulm(lambda, lambda), a.x_), b.x_);
    const std::uint32_t y3 = subm(mulm(lambda, subm(a.x_, x3)), a.y_);
    return make(x3, y3);
  }

  ToyPoint& operator+=(const ToyPoint& o) { return *this = *this + o; }
  ToyPoint& operator-=(const ToyPoint& o) { return *this = *this + (-o); }
  friend ToyPoint operator-(const ToyPoint& a, const ToyPoint& b) { return a + (-b); }

  /// Double-and-add on a raw integer; used for order checks where k = q.
  static ToyPoint mul_int(std::uint64_t k, const ToyPoint& p) {
    ToyPoint acc, base = p;
    while (k != 0) {
      if (k & 1) acc += base;
      base += base;
      k >>= 1;
    }
    return acc;
  }

  friend ToyPoint operator*(const ToyScalar& k, const ToyPoint& p) { return mul_int(k.value(), p); }

  /// Square root mod p (p = 3 mod 4); nullopt-like via bool.
  static bool sqrt(std::uint32_t v, std::uint32_t& root) {
    root = powm(v, (kP + 1) / 4);
    return mulm(root, root) == v;
  }

  static std::uint32_t rhs(std::uint32_t x) { return addm(addm(mulm(mulm(x, x), x), mulm(kA, x)), kB); }

 private:
  static ToyPoint make(std::uint32_t x, std::uint32_t y) {
    ToyPoint p;
    p.x_ = x;
    p.y_ = y;
    p.infinity_ = false;
    return p;
  }

  static std::uint32_t addm(std::uint32_t a, std::uint32_t b) { return (a + b) % kP; }
  static std::uint32_t subm(std::uint32_t a, std::uint32_t b) { return (a + kP - b) % kP; }
  static std::uint32_t mulm(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint32_t>((a * b) % kP);
  }
  static std::uint32_t powm(std::uint64_t b, std::uint32_t e) {
    std::uint64_t acc = 1;
    b %= kP;
    while (e) {
      if (e & 1) acc = acc * b % kP;
      b = b * b % kP;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }
  static std::uint32_t inv(std::uint32_t a) { return powm(a, kP - 2); }

  std::uint32_t x_ = 0;
  std::uint32_t y_ = 0;
  bool infinity_ = true;
};

struct ToyCurve {
  using Scalar = ToyScalar;
  using Point = ToyPoint;

  static constexpr std::string_view kId = "toy-p65479";
  static constexpr std::size_t kScalarBytes = ToyScalar::kBytes;
  static constexpr std::size_t kPointBytes = 3;

  static Point generator() { return Point(1, 24958); }
  static Point identity() { return Point(); }
  static Point mul_base(const Scalar& k) { return k * generator(); }

  /// [02|03] || x (2 bytes); identity is all zeros.
  static Bytes encode_point(const Point& p) {
    if (p.is_identity()) return Bytes(kPointBytes, 0);
    return Bytes{static_cast<std::uint8_t>(0x02 | (p.y() & 1)), static_cast<std::uint8_t>(p.x() >> 8),
                 static_cast<std::uint8_t>(p.x() & 0xff)};
  }

  static Point decode_point(ByteView b) {
    if (b.size() != kPointBytes) throw Error(Errc::MalformedMessage, "toy point has wrong width");
    const std::uint32_t x = (std::uint32_t{b[1]} << 8) | b[2];
    if (b[0] == 0x00) {
      if (x != 0) throw Error(Errc::MalformedMessage, "bad identity encoding");
      return Point();
    }
    if ((b[0] != 0x02 && b[0] != 0x03) || x >= Point::kP)
      throw Error(Errc::MalformedMessage, "bad toy point prefix");
    std::uint32_t y = 0;
    if (!Point::sqrt(Point::rhs(x), y)) throw Error(Errc::MalformedMessage, "x not on toy curve");
    if ((y & 1) != (b[0] & 1u)) y = (Point::kP - y) % Point::kP;
    return Point(x, y);
  }

  static GroupDescriptor descriptor() {
    return GroupDescriptor{std::string(kId), Bytes{0xff, 0xf1}, encode_point(generator()), kScalarBytes,
                           kPointBytes};
  }
};

}  // namespace gho::math
