// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>

#include "gho/math/group.hpp"
#include "gho/math/prime_field.hpp"

namespace gho::math {

// NIST P-256. Point arithmetic is delegated to OpenSSL; the scalar field is
// PrimeField over 256-bit integers.

namespace mp = boost::multiprecision;
using U256 = mp::number<mp::cpp_int_backend<256, 256, mp::unsigned_magnitude, mp::unchecked, void>>;
using U512 = mp::number<mp::cpp_int_backend<512, 512, mp::unsigned_magnitude, mp::unchecked, void>>;

struct P256ScalarTraits {
  using Int = U256;
  using Wide = U512;
  static constexpr std::size_t kBytes = 32;
  static const Int& modulus() {
    static const Int n("0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551");
    return n;
  }
};

using P256Scalar = PrimeField<P256ScalarTraits>;

namespace detail {

struct EcPointFree {
  void operator()(EC_POINT* p) const noexcept { EC_POINT_free(p); }
};
struct BnFree {
  void operator()(BIGNUM* b) const noexcept { BN_free(b); }
};
struct BnCtxFree {
  void operator()(BN_CTX* c) const noexcept { BN_CTX_free(c); }
};

inline const EC_GROUP* p256_group() {
  static const EC_GROUP* g = [] {
    EC_GROUP* grp = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    if (grp == nullptr) throw Error(Errc::CryptoBackend, "P-256 unavailable");
    return grp;
  }();
  return g;
}

inline BN_CTX* bn_ctx() {
  thread_local std::unique_ptr<BN_CTX, BnCtxFree> ctx(BN_CTX_new());
  if (!ctx) throw Error(Errc::CryptoBackend, "BN_CTX_new");
  return ctx.get();
}

inline std::unique_ptr<BIGNUM, BnFree> to_bn(const P256Scalar& k) {
  const Bytes b = k.to_bytes();
  std::unique_ptr<BIGNUM, BnFree> bn(BN_bin2bn(b.data(), static_cast<int>(b.size()), nullptr));
  if (!bn) throw Error(Errc::CryptoBackend, "BN_bin2bn");
  return bn;
}

}  // namespace detail

class P256Point {
 public:
  P256Point() : p_(EC_POINT_new(detail::p256_group())) {
    if (!p_ || EC_POINT_set_to_infinity(detail::p256_group(), p_.get()) != 1)
      throw Error(Errc::CryptoBackend, "EC_POINT_new");
  }
  P256Point(const P256Point& o) : p_(EC_POINT_dup(o.p_.get(), detail::p256_group())) {
    if (!p_) throw Error(Errc::CryptoBackend, "EC_POINT_dup");
  }
  P256Point(P256Point&&) noexcept = default;
  P256Point& operator=(const P256Point& o) {
    P256Point tmp(o);
    std::swap(p_, tmp.p_);
    return *this;
  }
  P256Point& operator=(P256Point&&) noexcept = default;

  bool is_identity() const { return EC_POINT_is_at_infinity(detail::p256_group(), p_.get()) == 1; }

  friend bool operator==(const P256Point& a, const P256Point& b) {
    return EC_POINT_cmp(detail::p256_group(), a.p_.get(), b.p_.get(), detail::bn_ctx()) == 0;
  }

  friend P256Point operator+(const P256Point& a, const P256Point& b) {
    P256Point r;
    if (EC_POINT_add(detail::p256_group(), r.p_.get(), a.p_.get(), b.p_.get(), detail::bn_ctx()) != 1)
      throw Error(Errc::CryptoBackend, "EC_POINT_add");
    return r;
  }
  P256Point& operator+=(const P256Point& o) { return *this = *this + o; }
  P256Point& operator-=(const P256Point& o) { return *this = *this + (-o); }

  friend P256Point operator-(const P256Point& a) {
    P256Point r(a);
    if (EC_POINT_invert(detail::p256_group(), r.p_.get(), detail::bn_ctx()) != 1)
      throw Error(Errc::CryptoBackend, "EC_POINT_invert");
    return r;
  }
  friend P256Point operator-(const P256Point& a, const P256Point& b) { return a + (-b); }

  friend P256Point operator*(const P256Scalar& k, const P256Point& p) {
    P256Point r;
    auto bn = detail::to_bn(k);
    if (EC_POINT_mul(detail::p256_group(), r.p_.get(), nullptr, p.p_.get(), bn.get(), detail::bn_ctx()) != 1)
      throw Error(Errc::CryptoBackend, "EC_POINT_mul");
    return r;
  }

  static P256Point mul_base(const P256Scalar& k) {
    P256Point r;
    auto bn = detail::to_bn(k);
    if (EC_POINT_mul(detail::p256_group(), r.p_.get(), bn.get(), nullptr, nullptr, detail::bn_ctx()) != 1)
      throw Error(Errc::CryptoBackend, "EC_POINT_mul");
    return r;
  }

  static P256Point generator() {
    P256Point r;
    if (EC_POINT_copy(r.p_.get(), EC_GROUP_get0_generator(detail::p256_group())) != 1)
      throw Error(Errc::CryptoBackend, "EC_POINT_copy");
    return r;
  }

  const EC_POINT* raw() const noexcept { return p_.get(); }
  EC_POINT* raw() noexcept { return p_.get(); }

 private:
  std::unique_ptr<EC_POINT, detail::EcPointFree> p_;
};

struct P256 {
  using Scalar = P256Scalar;
  using Point = P256Point;

  static constexpr std::string_view kId = "p256";
  static constexpr std::size_t kScalarBytes = 32;
  static constexpr std::size_t kPointBytes = 33;

  static Point generator() { return Point::generator(); }
  static Point identity() { return Point(); }
  static Point mul_base(const Scalar& k) { return Point::mul_base(k); }

  /// SEC1 compressed form; identity is 33 zero bytes.
  static Bytes encode_point(const Point& p) {
    if (p.is_identity()) return Bytes(kPointBytes, 0);
    Bytes out(kPointBytes);
    const auto n = EC_POINT_point2oct(detail::p256_group(), p.raw(), POINT_CONVERSION_COMPRESSED, out.data(),
                                      out.size(), detail::bn_ctx());
    if (n != kPointBytes) throw Error(Errc::CryptoBackend, "EC_POINT_point2oct");
    return out;
  }

  static Point decode_point(ByteView b) {
    if (b.size() != kPointBytes) throw Error(Errc::MalformedMessage, "P-256 point has wrong width");
    if (std::all_of(b.begin(), b.end(), [](std::uint8_t v) { return v == 0; })) return Point();
    if (b[0] != 0x02 && b[0] != 0x03) throw Error(Errc::MalformedMessage, "bad P-256 point prefix");
    Point p;
    if (EC_POINT_oct2point(detail::p256_group(), p.raw(), b.data(), b.size(), detail::bn_ctx()) != 1)
      throw Error(Errc::MalformedMessage, "x not on P-256");
    return p;
  }

  static GroupDescriptor descriptor() {
    Bytes order(kScalarBytes);
    U256 q = Scalar::modulus();
    for (std::size_t i = kScalarBytes; i-- > 0; q >>= 8) order[i] = static_cast<std::uint8_t>(q & 0xff);
    return GroupDescriptor{std::string(kId), order, encode_point(generator()), kScalarBytes, kPointBytes};
  }
};

}  // namespace gho::math
