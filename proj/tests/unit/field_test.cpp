// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <openssl/bn.h>

#include <random>

#include "gho/math/lagrange.hpp"
#include "gho/math/p256.hpp"
#include "gho/math/polynomial.hpp"
#include "gho/math/toy_curve.hpp"
#include "test_support.hpp"

using namespace gho;
using gho::testing::F101;

TEST(PrimeField, SmallFieldArithmetic) {
  EXPECT_EQ((F101(60) + F101(50)).value(), 9u);
  EXPECT_EQ((F101(3) - F101(5)).value(), 99u);
  EXPECT_EQ((-F101(1)).value(), 100u);
  EXPECT_EQ((F101(20) * F101(30)).value(), 600u % 101);
  EXPECT_EQ(F101(505).value(), 0u);
}

TEST(PrimeField, InverseExhaustive) {
  for (std::uint32_t a = 1; a < 101; ++a) EXPECT_EQ((F101(a) * F101(a).inverse()).value(), 1u) << a;
  EXPECT_THROW(F101(0).inverse(), Error);
}

TEST(PrimeField, HandCheckedPolynomial) {
  // f(x) = 2 + 3x, f(4) = 14
  math::SecretPolynomial<F101> f({F101(2), F101(3)});
  EXPECT_EQ(f(F101(4)).value(), 14u);
}

TEST(PrimeField, HandCheckedLagrangeCoefficients) {
  // points {1, 2}: lambda_1 = 2/(2-1) = 2, lambda_2 = 1/(1-2) = -1
  const std::vector<F101> xs{F101(1), F101(2)};
  EXPECT_EQ(math::lagrange_coefficient(xs, 0).value(), 2u);
  EXPECT_EQ(math::lagrange_coefficient(xs, 1).value(), 100u);
}

TEST(PrimeField, FromBytesIsStrict) {
  EXPECT_EQ(F101::from_bytes(Bytes{100}).value(), 100u);
  EXPECT_THROW(F101::from_bytes(Bytes{101}), Error);
  EXPECT_THROW(F101::from_bytes(Bytes{1, 2}), Error);
  EXPECT_EQ(math::ToyScalar(65520).to_bytes(), (Bytes{0xff, 0xf0}));
  EXPECT_THROW(math::ToyScalar::from_bytes(Bytes{0xff, 0xf1}), Error);
}

TEST(PrimeField, RandomIsInRangeAndCoversSmallField) {
  std::mt19937_64 rng(3);
  std::set<std::uint32_t> seen;
  for (int i = 0; i < 5000; ++i) seen.insert(F101::random_nonzero(rng).value());
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_FALSE(seen.contains(0));
}

TEST(PrimeField, ToyFieldAgainstPlainIntegers) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() % 65521, b = rng() % 65521;
    EXPECT_EQ((math::ToyScalar(a) * math::ToyScalar(b)).value(), a * b % 65521);
    EXPECT_EQ((math::ToyScalar(a) + math::ToyScalar(b)).value(), (a + b) % 65521);
  }
}

namespace {

struct BnDeleter {
  void operator()(BIGNUM* b) const { BN_free(b); }
};
using Bn = std::unique_ptr<BIGNUM, BnDeleter>;

Bn bn_of(const Bytes& b) { return Bn(BN_bin2bn(b.data(), static_cast<int>(b.size()), nullptr)); }

Bytes bn_bytes32(const BIGNUM* v) {
  Bytes out(32);
  BN_bn2binpad(v, out.data(), 32);
  return out;
}

}  // namespace

// OpenSSL BIGNUM modular arithmetic as an independent route for the P-256
// scalar field.
TEST(PrimeField, P256ScalarsAgainstOpenSslBignum) {
  std::mt19937_64 rng(5);
  const Bytes order_bytes = math::P256::descriptor().order;
  Bn n = bn_of(order_bytes);
  BN_CTX* ctx = BN_CTX_new();
  for (int i = 0; i < 200; ++i) {
    const auto a = math::P256Scalar::random_nonzero(rng), b = math::P256Scalar::random_nonzero(rng);
    Bn ba = bn_of(a.to_bytes()), bb = bn_of(b.to_bytes()), r(BN_new());

    BN_mod_mul(r.get(), ba.get(), bb.get(), n.get(), ctx);
    EXPECT_EQ((a * b).to_bytes(), bn_bytes32(r.get()));
    BN_mod_add(r.get(), ba.get(), bb.get(), n.get(), ctx);
    EXPECT_EQ((a + b).to_bytes(), bn_bytes32(r.get()));
    BN_mod_sub(r.get(), ba.get(), bb.get(), n.get(), ctx);
    EXPECT_EQ((a - b).to_bytes(), bn_bytes32(r.get()));
    BN_mod_inverse(r.get(), ba.get(), n.get(), ctx);
    EXPECT_EQ(a.inverse().to_bytes(), bn_bytes32(r.get()));
  }
  BN_CTX_free(ctx);
}

TEST(PrimeField, P256FromDigestReduces) {
  const Bytes all_ff(32, 0xff);
  const auto s = math::P256Scalar::from_digest(all_ff);
  // 2^256 - 1 - n
  EXPECT_EQ(to_hex(s.to_bytes()), "00000000ffffffff00000000000000004319055258e8617b0c46353d039cdaae");
}
