// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "gho/handover/protocol.hpp"
#include "gho/math/p256.hpp"
#include "gho/math/toy_curve.hpp"

using namespace gho;
using math::ToyCurve;
using math::ToyScalar;
using Cred = auth::PublicCredential<ToyCurve>;
using Bs = handover::BaseStationState<ToyCurve>;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::CryptoBackend;
}

struct Cell {
  auth::Issuer<ToyCurve> issuer;
  std::vector<auth::KeyShare<ToyCurve>> ues;
  auth::KeyShare<ToyCurve> uxnb_share;
  Bs terrestrial;
  Bs uxnb;
  crypto::NonceSource nonces{99};

  static Cell make(std::size_t n, std::size_t t = 3, std::uint64_t seed = 1) {
    auto is = auth::initialize_group<ToyCurve>(t, seed);
    std::vector<auth::KeyShare<ToyCurve>> ues;
    for (std::size_t i = 0; i < n; ++i) ues.push_back(is.issue_share("ue-" + std::to_string(i)));
    auto ux = is.issue_share("uxnb-0", auth::ShareRole::Uxnb);
    auto terr = Bs::terrestrial("enb", is.params(), is.secret_function());
    auto uxnb = Bs::uxnb("uxnb-0", is.params(), ux);
    return Cell{std::move(is), std::move(ues), ux, std::move(terr), std::move(uxnb)};
  }

  void join() {
    auto p = handover::authenticate_uxnb(terrestrial, uxnb_share.credential(), nonces);
    ASSERT_TRUE(p);
    handover::receive_secret_function(uxnb, *p);
  }

  std::vector<Cred> creds() const {
    std::vector<Cred> out;
    for (const auto& s : ues) out.push_back(s.credential());
    return out;
  }
};

}  // namespace

TEST(UxnbAuthentication, LegitimateUxnbReceivesTheSecretFunction) {
  auto c = Cell::make(3);
  EXPECT_FALSE(c.uxnb.has_secret_function());
  c.join();
  EXPECT_EQ(c.uxnb.secret_function(), c.issuer.secret_function());
}

TEST(UxnbAuthentication, WrongPointGetsNothing) {
  auto c = Cell::make(1);
  auto cred = c.uxnb_share.credential();
  cred.public_point += ToyCurve::generator();
  EXPECT_FALSE(handover::authenticate_uxnb(c.terrestrial, cred, c.nonces));
  cred = c.uxnb_share.credential();
  cred.public_x = ToyScalar::zero();
  EXPECT_FALSE(handover::authenticate_uxnb(c.terrestrial, cred, c.nonces));
}

TEST(UxnbAuthentication, PayloadCarriesNoPlaintextPolynomial) {
  auto c = Cell::make(1);
  const auto p = handover::authenticate_uxnb(c.terrestrial, c.uxnb_share.credential(), c.nonces);
  ASSERT_TRUE(p);
  const Bytes wire = p->serialize();
  EXPECT_FALSE(contains_run(wire, c.issuer.secret_function().serialize()));
  EXPECT_EQ(handover::EncryptedPayload<ToyCurve>::deserialize(wire).serialize(), wire);
}

TEST(UxnbAuthentication, ReceiveErrors) {
  auto c = Cell::make(1);
  const auto p = handover::authenticate_uxnb(c.terrestrial, c.uxnb_share.credential(), c.nonces);
  ASSERT_TRUE(p);

  auto no_share = Bs::terrestrial("t2", c.issuer.params(), c.issuer.secret_function());
  EXPECT_EQ(code_of([&] { handover::receive_secret_function(no_share, *p); }), Errc::MissingOwnShare);

  auto tampered = *p;
  tampered.ciphertext[0] ^= 1;
  EXPECT_EQ(code_of([&] { handover::receive_secret_function(c.uxnb, tampered); }), Errc::DecryptionFailure);

  auto other = *p;
  other.key_hint = other.key_hint + ToyScalar::one();
  EXPECT_EQ(code_of([&] { handover::receive_secret_function(c.uxnb, other); }), Errc::DecryptionFailure);
  EXPECT_FALSE(c.uxnb.has_secret_function());
}

// A payload sealed under the right share key but holding a different
// polynomial is refused before installation.
TEST(UxnbAuthentication, PolynomialMismatchDetected) {
  auto c = Cell::make(1);
  const auto& share = c.uxnb_share;
  std::vector<ToyScalar> coeffs = c.issuer.secret_function().coefficients();
  coeffs[0] += ToyScalar::one();
  const math::SecretPolynomial<ToyScalar> other(coeffs);

  handover::EncryptedPayload<ToyCurve> p;
  p.key_hint = share.public_x;
  p.nonce = c.nonces.next();
  p.ciphertext = crypto::seal(handover::derive_symmetric_key(share.private_share), p.nonce,
                              handover::detail::aad(handover::kSecretFunctionAad, share.public_x), other.serialize());
  EXPECT_EQ(code_of([&] { handover::receive_secret_function(c.uxnb, p); }), Errc::PolynomialMismatch);
  EXPECT_FALSE(c.uxnb.has_secret_function());
}

TEST(UxnbAuthentication, HandoverWithoutSecretFunctionFails) {
  auto c = Cell::make(2);
  EXPECT_EQ(code_of([&] { handover::group_handover(c.uxnb, c.creds()); }), Errc::MissingSecretFunction);
}

TEST(GroupHandover, AllValidHitsAggregateWithOneComparison) {
  auto c = Cell::make(20);
  c.join();
  const auto r = handover::group_handover(c.uxnb, c.creds());
  EXPECT_TRUE(r.aggregate_hit);
  EXPECT_EQ(r.point_comparisons, 1u);
  EXPECT_EQ(r.accepted.size(), 20u);
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_EQ(c.uxnb.served_ues().size(), 20u);
}

TEST(GroupHandover, FallbackIsolatesCorruptedUes) {
  auto c = Cell::make(10);
  c.join();
  auto creds = c.creds();
  creds[3].public_point += ToyCurve::generator();
  creds[7].public_x = creds[7].public_x + ToyScalar::one();
  const auto r = handover::group_handover(c.uxnb, creds);
  EXPECT_FALSE(r.aggregate_hit);
  EXPECT_EQ(r.point_comparisons, 11u);
  EXPECT_EQ(r.rejected, (std::vector<std::string>{"ue-3", "ue-7"}));
  EXPECT_EQ(r.accepted.size(), 8u);
  EXPECT_FALSE(c.uxnb.served_ues().contains("ue-3"));
}

// Two corruptions that cancel in the plain sum pass the aggregate check.
// Documented weakness of summing without per-UE weights.
TEST(GroupHandover, CancellingCorruptionsPassThePlainSum) {
  auto c = Cell::make(4);
  c.join();
  auto creds = c.creds();
  creds[0].public_point += ToyCurve::generator();
  creds[1].public_point -= ToyCurve::generator();
  const auto r = handover::group_handover(c.uxnb, creds);
  EXPECT_TRUE(r.aggregate_hit);
  EXPECT_EQ(r.accepted.size(), 4u);
}

TEST(GroupHandover, InputErrors) {
  auto c = Cell::make(3);
  c.join();
  EXPECT_EQ(code_of([&] { handover::group_handover(c.uxnb, std::vector<Cred>{}); }), Errc::EmptyInput);
  auto creds = c.creds();
  creds.push_back(creds[0]);
  EXPECT_EQ(code_of([&] { handover::group_handover(c.uxnb, creds); }), Errc::DuplicateEvaluationPoint);
}

TEST(GroupHandover, BatchBelowThresholdStillWorks) {
  auto c = Cell::make(1, 5);
  c.join();
  const auto r = handover::group_handover(c.uxnb, c.creds());
  EXPECT_TRUE(r.aggregate_hit);
  EXPECT_EQ(r.accepted.size(), 1u);
}

TEST(ServiceTraffic, AcceptedUeIsServed) {
  auto c = Cell::make(3);
  c.join();
  handover::group_handover(c.uxnb, c.creds());
  const auto req = handover::ue_send_service_request(c.ues[1], to_bytes("hello"), c.nonces);
  EXPECT_FALSE(contains_run(req.serialize(), to_bytes("hello")));
  EXPECT_EQ(handover::bs_handle_service_request(c.uxnb, req), to_bytes("hello"));
}

TEST(ServiceTraffic, ReplayAndStrangersRejected) {
  auto c = Cell::make(3);
  c.join();
  auto creds = c.creds();
  creds.pop_back();
  handover::group_handover(c.uxnb, creds);

  const auto req = handover::ue_send_service_request(c.ues[0], to_bytes("a"), c.nonces);
  EXPECT_TRUE(handover::bs_handle_service_request(c.uxnb, req));
  EXPECT_FALSE(handover::bs_handle_service_request(c.uxnb, req));  // replay

  const auto stranger = handover::ue_send_service_request(c.ues[2], to_bytes("b"), c.nonces);
  EXPECT_FALSE(handover::bs_handle_service_request(c.uxnb, stranger));

  auto mislabelled = handover::ue_send_service_request(c.ues[0], to_bytes("c"), c.nonces);
  mislabelled.sender_x = c.ues[1].public_x;
  EXPECT_FALSE(handover::bs_handle_service_request(c.uxnb, mislabelled));

  auto wrong_key = c.ues[0];
  wrong_key.private_share += ToyScalar::one();
  EXPECT_FALSE(handover::bs_handle_service_request(c.uxnb,
                                                   handover::ue_send_service_request(wrong_key, to_bytes("d"), c.nonces)));
  EXPECT_EQ(handover::ServiceRequest<ToyCurve>::deserialize(req.serialize()).serialize(), req.serialize());
}

TEST(ServiceTraffic, ReleasedUeNoLongerServed) {
  auto c = Cell::make(2);
  c.terrestrial.admit(c.ues[0].credential());
  EXPECT_TRUE(c.terrestrial.serves_x(c.ues[0].public_x));
  c.terrestrial.release("ue-0");
  EXPECT_FALSE(c.terrestrial.serves_x(c.ues[0].public_x));
}

TEST(GroupHandover, P256EndToEnd) {
  using G = math::P256;
  auto is = auth::initialize_group<G>(3, 11);
  std::vector<auth::KeyShare<G>> ues;
  std::vector<auth::PublicCredential<G>> creds;
  for (int i = 0; i < 6; ++i) {
    ues.push_back(is.issue_share("ue-" + std::to_string(i)));
    creds.push_back(ues.back().credential());
  }
  const auto ux = is.issue_share("uxnb", auth::ShareRole::Uxnb);
  auto terr = handover::BaseStationState<G>::terrestrial("t", is.params(), is.secret_function());
  auto uxnb = handover::BaseStationState<G>::uxnb("u", is.params(), ux);
  crypto::NonceSource nonces(3);
  handover::receive_secret_function(uxnb, *handover::authenticate_uxnb(terr, ux.credential(), nonces));
  creds[4].public_point += G::generator();
  const auto r = handover::group_handover(uxnb, creds);
  EXPECT_EQ(r.rejected, std::vector<std::string>{"ue-4"});
  const auto req = handover::ue_send_service_request(ues[0], to_bytes("x"), nonces);
  EXPECT_EQ(handover::bs_handle_service_request(uxnb, req), to_bytes("x"));
}
