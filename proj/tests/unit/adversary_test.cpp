// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "gho/math/p256.hpp"
#include "gho/math/toy_curve.hpp"
#include "gho/sim/adversary.hpp"

using namespace gho;
using namespace gho::sim;
using math::P256;

TEST(WireKnowledge, OnlyTransmittedFramesMayBeRecorded) {
  WireTap tap;
  AdversaryKnowledge adv(tap);
  const auto& f = tap.transmit(MessageKind::ServiceRequest, to_bytes("ciphertext"));
  adv.capture(f);
  EXPECT_EQ(adv.frames().size(), 1u);
  try {
    adv.capture(MessageKind::ServiceRequest, to_bytes("private share bytes"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WireKnowledgeViolation);
  }
  // A fragment of a real frame is not a frame.
  EXPECT_THROW(adv.capture(MessageKind::ServiceRequest, to_bytes("cipher")), Error);
  // Same bytes under another kind were never seen either.
  EXPECT_THROW(adv.capture(MessageKind::UeCredentialTransfer, to_bytes("ciphertext")), Error);
}

TEST(WireKnowledge, HonestFramesNeverContainPrivateShares) {
  auto world = detail::GroupWorld<P256>::build(4, 3, 1);
  world.authenticate_uxnb();
  const Bytes frame = world.setup_payload->serialize();
  EXPECT_FALSE(contains_run(frame, world.uxnb.own_share()->private_share.to_bytes()));
  for (const auto& s : world.ue_shares) {
    EXPECT_FALSE(contains_run(s.credential().serialize(), s.private_share.to_bytes()));
    const auto req = handover::ue_send_service_request(s, to_bytes("data"), world.nonces);
    EXPECT_FALSE(contains_run(req.serialize(), s.private_share.to_bytes()));
  }
}

TEST(WireKnowledge, CandidatesComeFromParsedFrames) {
  WireTap tap;
  AdversaryKnowledge adv(tap);
  auto world = detail::GroupWorld<P256>::build(2, 2, 3);
  adv.capture(tap.transmit(MessageKind::UeCredentialTransfer, world.ue_shares[0].credential().serialize()));
  const auto c = candidate_shares<P256>(adv);
  EXPECT_EQ(c.size(), 3u);  // x, H(x), H(point)
  EXPECT_EQ(c[0], world.ue_shares[0].public_x);
  adv.grant_stolen_share(world.ue_shares[0].private_share.to_bytes());
  EXPECT_EQ(candidate_shares<P256>(adv).back(), world.ue_shares[0].private_share);
}

class Adversaries : public ::testing::TestWithParam<AdversaryKind> {};

TEST_P(Adversaries, ThwartedWithoutPrivateMaterial) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto v = execute_adversary<P256>({GetParam(), false}, seed, 3);
    EXPECT_EQ(v.outcome, AdversaryOutcome::Thwarted) << v.detail;
  }
}

TEST_P(Adversaries, ControlWithStolenShareSucceeds) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto v = execute_adversary<P256>({GetParam(), true}, seed, 3);
    EXPECT_EQ(v.outcome, AdversaryOutcome::Succeeded) << v.detail;
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, Adversaries, ::testing::ValuesIn(kAllAdversaries),
                         [](const auto& p) { return std::string(to_string(p.param)); });

TEST(Adversary, ReplayedUxnbCredentialPassesCheckButCannotDecrypt) {
  const auto v = detail::replay_uxnb_credential<P256>(9, 3, false);
  EXPECT_EQ(v.outcome, AdversaryOutcome::Thwarted);
  EXPECT_NE(v.detail.find("credential passed on replay"), std::string::npos);
}

TEST(Adversary, EavesdropperRecoversNothingFromHundredRequests) {
  const auto v = detail::eavesdrop_service_traffic<P256>(4, 3, false, 100);
  EXPECT_EQ(v.outcome, AdversaryOutcome::Thwarted);
  EXPECT_EQ(v.detail.rfind("0 of 100", 0), 0u);
}

TEST(Adversary, RunAdversaryAttachesOutcomeToReport) {
  Scenario sc;
  sc.ue_count = 5;
  sc.adversary = AdversaryScript{AdversaryKind::FakeBsDesync, false};
  const auto r = run_adversary<P256>(sc);
  EXPECT_EQ(r.adversary_outcome, AdversaryOutcome::Thwarted);
  EXPECT_EQ(r.accepted_ues.size(), 5u);
  EXPECT_NE(r.render().find("adversary=Thwarted"), std::string::npos);
  sc.adversary.reset();
  EXPECT_THROW(run_adversary<P256>(sc), Error);
}

TEST(Adversary, TrialsAreDeterministic) {
  const auto a = adversary_trials<P256>({AdversaryKind::ReplayUeCredential, false}, 3, 20);
  const auto b = adversary_trials<P256>({AdversaryKind::ReplayUeCredential, false}, 3, 20);
  EXPECT_EQ(a.thwarted, b.thwarted);
  EXPECT_EQ(a.thwarted, 3u);
}
