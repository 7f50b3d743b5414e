// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <openssl/sha.h>

#include <random>

#include "gho/baseline/key_hierarchy.hpp"

using namespace gho;
using namespace gho::baseline;

namespace {

// Independent KDF route: one-shot SHA256 over a hand-built buffer.
Bytes oracle_kdf(const Bytes& parent, const std::string& label, std::uint32_t ncc) {
  Bytes buf = parent;
  buf.insert(buf.end(), label.begin(), label.end());
  for (int shift = 24; shift >= 0; shift -= 8) buf.push_back(static_cast<std::uint8_t>(ncc >> shift));
  Bytes out(SHA256_DIGEST_LENGTH);
  SHA256(buf.data(), buf.size(), out.data());
  return out;
}

Bytes random_key(std::mt19937_64& rng) {
  Bytes k(32);
  for (auto& b : k) b = static_cast<std::uint8_t>(rng());
  return k;
}

const Bytes kChallenge = to_bytes("challenge");

}  // namespace

TEST(KeyHierarchy, KdfMatchesOracle) {
  const Bytes parent(32, 0x11);
  EXPECT_EQ(kdf(parent, "K_gNB"), oracle_kdf(parent, "K_gNB", 0));
  EXPECT_EQ(kdf(parent, "K_gNB*", 7), oracle_kdf(parent, "K_gNB*", 7));
  EXPECT_NE(kdf(parent, "K_gNB", 0), kdf(parent, "K_gNB", 1));
}

TEST(KeyHierarchy, UeSideChainMatchesOracleAtEveryNode) {
  std::mt19937_64 rng(1);
  const Bytes k_amf = random_key(rng);
  const auto s = derive_key_hierarchy(k_amf);
  const Bytes k_gnb = oracle_kdf(k_amf, "K_gNB", 0);
  EXPECT_EQ(s.k_gnb, k_gnb);
  EXPECT_EQ(s.derived.at(KeyNode::AmfUeInt), oracle_kdf(k_amf, "K_AMF-UE-INT", 0));
  EXPECT_EQ(s.derived.at(KeyNode::AmfUeEnc), oracle_kdf(k_amf, "K_AMF-UE-ENC", 0));
  EXPECT_EQ(s.derived.at(KeyNode::GnbUeInt), oracle_kdf(k_gnb, "K_gNB-UE-INT", 0));
  EXPECT_EQ(s.derived.at(KeyNode::GnbUeEnc), oracle_kdf(k_gnb, "K_gNB-UE-ENC", 0));
  EXPECT_EQ(s.ncc, 0u);
  EXPECT_FALSE(s.k_gnb_star);
}

TEST(KeyHierarchy, BothRoutesAgreeForManyKeys) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Bytes k = random_key(rng);
    EXPECT_EQ(derive_key_hierarchy(k), network_key_chain(k));
  }
}

TEST(KeyHierarchy, HandoverStepMatchesOracle) {
  const Bytes k_amf(32, 0x22);
  const auto s0 = derive_key_hierarchy(k_amf);
  const auto s1 = handover_key_exchange(s0, {.target_cell_id = 0x01020304, .arfcn = 5});
  std::string label = "K_gNB*";
  for (std::uint8_t b : {1, 2, 3, 4, 0, 0, 0, 5}) label.push_back(static_cast<char>(b));
  const Bytes star = oracle_kdf(s0.k_gnb, label, 1);
  EXPECT_EQ(s1.ncc, 1u);
  EXPECT_EQ(*s1.k_gnb_star, star);
  EXPECT_EQ(s1.derived.at(KeyNode::GnbUeInt), oracle_kdf(star, "K_gNB-UE-INT", 0));
  EXPECT_EQ(s1.derived.at(KeyNode::AmfUeInt), s0.derived.at(KeyNode::AmfUeInt));

  const auto s2 = handover_key_exchange(s1, {.target_cell_id = 0x01020304, .arfcn = 5});
  EXPECT_EQ(*s2.k_gnb_star, oracle_kdf(star, label, 2));
}

TEST(KeyHierarchy, LockstepHopsAgree) {
  std::mt19937_64 rng(3);
  auto ue = derive_key_hierarchy(random_key(rng));
  auto net = network_key_chain(ue.k_amf);
  for (int hop = 0; hop < 5; ++hop) {
    ue = handover_key_exchange(ue);
    net = handover_key_exchange(net);
    EXPECT_TRUE(keys_agree(ue, net, kChallenge));
  }
}

TEST(KeyHierarchy, OneSidedAdvanceIsDetectedOnNextExchange) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    auto ue = derive_key_hierarchy(random_key(rng));
    auto net = network_key_chain(ue.k_amf);
    net = handover_key_exchange(net);  // rogue hop the UE never saw
    ue = handover_key_exchange(ue);
    net = handover_key_exchange(net);
    EXPECT_FALSE(keys_agree(ue, net, kChallenge));
    EXPECT_NE(ue.ncc, net.ncc);
  }
}

TEST(KeyHierarchy, DifferentSharedParamsDiverge) {
  const auto s = derive_key_hierarchy(Bytes(32, 1));
  EXPECT_FALSE(keys_agree(handover_key_exchange(s, {.target_cell_id = 1}),
                          handover_key_exchange(s, {.target_cell_id = 2}), kChallenge));
}

TEST(KeyHierarchy, EmptyKeyRejected) {
  EXPECT_THROW(derive_key_hierarchy(Bytes{}), Error);
  EXPECT_THROW(network_key_chain(Bytes{}), Error);
  EXPECT_THROW(handover_key_exchange(KeyChainState{}), Error);
}
