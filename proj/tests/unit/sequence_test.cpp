// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "gho/baseline/sequence.hpp"
#include "test_support.hpp"

using namespace gho;
using namespace gho::baseline;

TEST(Sequence, SingleUeTracesMatchGolden) {
  EXPECT_EQ(run_lte_handover(1).to_text(), gho::testing::golden("lte_trace_1.txt"));
  EXPECT_EQ(run_nr_handover(1).to_text(), gho::testing::golden("nr_trace_1.txt"));
}

TEST(Sequence, ThirteenStepsPerUeInOrder) {
  const auto tr = run_lte_handover(3);
  ASSERT_EQ(tr.messages().size(), 39u);
  for (std::size_t i = 0; i < tr.messages().size(); ++i) {
    EXPECT_EQ(tr.messages()[i].seq, i + 1);
    EXPECT_EQ(tr.messages()[i].step, static_cast<int>(i % 13) + 1);
    const auto& m = tr.messages()[i];
    if (m.sender.role == NodeRole::Ue) {
      EXPECT_EQ(m.sender.index, i / 13);
    }
    if (m.receiver.role == NodeRole::Ue) {
      EXPECT_EQ(m.receiver.index, i / 13);
    }
  }
}

TEST(Sequence, CommandOriginDiffersByGeneration) {
  EXPECT_EQ(run_lte_handover(1).messages()[5].sender.role, NodeRole::TargetBs);
  EXPECT_EQ(run_nr_handover(1).messages()[5].sender.role, NodeRole::ServingBs);
}

TEST(Sequence, PacketConservation) {
  for (std::size_t n : {1u, 7u, 100u}) {
    for (const auto& tr : {run_lte_handover(n), run_nr_handover(n)}) {
      std::size_t wire = 0, local = 0;
      for (const auto& m : tr.messages()) (m.link_class == LinkClass::Local ? local : wire)++;
      std::size_t counted = 0;
      for (const auto& [c, k] : tr.per_link_counts()) counted += k;
      EXPECT_EQ(counted, wire);
      EXPECT_EQ(local, n);
      EXPECT_EQ(wire + local, 13 * n);
    }
  }
}

TEST(Sequence, PerUeCounts) {
  for (std::size_t n : {1u, 10u, 250u}) {
    const auto tr = run_lte_handover(n);
    EXPECT_EQ(tr.count(LinkClass::UeBs), 5 * n);
    EXPECT_EQ(tr.count(LinkClass::BsBs), 3 * n);
    EXPECT_EQ(tr.count(LinkClass::BsCore), 4 * n);
    EXPECT_EQ(tr.count_phase(Phase::CoreUpdate), 6 * n);
    EXPECT_EQ(tr.bs_bs_handover_packets(), 2 * n);
    EXPECT_EQ(tr.count_phase(Phase::Completion), n);
  }
}

TEST(Sequence, Classification) {
  EXPECT_EQ(classify(NodeRole::Ue, NodeRole::TargetBs), LinkClass::UeBs);
  EXPECT_EQ(classify(NodeRole::ServingBs, NodeRole::TargetBs), LinkClass::BsBs);
  EXPECT_EQ(classify(NodeRole::TargetBs, NodeRole::Core), LinkClass::BsCore);
  EXPECT_EQ(classify(NodeRole::Core, NodeRole::Gateway), LinkClass::BsCore);
  EXPECT_EQ(classify(NodeRole::ServingBs, NodeRole::ServingBs), LinkClass::Local);
}

TEST(Sequence, ZeroUesRejected) {
  EXPECT_THROW(run_lte_handover(0), Error);
  EXPECT_THROW(run_nr_handover(0), Error);
}
