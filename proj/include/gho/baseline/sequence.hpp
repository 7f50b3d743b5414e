// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gho/error.hpp"

namespace gho::baseline {

enum class NodeRole { Ue, ServingBs, TargetBs, Core, Gateway };

struct NodeId {
  NodeRole role;
  std::uint32_t index = 0;  // UE number; unused for other roles

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

enum class LinkClass { UeBs, BsBs, BsCore, Local };

inline constexpr std::array<LinkClass, 3> kWireLinkClasses = {LinkClass::UeBs, LinkClass::BsBs, LinkClass::BsCore};

constexpr std::string_view to_string(LinkClass c) noexcept {
  switch (c) {
    case LinkClass::UeBs: return "UE_BS";
    case LinkClass::BsBs: return "BS_BS";
    case LinkClass::BsCore: return "BS_CORE";
    case LinkClass::Local: return "LOCAL";
  }
  return "?";
}

/// Setup: one-off BS authentication. Preparation: steps 1-6.
/// CoreUpdate: steps 7-12, the six packets each UE needs to move its
/// core-network context. Completion: step 13.
enum class Phase { Setup, Preparation, CoreUpdate, Completion };

enum class MessageKind {
  MeasurementControl,
  MeasurementReport,
  HandoverDecision,
  HandoverRequest,
  HandoverAck,
  HandoverCommand,
  Attach,
  UplinkAllocation,
  PathSwitch,
  BearerModify,
  BearerModifyAck,
  PathSwitchAck,
  HandoverComplete,
  UeCredentialTransfer,
  UxnbCredential,
  SecretFunctionTransfer,
  GroupVerification,
  ServiceRequest,
};

constexpr std::string_view to_string(MessageKind k) noexcept {
  switch (k) {
    case MessageKind::MeasurementControl: return "MeasurementControl";
    case MessageKind::MeasurementReport: return "MeasurementReport";
    case MessageKind::HandoverDecision: return "HandoverDecision";
    case MessageKind::HandoverRequest: return "HandoverRequest";
    case MessageKind::HandoverAck: return "HandoverAck";
    case MessageKind::HandoverCommand: return "HandoverCommand";
    case MessageKind::Attach: return "Attach";
    case MessageKind::UplinkAllocation: return "UplinkAllocation";
    case MessageKind::PathSwitch: return "PathSwitch";
    case MessageKind::BearerModify: return "BearerModify";
    case MessageKind::BearerModifyAck: return "BearerModifyAck";
    case MessageKind::PathSwitchAck: return "PathSwitchAck";
    case MessageKind::HandoverComplete: return "HandoverComplete";
    case MessageKind::UeCredentialTransfer: return "UeCredentialTransfer";
    case MessageKind::UxnbCredential: return "UxnbCredential";
    case MessageKind::SecretFunctionTransfer: return "SecretFunctionTransfer";
    case MessageKind::GroupVerification: return "GroupVerification";
    case MessageKind::ServiceRequest: return "ServiceRequest";
  }
  return "?";
}

/// Link class follows from the roles at both ends.
constexpr LinkClass classify(NodeRole from, NodeRole to) {
  auto is_bs = [](NodeRole r) { return r == NodeRole::ServingBs || r == NodeRole::TargetBs; };
  auto is_core = [](NodeRole r) { return r == NodeRole::Core || r == NodeRole::Gateway; };
  if (from == to && from != NodeRole::Ue && !is_core(from)) return LinkClass::Local;
  if (from == NodeRole::Ue || to == NodeRole::Ue) return LinkClass::UeBs;
  if (is_bs(from) && is_bs(to)) return LinkClass::BsBs;
  return LinkClass::BsCore;
}

struct ControlMessage {
  std::uint64_t seq = 0;
  int step = 0;  // 1..13 in the standard procedure, 0 for setup
  NodeId sender;
  NodeId receiver;
  MessageKind kind;
  LinkClass link_class;
  Phase phase;
  std::uint32_t payload_size = 1;
};

/// Display names for the non-UE nodes of one procedure.
struct NodeNames {
  std::string serving_bs = "s-BS";
  std::string target_bs = "t-BS";
  std::string core = "MME";
  std::string gateway = "SGW";

  static NodeNames lte() { return {}; }
  static NodeNames nr() { return {"s-BS", "t-BS", "AMF", "UPF"}; }
  static NodeNames group() { return {"terrestrial", "UxNB", "AMF", "UPF"}; }

  std::string operator()(const NodeId& n) const {
    switch (n.role) {
      case NodeRole::Ue: return "UE" + std::to_string(n.index);
      case NodeRole::ServingBs: return serving_bs;
      case NodeRole::TargetBs: return target_bs;
      case NodeRole::Core: return core;
      case NodeRole::Gateway: return gateway;
    }
    return "?";
  }
};

class SequenceTrace {
 public:
  explicit SequenceTrace(NodeNames names = NodeNames::lte()) : names_(std::move(names)) {
    for (auto c : kWireLinkClasses) per_link_counts_[c] = 0;
  }

  void emit(int step, NodeId from, NodeId to, MessageKind kind, Phase phase) {
    ControlMessage m;
    m.seq = messages_.size() + 1;
    m.step = step;
    m.sender = from;
    m.receiver = to;
    m.kind = kind;
    m.link_class = classify(from.role, to.role);
    m.phase = phase;
    m.payload_size = m.link_class == LinkClass::Local ? 0 : 1;
    if (m.link_class != LinkClass::Local) ++per_link_counts_[m.link_class];
    messages_.push_back(m);
  }

  const std::vector<ControlMessage>& messages() const noexcept { return messages_; }

  /// Transmitted packets per wire link class; internal steps are not counted.
  const std::map<LinkClass, std::size_t>& per_link_counts() const noexcept { return per_link_counts_; }
  std::size_t count(LinkClass c) const { return per_link_counts_.contains(c) ? per_link_counts_.at(c) : 0; }

  std::size_t count_phase(Phase p) const {
    std::size_t n = 0;
    for (const auto& m : messages_) n += (m.phase == p && m.link_class != LinkClass::Local);
    return n;
  }

  /// Inter-BS packets of the preparation phase (request + ack per UE).
  std::size_t bs_bs_handover_packets() const {
    std::size_t n = 0;
    for (const auto& m : messages_) n += (m.phase == Phase::Preparation && m.link_class == LinkClass::BsBs);
    return n;
  }

  const NodeNames& names() const noexcept { return names_; }

  /// One line per message: seq,sender,receiver,kind,link_class
  std::string to_text() const {
    std::ostringstream out;
    for (const auto& m : messages_)
      out << m.seq << ',' << names_(m.sender) << ',' << names_(m.receiver) << ',' << to_string(m.kind) << ','
          << to_string(m.link_class) << '\n';
    return out.str();
  }

 private:
  NodeNames names_;
  std::vector<ControlMessage> messages_;
  std::map<LinkClass, std::size_t> per_link_counts_;
};

enum class Generation { Lte, Nr };

namespace detail {

inline void append_standard_handover(SequenceTrace& tr, std::uint32_t ue_index, Generation gen) {
  const NodeId ue{NodeRole::Ue, ue_index}, s{NodeRole::ServingBs}, t{NodeRole::TargetBs}, core{NodeRole::Core},
      gw{NodeRole::Gateway};
  tr.emit(1, s, ue, MessageKind::MeasurementControl, Phase::Preparation);
  tr.emit(2, ue, s, MessageKind::MeasurementReport, Phase::Preparation);
  tr.emit(3, s, s, MessageKind::HandoverDecision, Phase::Preparation);
  tr.emit(4, s, t, MessageKind::HandoverRequest, Phase::Preparation);
  tr.emit(5, t, s, MessageKind::HandoverAck, Phase::Preparation);
  // LTE: the t-BS informs the UE; NR: the s-BS issues the command.
  tr.emit(6, gen == Generation::Lte ? t : s, ue, MessageKind::HandoverCommand, Phase::Preparation);
  tr.emit(7, ue, t, MessageKind::Attach, Phase::CoreUpdate);
  tr.emit(8, t, ue, MessageKind::UplinkAllocation, Phase::CoreUpdate);
  tr.emit(9, t, core, MessageKind::PathSwitch, Phase::CoreUpdate);
  tr.emit(10, core, gw, MessageKind::BearerModify, Phase::CoreUpdate);
  tr.emit(11, gw, core, MessageKind::BearerModifyAck, Phase::CoreUpdate);
  tr.emit(12, core, t, MessageKind::PathSwitchAck, Phase::CoreUpdate);
  tr.emit(13, t, s, MessageKind::HandoverComplete, Phase::Completion);
}

inline SequenceTrace run_standard(std::size_t ue_count, Generation gen) {
  if (ue_count < 1) throw Error(Errc::InvalidCount, "ue_count must be at least 1");
  SequenceTrace tr(gen == Generation::Lte ? NodeNames::lte() : NodeNames::nr());
  for (std::size_t i = 0; i < ue_count; ++i) append_standard_handover(tr, static_cast<std::uint32_t>(i), gen);
  return tr;
}

}  // namespace detail

/// Inter-eNB, intra-MME LTE handover, one UE after another.
inline SequenceTrace run_lte_handover(std::size_t ue_count) {
  return detail::run_standard(ue_count, Generation::Lte);
}

/// 5G NR handover: same steps as LTE, command from the s-BS, AMF/UPF core.
inline SequenceTrace run_nr_handover(std::size_t ue_count) {
  return detail::run_standard(ue_count, Generation::Nr);
}

}  // namespace gho::baseline
