// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gho/baseline/key_hierarchy.hpp"
#include "gho/baseline/sequence.hpp"
#include "gho/handover/protocol.hpp"
#include "gho/sim/latency.hpp"

namespace gho::sim {

using baseline::LinkClass;

enum class Protocol { LteBaseline, NrBaseline, GroupHandover };

constexpr std::string_view to_string(Protocol p) noexcept {
  switch (p) {
    case Protocol::LteBaseline: return "lte";
    case Protocol::NrBaseline: return "nr";
    case Protocol::GroupHandover: return "group";
  }
  return "?";
}

inline Protocol parse_protocol(std::string_view s) {
  if (s == "lte") return Protocol::LteBaseline;
  if (s == "nr") return Protocol::NrBaseline;
  if (s == "group") return Protocol::GroupHandover;
  throw Error(Errc::InvalidScenario, "unknown protocol '" + std::string(s) + "' (expected lte, nr or group)");
}

enum class AdversaryKind { ReplayUxnbCredential, ReplayUeCredential, EavesdropServiceTraffic, FakeBsDesync };

inline constexpr std::array<AdversaryKind, 4> kAllAdversaries = {
    AdversaryKind::ReplayUxnbCredential, AdversaryKind::ReplayUeCredential, AdversaryKind::EavesdropServiceTraffic,
    AdversaryKind::FakeBsDesync};

constexpr std::string_view to_string(AdversaryKind k) noexcept {
  switch (k) {
    case AdversaryKind::ReplayUxnbCredential: return "replay_uxnb_credential";
    case AdversaryKind::ReplayUeCredential: return "replay_ue_credential";
    case AdversaryKind::EavesdropServiceTraffic: return "eavesdrop_service_traffic";
    case AdversaryKind::FakeBsDesync: return "fake_bs_desync";
  }
  return "?";
}

/// What the attacker does. Its knowledge is built during the run from
/// frames seen on the simulated wire; `stolen_share_control` hands it the
/// victim's private material as a harness sensitivity check.
struct AdversaryScript {
  AdversaryKind kind = AdversaryKind::ReplayUxnbCredential;
  bool stolen_share_control = false;
};

enum class AdversaryOutcome { NotApplicable, Thwarted, Succeeded };

constexpr std::string_view to_string(AdversaryOutcome o) noexcept {
  switch (o) {
    case AdversaryOutcome::NotApplicable: return "NotApplicable";
    case AdversaryOutcome::Thwarted: return "Thwarted";
    case AdversaryOutcome::Succeeded: return "Succeeded";
  }
  return "?";
}

struct Scenario {
  Protocol protocol = Protocol::GroupHandover;
  std::size_t ue_count = 1;
  std::size_t threshold_t = 3;
  std::set<std::size_t> corruption_set;
  std::optional<AdversaryScript> adversary;
  std::uint64_t rng_seed = 0;
  LatencyModel latency;

  void validate() const {
    if (ue_count < 1) throw Error(Errc::InvalidScenario, "ue_count must be at least 1");
    if (threshold_t < 1) throw Error(Errc::InvalidScenario, "threshold must be at least 1");
    for (auto i : corruption_set)
      if (i >= ue_count)
        throw Error(Errc::InvalidScenario,
                    "corrupted UE index " + std::to_string(i) + " outside [0, " + std::to_string(ue_count) + ")");
    latency.validate();
  }
};

struct ScenarioReport {
  Protocol protocol = Protocol::GroupHandover;
  std::size_t ue_count = 0;
  Picoseconds handover_time{0};
  Picoseconds bs_bs_transfer_time{0};
  std::map<LinkClass, std::size_t> packets;  // every wire message, by link class
  std::size_t ue_core_packets = 0;           // core-update steps
  std::size_t bs_bs_handover_packets = 0;    // inter-BS request + ack
  std::set<std::size_t> accepted_ues;
  std::set<std::size_t> rejected_ues;
  std::optional<bool> aggregate_hit;
  AdversaryOutcome adversary_outcome = AdversaryOutcome::NotApplicable;
  std::string adversary_detail;

  std::size_t packets_on(LinkClass c) const { return packets.contains(c) ? packets.at(c) : 0; }

  /// Canonical text form; identical scenarios render byte-identically.
  std::string render() const {
    auto join = [](const std::set<std::size_t>& s) {
      std::string out;
      for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
      return out;
    };
    std::ostringstream o;
    o << "protocol=" << to_string(protocol) << '\n'
      << "ue_count=" << ue_count << '\n'
      << "handover_time_s=" << format_seconds(handover_time) << '\n'
      << "bs_bs_transfer_time_s=" << format_seconds(bs_bs_transfer_time) << '\n';
    for (auto c : baseline::kWireLinkClasses) o << "packets." << to_string(c) << '=' << packets_on(c) << '\n';
    o << "packets.UE_CORE=" << ue_core_packets << '\n'
      << "packets.BS_BS_HANDOVER=" << bs_bs_handover_packets << '\n'
      << "accepted=" << join(accepted_ues) << '\n'
      << "rejected=" << join(rejected_ues) << '\n'
      << "aggregate_hit=" << (aggregate_hit ? (*aggregate_hit ? "true" : "false") : "n/a") << '\n'
      << "adversary=" << to_string(adversary_outcome) << '\n';
    if (!adversary_detail.empty()) o << "adversary_detail=" << adversary_detail << '\n';
    return o.str();
  }
};

inline std::string ue_name(std::size_t i) { return "ue-" + std::to_string(i); }

namespace detail {

/// Time and packet fields follow from the trace and the latency constants.
inline void account(ScenarioReport& r, const baseline::SequenceTrace& trace, const LatencyModel& lat) {
  for (auto c : baseline::kWireLinkClasses) r.packets[c] = trace.count(c);
  r.ue_core_packets = trace.count_phase(baseline::Phase::CoreUpdate);
  r.bs_bs_handover_packets = trace.bs_bs_handover_packets();
  r.bs_bs_transfer_time = lat.bs_bs_per_packet * static_cast<std::int64_t>(r.bs_bs_handover_packets);
  r.handover_time = lat.base_handover_time + r.bs_bs_transfer_time;
  // Completion ack charged once per batch, however many completion messages.
  if (trace.count_phase(baseline::Phase::Completion) > 0) r.handover_time += lat.completion_ack;
}

inline Bytes k_amf_for(std::uint64_t seed, std::size_t ue, bool corrupted) {
  ByteWriter w;
  w.raw(to_bytes(corrupted ? "gho/sim/k_amf/rogue" : "gho/sim/k_amf")).u32(static_cast<std::uint32_t>(seed >> 32));
  w.u32(static_cast<std::uint32_t>(seed)).u32(static_cast<std::uint32_t>(ue));
  return crypto::hash_to_digest(w.bytes());
}

inline ScenarioReport run_baseline(const Scenario& sc) {
  ScenarioReport r;
  r.protocol = sc.protocol;
  r.ue_count = sc.ue_count;
  const auto trace = sc.protocol == Protocol::LteBaseline ? baseline::run_lte_handover(sc.ue_count)
                                                          : baseline::run_nr_handover(sc.ue_count);
  account(r, trace, sc.latency);

  // Each UE re-keys towards the t-BS; a UE with a rogue K_AMF fails key confirmation.
  const Bytes challenge = to_bytes("gho/sim/key-confirmation");
  for (std::size_t i = 0; i < sc.ue_count; ++i) {
    const auto network = baseline::handover_key_exchange(baseline::network_key_chain(k_amf_for(sc.rng_seed, i, false)));
    const auto ue = baseline::handover_key_exchange(
        baseline::derive_key_hierarchy(k_amf_for(sc.rng_seed, i, sc.corruption_set.contains(i))));
    (baseline::keys_agree(ue, network, challenge) ? r.accepted_ues : r.rejected_ues).insert(i);
  }
  return r;
}

/// Independent seed for one consumer of randomness within a scenario.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
  std::mt19937_64 mix(seed ^ (tag * 0x9E3779B97F4A7C15ull));
  return mix();
}

/// A terrestrial BS serving `ue_count` UEs, an AMF-issued UxNB that has
/// already been authenticated and holds f(x).
template <math::PrimeOrderGroup G>
struct GroupWorld {
  auth::Issuer<G> issuer;
  handover::BaseStationState<G> terrestrial;
  handover::BaseStationState<G> uxnb;
  std::vector<auth::KeyShare<G>> ue_shares;
  crypto::NonceSource nonces;
  std::optional<handover::EncryptedPayload<G>> setup_payload;

  static GroupWorld build(std::size_t ue_count, std::size_t threshold, std::uint64_t seed) {
    auto issuer = auth::initialize_group<G>(threshold, seed);
    std::vector<auth::KeyShare<G>> shares;
    shares.reserve(ue_count);
    for (std::size_t i = 0; i < ue_count; ++i) shares.push_back(issuer.issue_share(ue_name(i)));
    auto uxnb_share = issuer.issue_share("uxnb-0", auth::ShareRole::Uxnb);

    auto terrestrial =
        handover::BaseStationState<G>::terrestrial("terrestrial", issuer.params(), issuer.secret_function());
    for (const auto& s : shares) terrestrial.admit(s.credential());
    auto uxnb = handover::BaseStationState<G>::uxnb("uxnb-0", issuer.params(), uxnb_share);
    return GroupWorld{std::move(issuer), std::move(terrestrial), std::move(uxnb), std::move(shares),
                      crypto::NonceSource(substream(seed, 1)), std::nullopt};
  }

  /// UxNB authentication by the terrestrial BS and f(x) transfer.
  void authenticate_uxnb() {
    setup_payload = handover::authenticate_uxnb(terrestrial, uxnb.own_share()->credential(), nonces);
    if (!setup_payload) throw Error(Errc::InvalidScenario, "legitimate UxNB was refused");
    handover::receive_secret_function(uxnb, *setup_payload);
  }
};

template <math::PrimeOrderGroup G>
ScenarioReport run_group(const Scenario& sc) {
  ScenarioReport r;
  r.protocol = sc.protocol;
  r.ue_count = sc.ue_count;

  auto world = GroupWorld<G>::build(sc.ue_count, sc.threshold_t, sc.rng_seed);
  world.authenticate_uxnb();

  std::mt19937_64 rng(substream(sc.rng_seed, 2));
  std::vector<auth::PublicCredential<G>> creds;
  creds.reserve(sc.ue_count);
  for (std::size_t i = 0; i < sc.ue_count; ++i) {
    auto c = world.ue_shares[i].credential();
    if (sc.corruption_set.contains(i)) c.public_point += G::mul_base(math::ScalarOf<G>::random_nonzero(rng));
    creds.push_back(std::move(c));
  }

  const auto result = handover::group_handover(world.uxnb, creds);
  r.aggregate_hit = result.aggregate_hit;
  for (const auto& id : result.accepted) world.terrestrial.release(id);

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < sc.ue_count; ++i) index[ue_name(i)] = i;
  for (const auto& id : result.accepted) r.accepted_ues.insert(index.at(id));
  for (const auto& id : result.rejected) r.rejected_ues.insert(index.at(id));

  using baseline::MessageKind;
  using baseline::NodeId;
  using baseline::NodeRole;
  using baseline::Phase;
  baseline::SequenceTrace trace(baseline::NodeNames::group());
  const NodeId s{NodeRole::ServingBs}, t{NodeRole::TargetBs}, core{NodeRole::Core}, gw{NodeRole::Gateway};
  trace.emit(0, t, s, MessageKind::UxnbCredential, Phase::Setup);
  trace.emit(0, s, t, MessageKind::SecretFunctionTransfer, Phase::Setup);
  for (std::size_t i = 0; i < sc.ue_count; ++i)
    trace.emit(1, NodeId{NodeRole::Ue, static_cast<std::uint32_t>(i)}, t, MessageKind::UeCredentialTransfer,
               Phase::Preparation);
  trace.emit(2, t, t, MessageKind::GroupVerification, Phase::Preparation);
  for (auto i : r.accepted_ues) {
    const NodeId ue{NodeRole::Ue, static_cast<std::uint32_t>(i)};
    trace.emit(7, ue, t, MessageKind::Attach, Phase::CoreUpdate);
    trace.emit(8, t, ue, MessageKind::UplinkAllocation, Phase::CoreUpdate);
    trace.emit(9, t, core, MessageKind::PathSwitch, Phase::CoreUpdate);
    trace.emit(10, core, gw, MessageKind::BearerModify, Phase::CoreUpdate);
    trace.emit(11, gw, core, MessageKind::BearerModifyAck, Phase::CoreUpdate);
    trace.emit(12, core, t, MessageKind::PathSwitchAck, Phase::CoreUpdate);
  }
  account(r, trace, sc.latency);
  return r;
}

}  // namespace detail

/// Runs one scenario deterministically. Protocol errors are rethrown with the
/// scenario named in the message.
template <math::PrimeOrderGroup G>
ScenarioReport run_scenario(const Scenario& sc) {
  sc.validate();
  try {
    return sc.protocol == Protocol::GroupHandover ? detail::run_group<G>(sc) : detail::run_baseline(sc);
  } catch (const Error& e) {
    throw Error(e.code(), "scenario " + std::string(to_string(sc.protocol)) + " ue_count=" +
                              std::to_string(sc.ue_count) + " seed=" + std::to_string(sc.rng_seed) + ": " + e.what());
  }
}

}  // namespace gho::sim
