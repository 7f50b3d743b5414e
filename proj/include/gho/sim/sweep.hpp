// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gho/sim/adversary.hpp"
#include "gho/sim/scenario.hpp"

namespace gho::sim {

inline constexpr std::string_view kToolVersion = "gho 0.1.0";

struct SweepRequest {
  std::vector<std::size_t> ue_counts;
  std::vector<Protocol> protocols;
  std::uint64_t seed = 0;
  std::size_t threshold = 3;
  LatencyModel latency;
};

/// Protocol-major cross product, each scenario seeded identically.
template <math::PrimeOrderGroup G>
std::vector<ScenarioReport> sweep(const SweepRequest& req) {
  if (req.ue_counts.empty() || req.protocols.empty())
    throw Error(Errc::InvalidScenario, "sweep needs at least one ue_count and one protocol");
  std::vector<ScenarioReport> out;
  out.reserve(req.ue_counts.size() * req.protocols.size());
  for (auto p : req.protocols) {
    for (auto n : req.ue_counts) {
      Scenario sc;
      sc.protocol = p;
      sc.ue_count = n;
      sc.threshold_t = req.threshold;
      sc.rng_seed = req.seed;
      sc.latency = req.latency;
      out.push_back(run_scenario<G>(sc));
    }
  }
  return out;
}

/// Ordered key=value pairs written as leading `# key=value` CSV comments.
struct RunMetadata {
  std::vector<std::pair<std::string, std::string>> entries;

  RunMetadata& set(std::string key, std::string value) {
    for (auto& [k, v] : entries)
      if (k == key) {
        v = std::move(value);
        return *this;
      }
    entries.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  std::string header() const {
    std::string out;
    for (const auto& [k, v] : entries) out += "# " + k + "=" + v + "\n";
    return out;
  }
};

inline std::string handover_time_csv(const std::vector<ScenarioReport>& reports, const RunMetadata& meta) {
  std::string out = meta.header() + "protocol,ue_count,seconds\n";
  for (const auto& r : reports)
    out += std::string(to_string(r.protocol)) + "," + std::to_string(r.ue_count) + "," +
           format_seconds(r.handover_time) + "\n";
  return out;
}

/// Raw wire counts per link class, then the two derived columns:
/// UE_CORE (core-update steps) and BS_BS_HANDOVER (inter-BS request + ack).
inline std::string packet_counts_csv(const std::vector<ScenarioReport>& reports, const RunMetadata& meta) {
  std::string out = meta.header() + "protocol,ue_count,link_class,count\n";
  for (const auto& r : reports) {
    const std::string prefix = std::string(to_string(r.protocol)) + "," + std::to_string(r.ue_count) + ",";
    for (auto c : baseline::kWireLinkClasses)
      out += prefix + std::string(baseline::to_string(c)) + "," + std::to_string(r.packets_on(c)) + "\n";
    out += prefix + "UE_CORE," + std::to_string(r.ue_core_packets) + "\n";
    out += prefix + "BS_BS_HANDOVER," + std::to_string(r.bs_bs_handover_packets) + "\n";
  }
  return out;
}

inline std::string adversary_csv(const std::vector<AdversaryTally>& tallies, const RunMetadata& meta) {
  std::string out = meta.header() + "kind,trials,thwarted\n";
  for (const auto& t : tallies)
    out += std::string(to_string(t.kind)) + (t.control ? "+stolen_share" : "") + "," + std::to_string(t.trials) +
           "," + std::to_string(t.thwarted) + "\n";
  return out;
}

}  // namespace gho::sim
