// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "gho/error.hpp"

namespace gho::sim {

/// Data rate in kbit/s. Integer so that planner arithmetic is exact.
using Kbps = std::uint64_t;

inline constexpr Kbps kDefaultPerUeDemand = 1'100;
inline constexpr Kbps kDefaultTerrestrialCapacity = 100'000;
inline constexpr Kbps kDefaultUxnbCapacity = 160'000;
inline constexpr std::size_t kRuleOfThumbUesPerUxnb = 10;

/// Fewest UxNBs that absorb the load the terrestrial cell cannot carry.
inline std::size_t capacity_plan(std::size_t ue_count, Kbps per_ue_demand, Kbps terrestrial_capacity,
                                 Kbps uxnb_capacity) {
  if (per_ue_demand == 0 || terrestrial_capacity == 0 || uxnb_capacity == 0)
    throw Error(Errc::InvalidRate, "rates must be positive");
  const Kbps offered = static_cast<Kbps>(ue_count) * per_ue_demand;
  if (offered <= terrestrial_capacity) return 0;
  const Kbps overflow = offered - terrestrial_capacity;
  return static_cast<std::size_t>((overflow + uxnb_capacity - 1) / uxnb_capacity);
}

struct CapacityReport {
  std::size_t ue_count = 0;
  Kbps per_ue_demand = kDefaultPerUeDemand;
  Kbps terrestrial_capacity = kDefaultTerrestrialCapacity;
  Kbps uxnb_capacity = kDefaultUxnbCapacity;
  Kbps offered_load = 0;
  Kbps overflow = 0;
  std::size_t uxnbs_by_capacity = 0;
  std::size_t uxnbs_rule_of_thumb = 0;
  std::size_t ues_per_uxnb_by_capacity = 0;

  std::string render() const {
    std::ostringstream o;
    o << "ue_count=" << ue_count << '\n'
      << "per_ue_demand_kbps=" << per_ue_demand << '\n'
      << "terrestrial_capacity_kbps=" << terrestrial_capacity << '\n'
      << "uxnb_capacity_kbps=" << uxnb_capacity << '\n'
      << "offered_load_kbps=" << offered_load << '\n'
      << "overflow_kbps=" << overflow << '\n'
      << "uxnbs_required.capacity=" << uxnbs_by_capacity << '\n'
      << "uxnbs_required.rule_of_thumb=" << uxnbs_rule_of_thumb << '\n'
      << "ues_per_uxnb.capacity=" << ues_per_uxnb_by_capacity << '\n'
      << "ues_per_uxnb.rule_of_thumb=" << kRuleOfThumbUesPerUxnb << '\n';
    return o.str();
  }
};

/// Both bases side by side: capacity arithmetic, and one UxNB per ~10 UEs.
/// They disagree by an order of magnitude and are not reconciled.
inline CapacityReport capacity_report(std::size_t ue_count, Kbps per_ue_demand = kDefaultPerUeDemand,
                                      Kbps terrestrial_capacity = kDefaultTerrestrialCapacity,
                                      Kbps uxnb_capacity = kDefaultUxnbCapacity) {
  CapacityReport r;
  r.ue_count = ue_count;
  r.per_ue_demand = per_ue_demand;
  r.terrestrial_capacity = terrestrial_capacity;
  r.uxnb_capacity = uxnb_capacity;
  r.uxnbs_by_capacity = capacity_plan(ue_count, per_ue_demand, terrestrial_capacity, uxnb_capacity);
  r.offered_load = static_cast<Kbps>(ue_count) * per_ue_demand;
  r.overflow = r.offered_load > terrestrial_capacity ? r.offered_load - terrestrial_capacity : 0;
  r.uxnbs_rule_of_thumb = (ue_count + kRuleOfThumbUesPerUxnb - 1) / kRuleOfThumbUesPerUxnb;
  r.ues_per_uxnb_by_capacity = static_cast<std::size_t>(uxnb_capacity / per_ue_demand);
  return r;
}

}  // namespace gho::sim
