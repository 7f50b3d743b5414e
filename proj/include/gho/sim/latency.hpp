// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>

#include "gho/error.hpp"

namespace gho::sim {

/// Integer picoseconds keep 7.5 ns, 10 us and 0.05 s exact.
using Picoseconds = std::chrono::duration<std::int64_t, std::pico>;

/// Per-packet and per-procedure time constants of the analytic model.
struct LatencyModel {
  Picoseconds bs_bs_per_packet{7'500};                // 7.5 ns
  Picoseconds base_handover_time{50'000'000'000};     // 0.05 s
  Picoseconds completion_ack{10'000'000};             // 10 us

  void validate() const {
    if (bs_bs_per_packet.count() <= 0 || base_handover_time.count() <= 0 || completion_ack.count() <= 0)
      throw Error(Errc::InvalidScenario, "latency constants must be strictly positive");
  }
};

/// Fixed 12-decimal rendering, e.g. 0.050000000000.
inline std::string format_seconds(Picoseconds d) {
  constexpr std::int64_t kPerSecond = 1'000'000'000'000;
  const std::int64_t ps = d.count();
  std::ostringstream out;
  if (ps < 0) out << '-';
  const std::int64_t mag = ps < 0 ? -ps : ps;
  out << mag / kPerSecond << '.' << std::setw(12) << std::setfill('0') << mag % kPerSecond;
  return out.str();
}

}  // namespace gho::sim
