// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

// Prints the standard handover message sequence for two UEs and the
// per-link counts.

#include <iostream>

#include "gho/baseline/sequence.hpp"

int main() {
  const auto trace = gho::baseline::run_nr_handover(2);
  std::cout << trace.to_text() << '\n';
  for (auto c : gho::baseline::kWireLinkClasses)
    std::cout << gho::baseline::to_string(c) << ": " << trace.count(c) << '\n';
  std::cout << "inter-BS handover packets: " << trace.bs_bs_handover_packets() << '\n';
}
