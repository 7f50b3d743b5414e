// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "gho/math/prime_field.hpp"

namespace gho::testing {

/// Small field for hand-checkable arithmetic.
struct Mod101Traits {
  using Int = std::uint32_t;
  using Wide = std::uint64_t;
  static constexpr std::size_t kBytes = 1;
  static const Int& modulus() {
    static const Int q = 101;
    return q;
  }
};
using F101 = math::PrimeField<Mod101Traits>;

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(GHO_GOLDEN_DIR) + "/" + name); }

}  // namespace gho::testing
