// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gho/crypto/hash.hpp"
#include "gho/sim/capacity.hpp"
#include "gho/sim/scenario.hpp"

namespace gho::cli {

enum class Command { Keygen, AuthenticateUxnb, Handover, Sweep, Adversary, Capacity };

inline constexpr std::array<std::pair<Command, std::string_view>, 6> kCommands = {{
    {Command::Keygen, "keygen"},
    {Command::AuthenticateUxnb, "authenticate-uxnb"},
    {Command::Handover, "handover"},
    {Command::Sweep, "sweep"},
    {Command::Adversary, "adversary"},
    {Command::Capacity, "capacity"},
}};

constexpr std::string_view to_string(Command c) noexcept {
  for (const auto& [k, name] : kCommands)
    if (k == c) return name;
  return "?";
}

enum class GroupSize { Toy, Standard };

constexpr std::string_view to_string(GroupSize g) noexcept { return g == GroupSize::Toy ? "toy" : "standard"; }

/// Malformed config text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

/// Well-formed text with an unknown key or an out-of-range value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string key, const std::string& msg)
      : std::runtime_error("'" + key + "': " + msg), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

enum class Source { Default, File, Flag };

struct CliConfig {
  std::optional<Command> command;
  sim::Protocol protocol = sim::Protocol::GroupHandover;
  std::vector<sim::Protocol> protocols = {sim::Protocol::LteBaseline, sim::Protocol::NrBaseline,
                                          sim::Protocol::GroupHandover};
  std::vector<std::size_t> ue_counts;  // expanded from A:B
  std::string ue_counts_text = "1:100";
  std::size_t ue_count = 10;
  std::size_t threshold = 3;
  std::set<std::size_t> corrupt;
  std::uint64_t seed = 0;
  GroupSize group = GroupSize::Toy;
  std::string out;
  std::size_t trials = 100;
  sim::Kbps per_ue_kbps = sim::kDefaultPerUeDemand;
  sim::Kbps terrestrial_kbps = sim::kDefaultTerrestrialCapacity;
  sim::Kbps uxnb_kbps = sim::kDefaultUxnbCapacity;

  std::map<std::string, Source> sources;  // keys set by file or flag
  std::set<std::string> overrides;        // keys set by file, then by flag

  CliConfig() { ue_counts = expand_range(1, 100); }

  static std::vector<std::size_t> expand_range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v;
    for (std::size_t n = lo; n <= hi; ++n) v.push_back(n);
    return v;
  }

  /// Canonical effective settings, one key=value per line, output path excluded.
  std::string canonical() const {
    std::ostringstream o;
    auto list = [](const auto& xs, auto&& fmt) {
      std::string s;
      for (const auto& x : xs) s += (s.empty() ? "" : ",") + fmt(x);
      return s;
    };
    o << "command=" << (command ? to_string(*command) : "") << '\n'
      << "corrupt=" << list(corrupt, [](auto v) { return std::to_string(v); }) << '\n'
      << "group=" << to_string(group) << '\n'
      << "per_ue_kbps=" << per_ue_kbps << '\n'
      << "protocol=" << to_string(protocol) << '\n'
      << "protocols=" << list(protocols, [](auto p) { return std::string(to_string(p)); }) << '\n'
      << "seed=" << seed << '\n'
      << "terrestrial_kbps=" << terrestrial_kbps << '\n'
      << "threshold=" << threshold << '\n'
      << "trials=" << trials << '\n'
      << "ue_count=" << ue_count << '\n'
      << "ue_counts=" << ue_counts_text << '\n'
      << "uxnb_kbps=" << uxnb_kbps << '\n';
    return o.str();
  }

  std::string digest() const { return to_hex(crypto::hash_to_digest(to_bytes(canonical()))); }
};

inline const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {"command", "corrupt",   "group",     "out",      "per_ue_kbps",
                                             "protocol", "protocols", "seed",     "terrestrial_kbps",
                                             "threshold", "trials",   "ue_count", "ue_counts", "uxnb_kbps"};
  return keys;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::uint64_t parse_uint(const std::string& key, std::string_view v, std::uint64_t lo,
                                std::uint64_t hi = std::numeric_limits<std::uint64_t>::max()) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  const std::string range = "[" + std::to_string(lo) + ", " +
                            (hi == std::numeric_limits<std::uint64_t>::max() ? "2^64)" : std::to_string(hi) + "]");
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
    throw SchemaError(key, "expected an integer in " + range + ", got '" + std::string(v) + "'");
  if (out < lo || out > hi) throw SchemaError(key, std::string(v) + " outside " + range);
  return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline sim::Protocol parse_protocol_value(const std::string& key, std::string_view v) {
  try {
    return sim::parse_protocol(v);
  } catch (const Error& e) {
    throw SchemaError(key, e.what());
  }
}

}  // namespace detail

/// Validates and stores one setting. Shared by the file loader and the
/// command-line flags so both are held to the same schema.
inline void apply_setting(CliConfig& cfg, const std::string& key, std::string_view raw, Source source) {
  using detail::parse_uint;
  const auto value = detail::trim(raw);
  if (!known_keys().contains(key)) throw SchemaError(key, "unknown key");

  if (key == "command") {
    bool found = false;
    for (const auto& [c, name] : kCommands)
      if (name == value) cfg.command = c, found = true;
    if (!found)
      throw SchemaError(key, "expected keygen, authenticate-uxnb, handover, sweep, adversary or capacity");
  } else if (key == "protocol") {
    cfg.protocol = detail::parse_protocol_value(key, value);
  } else if (key == "protocols") {
    std::vector<sim::Protocol> ps;
    for (auto p : detail::split(value, ',')) ps.push_back(detail::parse_protocol_value(key, p));
    cfg.protocols = std::move(ps);
  } else if (key == "ue_counts") {
    const auto parts = detail::split(value, ':');
    if (parts.size() != 2) throw SchemaError(key, "expected A:B with 1 <= A <= B");
    const auto lo = parse_uint(key, parts[0], 1, 1'000'000);
    const auto hi = parse_uint(key, parts[1], lo, 1'000'000);
    cfg.ue_counts = CliConfig::expand_range(lo, hi);
    cfg.ue_counts_text = std::to_string(lo) + ":" + std::to_string(hi);
  } else if (key == "ue_count") {
    cfg.ue_count = parse_uint(key, value, 0, 1'000'000);
  } else if (key == "threshold") {
    cfg.threshold = parse_uint(key, value, 1, 1'000);
  } else if (key == "corrupt") {
    std::set<std::size_t> c;
    if (!value.empty())
      for (auto i : detail::split(value, ',')) c.insert(parse_uint(key, i, 0, 1'000'000));
    cfg.corrupt = std::move(c);
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value, 0);
  } else if (key == "group") {
    if (value == "toy") cfg.group = GroupSize::Toy;
    else if (value == "standard") cfg.group = GroupSize::Standard;
    else throw SchemaError(key, "expected toy or standard");
  } else if (key == "out") {
    if (value.empty()) throw SchemaError(key, "empty path");
    cfg.out = std::string(value);
  } else if (key == "trials") {
    cfg.trials = parse_uint(key, value, 1, 1'000'000);
  } else if (key == "per_ue_kbps") {
    cfg.per_ue_kbps = parse_uint(key, value, 1);
  } else if (key == "terrestrial_kbps") {
    cfg.terrestrial_kbps = parse_uint(key, value, 1);
  } else if (key == "uxnb_kbps") {
    cfg.uxnb_kbps = parse_uint(key, value, 1);
  }

  auto it = cfg.sources.find(key);
  if (source == Source::Flag && it != cfg.sources.end() && it->second == Source::File) cfg.overrides.insert(key);
  cfg.sources[key] = source;
}

/// Scenario invariants that depend on several keys at once.
inline void validate(const CliConfig& cfg) {
  if (!cfg.command) throw SchemaError("command", "no command given");
  const bool scenario = *cfg.command == Command::Handover || *cfg.command == Command::Keygen ||
                        *cfg.command == Command::AuthenticateUxnb;
  if (scenario && cfg.ue_count < 1) throw SchemaError("ue_count", "must be at least 1 for " +
                                                                       std::string(to_string(*cfg.command)));
  for (auto i : cfg.corrupt)
    if (i >= cfg.ue_count)
      throw SchemaError("corrupt", "index " + std::to_string(i) + " outside [0, " + std::to_string(cfg.ue_count) + ")");
  if (cfg.protocols.empty()) throw SchemaError("protocols", "empty list");
}

/// `key = value` lines; `#` starts a comment line; blank lines ignored.
inline CliConfig parse_config(std::istream& in, CliConfig cfg = {}) {
  std::set<std::string> seen;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, line.size() + 1, "expected '='");
    const auto key_view = detail::trim(std::string_view(line).substr(0, eq));
    if (key_view.empty()) throw ParseError(lineno, first + 1, "missing key before '='");
    for (std::size_t i = 0; i < key_view.size(); ++i) {
      const char c = key_view[i];
      if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
        throw ParseError(lineno, first + i + 1, std::string("invalid character '") + c + "' in key");
    }
    const std::string key(key_view);
    if (!seen.insert(key).second) throw ParseError(lineno, first + 1, "duplicate key '" + key + "'");
    apply_setting(cfg, key, std::string_view(line).substr(eq + 1), Source::File);
  }
  return cfg;
}

inline CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("config", "cannot open '" + path + "'");
  return parse_config(in);
}

}  // namespace gho::cli
