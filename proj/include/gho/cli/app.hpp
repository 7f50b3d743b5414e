// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gho/cli/config.hpp"
#include "gho/math/p256.hpp"
#include "gho/math/toy_curve.hpp"
#include "gho/sim/capacity.hpp"
#include "gho/sim/sweep.hpp"

namespace gho::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline sim::RunMetadata metadata_for(const CliConfig& cfg) {
  std::string overrides;
  for (const auto& k : cfg.overrides) overrides += (overrides.empty() ? "" : ",") + k;
  sim::RunMetadata m;
  m.set("tool", std::string(sim::kToolVersion))
      .set("command", std::string(to_string(*cfg.command)))
      .set("seed", std::to_string(cfg.seed))
      .set("group_size", std::string(to_string(cfg.group)))
      .set("threshold", std::to_string(cfg.threshold))
      .set("config_digest", cfg.digest())
      .set("overrides", overrides.empty() ? "none" : overrides);
  return m;
}

namespace detail {

inline std::filesystem::path write_artifact(const CliConfig& cfg, const std::string& name, const std::string& body) {
  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << body;
  if (!f) throw Error(Errc::InvalidScenario, "cannot write " + path.string());
  return path;
}

template <math::PrimeOrderGroup G>
int keygen(const CliConfig& cfg, std::ostream& out) {
  auto issuer = auth::initialize_group<G>(cfg.threshold, cfg.seed);
  std::string body = metadata_for(cfg).header();
  body += "params=" + to_hex(issuer.params().serialize()) + "\n";
  for (std::size_t i = 0; i < cfg.ue_count; ++i)
    body += "share." + sim::ue_name(i) + "=" + to_hex(issuer.issue_share(sim::ue_name(i)).serialize()) + "\n";
  body += "share.uxnb-0=" + to_hex(issuer.issue_share("uxnb-0", auth::ShareRole::Uxnb).serialize()) + "\n";
  if (cfg.out.empty()) out << body;
  else out << write_artifact(cfg, "keys.txt", body).string() << '\n';
  return kExitOk;
}

template <math::PrimeOrderGroup G>
int authenticate(const CliConfig& cfg, std::ostream& out) {
  auto world = sim::detail::GroupWorld<G>::build(cfg.ue_count, cfg.threshold, cfg.seed);
  world.authenticate_uxnb();
  out << metadata_for(cfg).header() << "uxnb=" << world.uxnb.id() << '\n'
      << "verdict=authenticated\n"
      << "secret_function_payload_bytes=" << world.setup_payload->serialize().size() << '\n';
  return kExitOk;
}

template <math::PrimeOrderGroup G>
int handover(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  sim::Scenario sc;
  sc.protocol = cfg.protocol;
  sc.ue_count = cfg.ue_count;
  sc.threshold_t = cfg.threshold;
  sc.corruption_set = cfg.corrupt;
  sc.rng_seed = cfg.seed;
  const auto report = sim::run_scenario<G>(sc);
  const std::string body = metadata_for(cfg).header() + report.render();
  out << body;
  if (!cfg.out.empty()) write_artifact(cfg, "handover.txt", body);
  if (report.rejected_ues != cfg.corrupt) {
    err << "error: rejected set differs from the scripted corruption set\n";
    return kExitFailure;
  }
  return kExitOk;
}

template <math::PrimeOrderGroup G>
int sweep(const CliConfig& cfg, std::ostream& out) {
  sim::SweepRequest req;
  req.ue_counts = cfg.ue_counts;
  req.protocols = cfg.protocols;
  req.seed = cfg.seed;
  req.threshold = cfg.threshold;
  const auto reports = sim::sweep<G>(req);
  const auto meta = metadata_for(cfg);
  out << write_artifact(cfg, "handover_time.csv", sim::handover_time_csv(reports, meta)).string() << '\n'
      << write_artifact(cfg, "packet_counts.csv", sim::packet_counts_csv(reports, meta)).string() << '\n';
  return kExitOk;
}

template <math::PrimeOrderGroup G>
int adversary(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if constexpr (std::is_same_v<G, math::ToyCurve>)
    err << "warning: the toy group's 16-bit scalars let guessing attacks succeed by chance; "
           "use --group standard for security claims\n";
  std::vector<sim::AdversaryTally> tallies;
  bool expected = true;
  for (bool control : {false, true}) {
    for (auto kind : sim::kAllAdversaries) {
      tallies.push_back(sim::adversary_trials<G>({kind, control}, cfg.trials, cfg.seed, cfg.threshold));
      const auto& t = tallies.back();
      expected = expected && (control ? t.thwarted == 0 : t.thwarted == t.trials);
    }
  }
  out << write_artifact(cfg, "adversary.csv", sim::adversary_csv(tallies, metadata_for(cfg))).string() << '\n';
  if (!expected) {
    err << "error: an adversary outcome differed from expectation (see adversary.csv)\n";
    return kExitFailure;
  }
  return kExitOk;
}

inline int capacity(const CliConfig& cfg, std::ostream& out) {
  out << metadata_for(cfg).header()
      << sim::capacity_report(cfg.ue_count, cfg.per_ue_kbps, cfg.terrestrial_kbps, cfg.uxnb_kbps).render();
  return kExitOk;
}

template <math::PrimeOrderGroup G>
int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (*cfg.command) {
    case Command::Keygen: return keygen<G>(cfg, out);
    case Command::AuthenticateUxnb: return authenticate<G>(cfg, out);
    case Command::Handover: return handover<G>(cfg, out, err);
    case Command::Sweep: return sweep<G>(cfg, out);
    case Command::Adversary: return adversary<G>(cfg, out, err);
    case Command::Capacity: return capacity(cfg, out);
  }
  return kExitUsage;
}

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

inline constexpr FlagSpec kFlags[] = {
    {"--ue-counts", "ue_counts", "UE count range A:B (sweep)"},
    {"--protocols", "protocols", "comma list of lte, nr, group (sweep)"},
    {"--protocol", "protocol", "lte, nr or group (handover)"},
    {"--ue-count", "ue_count", "number of UEs"},
    {"--threshold", "threshold", "secret-sharing threshold t"},
    {"--corrupt", "corrupt", "comma list of UE indices with corrupted credentials"},
    {"--seed", "seed", "RNG seed"},
    {"--group", "group", "toy or standard"},
    {"--out", "out", "output directory"},
    {"--trials", "trials", "trials per adversary (adversary)"},
    {"--per-ue-kbps", "per_ue_kbps", "per-UE demand (capacity)"},
    {"--terrestrial-kbps", "terrestrial_kbps", "terrestrial BS capacity (capacity)"},
    {"--uxnb-kbps", "uxnb_kbps", "UxNB capacity (capacity)"},
};

}  // namespace detail

/// Entry point. Exit 0 on success, 1 on an unscripted scenario failure,
/// 2 on a usage or config error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Group handover simulator for drone-mounted base stations", "gho"};
  app.set_version_flag("--version", std::string(sim::kToolVersion));
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file; flags override its values");

  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;
  for (const auto& f : detail::kFlags) opts[f.key] = app.add_option(f.flag, raw[f.key], f.help);

  std::optional<Command> sub;
  for (const auto& [c, name] : kCommands) {
    auto* s = app.add_subcommand(std::string(name));
    s->fallthrough();
    s->callback([&sub, c = c] { sub = c; });
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << sim::kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  CliConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const ParseError& e) {
    err << "config error: " << config_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "config error: " << config_path << ": " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& f : detail::kFlags) {
    if (opts[f.key]->count() == 0) continue;
    try {
      apply_setting(cfg, f.key, raw[f.key], Source::Flag);
    } catch (const SchemaError& e) {
      err << "usage error: " << f.flag << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (sub) {
    if (cfg.command && cfg.command != sub) cfg.overrides.insert("command");
    cfg.command = sub;
  }

  try {
    validate(cfg);
  } catch (const SchemaError& e) {
    err << "usage error: " << e.what() << " (see gho --help)\n";
    return kExitUsage;
  }

  try {
    return cfg.group == GroupSize::Toy ? detail::dispatch<math::ToyCurve>(cfg, out, err)
                                       : detail::dispatch<math::P256>(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gho::cli
