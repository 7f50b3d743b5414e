// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "gho/sim/scenario.hpp"

namespace gho::sim {

using baseline::MessageKind;

struct Frame {
  MessageKind kind;
  Bytes bytes;
};

/// Everything that crossed the simulated air interface or backhaul.
class WireTap {
 public:
  const Frame& transmit(MessageKind kind, Bytes bytes) {
    frames_.push_back(Frame{kind, std::move(bytes)});
    return frames_.back();
  }

  const std::vector<Frame>& frames() const noexcept { return frames_; }

  bool observed(MessageKind kind, ByteView bytes) const {
    return std::any_of(frames_.begin(), frames_.end(), [&](const Frame& f) {
      return f.kind == kind && std::equal(f.bytes.begin(), f.bytes.end(), bytes.begin(), bytes.end());
    });
  }

 private:
  std::vector<Frame> frames_;
};

/// The attacker's memory. Only whole frames that were actually transmitted
/// may be recorded; anything else is a harness violation. The stolen-share
/// slot exists for the control adversary only.
class AdversaryKnowledge {
 public:
  explicit AdversaryKnowledge(const WireTap& tap) : tap_(&tap) {}

  void capture(MessageKind kind, ByteView bytes) {
    if (!tap_->observed(kind, bytes))
      throw Error(Errc::WireKnowledgeViolation, "adversary tried to record bytes never seen on the wire");
    frames_.push_back(Frame{kind, Bytes(bytes.begin(), bytes.end())});
  }

  void capture(const Frame& f) { capture(f.kind, f.bytes); }

  void grant_stolen_share(Bytes share) { stolen_.push_back(std::move(share)); }

  const std::vector<Frame>& frames() const noexcept { return frames_; }
  const std::vector<Bytes>& stolen() const noexcept { return stolen_; }

 private:
  const WireTap* tap_;
  std::vector<Frame> frames_;
  std::vector<Bytes> stolen_;
};

/// Every scalar an attacker could plausibly try as a share key: each scalar
/// field of each captured frame, hashes of the point and ciphertext fields,
/// and any stolen material.
template <math::PrimeOrderGroup G>
std::vector<math::ScalarOf<G>> candidate_shares(const AdversaryKnowledge& k) {
  using Scalar = math::ScalarOf<G>;
  std::vector<Scalar> out;
  auto add_digest = [&](ByteView b) { out.push_back(Scalar::from_digest(crypto::hash_to_digest(b))); };
  auto add_payload = [&](const handover::EncryptedPayload<G>& p) {
    out.push_back(p.key_hint);
    add_digest(p.key_hint.to_bytes());
    add_digest(p.nonce);
    add_digest(p.ciphertext);
  };
  for (const auto& f : k.frames()) {
    try {
      switch (f.kind) {
        case MessageKind::UeCredentialTransfer:
        case MessageKind::UxnbCredential: {
          auto c = auth::PublicCredential<G>::deserialize(f.bytes);
          out.push_back(c.public_x);
          add_digest(c.public_x.to_bytes());
          add_digest(G::encode_point(c.public_point));
          break;
        }
        case MessageKind::SecretFunctionTransfer:
          add_payload(handover::EncryptedPayload<G>::deserialize(f.bytes));
          break;
        case MessageKind::ServiceRequest:
          add_payload(handover::ServiceRequest<G>::deserialize(f.bytes).payload);
          break;
        default:
          add_digest(f.bytes);
      }
    } catch (const Error&) {
      add_digest(f.bytes);
    }
  }
  for (const auto& s : k.stolen()) out.push_back(Scalar::from_bytes(s));
  return out;
}

struct AdversaryVerdict {
  AdversaryOutcome outcome = AdversaryOutcome::Thwarted;
  std::string detail;
};

namespace detail {

constexpr std::size_t kAdversaryUes = 5;

/// A rogue UxNB replays a legitimate UxNB's (x_i, f(x_i)P).
template <math::PrimeOrderGroup G>
AdversaryVerdict replay_uxnb_credential(std::uint64_t seed, std::size_t threshold, bool control) {
  auto world = GroupWorld<G>::build(kAdversaryUes, threshold, seed);
  WireTap tap;
  AdversaryKnowledge adv(tap);

  const auto legit = world.uxnb.own_share()->credential();
  adv.capture(tap.transmit(MessageKind::UxnbCredential, legit.serialize()));
  world.authenticate_uxnb();
  adv.capture(tap.transmit(MessageKind::SecretFunctionTransfer, world.setup_payload->serialize()));
  if (control) adv.grant_stolen_share(world.uxnb.own_share()->private_share.to_bytes());

  // Replay the captured credential as the rogue's own.
  const auto replayed = auth::PublicCredential<G>::deserialize(adv.frames().front().bytes);
  auto payload = handover::authenticate_uxnb(world.terrestrial, replayed, world.nonces);
  if (!payload) return {AdversaryOutcome::Thwarted, "replayed credential refused outright"};
  tap.transmit(MessageKind::SecretFunctionTransfer, payload->serialize());

  const auto candidates = candidate_shares<G>(adv);
  for (const auto& guess : candidates) {
    auto rogue = handover::BaseStationState<G>::uxnb(
        "rogue-uxnb", world.terrestrial.params(),
        auth::KeyShare<G>{replayed.ue_id, replayed.public_x, guess, replayed.public_point});
    try {
      handover::receive_secret_function(rogue, *payload);
      return {AdversaryOutcome::Succeeded, "rogue UxNB decrypted f(x)"};
    } catch (const Error& e) {
      if (e.code() != Errc::DecryptionFailure && e.code() != Errc::PolynomialMismatch) throw;
    }
  }
  return {AdversaryOutcome::Thwarted, "credential passed on replay; " + std::to_string(candidates.size()) +
                                          " candidate keys failed to decrypt f(x)"};
}

/// A rogue UE replays a legitimate UE's credential, then
/// must talk to the UxNB under that UE's key.
template <math::PrimeOrderGroup G>
AdversaryVerdict replay_ue_credential(std::uint64_t seed, std::size_t threshold, bool control) {
  auto world = GroupWorld<G>::build(kAdversaryUes, threshold, seed);
  world.authenticate_uxnb();
  WireTap tap;
  AdversaryKnowledge adv(tap);

  std::vector<auth::PublicCredential<G>> creds;
  for (const auto& s : world.ue_shares) {
    creds.push_back(s.credential());
    tap.transmit(MessageKind::UeCredentialTransfer, creds.back().serialize());
  }
  handover::group_handover(world.uxnb, creds);

  const auto& victim = world.ue_shares.front();
  const auto req = handover::ue_send_service_request(victim, to_bytes("victim traffic"), world.nonces);
  if (!handover::bs_handle_service_request(world.uxnb, req)) throw Error(Errc::InvalidScenario, "legit request refused");

  adv.capture(tap.frames().front());
  adv.capture(tap.transmit(MessageKind::ServiceRequest, req.serialize()));
  if (control) adv.grant_stolen_share(victim.private_share.to_bytes());

  const auto replayed = auth::PublicCredential<G>::deserialize(adv.frames().front().bytes);
  const auto batch = handover::group_handover(world.uxnb, std::vector<auth::PublicCredential<G>>{replayed});
  const bool passed_confirmation = batch.rejected.empty();

  // Verbatim replay of captured traffic.
  const auto captured_req = handover::ServiceRequest<G>::deserialize(adv.frames().back().bytes);
  if (handover::bs_handle_service_request(world.uxnb, captured_req))
    return {AdversaryOutcome::Succeeded, "verbatim replay of a service request accepted"};

  crypto::NonceSource rogue_nonces(substream(seed, 99));
  const auto candidates = candidate_shares<G>(adv);
  for (const auto& guess : candidates) {
    const auth::KeyShare<G> forged{replayed.ue_id, replayed.public_x, guess, replayed.public_point};
    const auto attempt = handover::ue_send_service_request(forged, to_bytes("rogue traffic"), rogue_nonces);
    if (handover::bs_handle_service_request(world.uxnb, attempt))
      return {AdversaryOutcome::Succeeded, "forged service request accepted"};
  }
  return {AdversaryOutcome::Thwarted, std::string(passed_confirmation ? "credential passed on replay; " : "") +
                                          "replayed request and " + std::to_string(candidates.size()) +
                                          " forged requests rejected"};
}

/// A passive listener records post-handover traffic.
template <math::PrimeOrderGroup G>
AdversaryVerdict eavesdrop_service_traffic(std::uint64_t seed, std::size_t threshold, bool control,
                                           std::size_t requests = 100) {
  auto world = GroupWorld<G>::build(kAdversaryUes, threshold, seed);
  world.authenticate_uxnb();
  WireTap tap;
  AdversaryKnowledge adv(tap);

  std::vector<auth::PublicCredential<G>> creds;
  for (const auto& s : world.ue_shares) {
    creds.push_back(s.credential());
    adv.capture(tap.transmit(MessageKind::UeCredentialTransfer, creds.back().serialize()));
  }
  handover::group_handover(world.uxnb, creds);
  if (control) adv.grant_stolen_share(world.ue_shares.front().private_share.to_bytes());

  std::vector<Bytes> plaintexts;
  for (std::size_t n = 0; n < requests; ++n) {
    const auto& sender = world.ue_shares[n % world.ue_shares.size()];
    plaintexts.push_back(to_bytes("video segment " + std::to_string(n) + " for " + sender.ue_id));
    const auto req = handover::ue_send_service_request(sender, plaintexts.back(), world.nonces);
    adv.capture(tap.transmit(MessageKind::ServiceRequest, req.serialize()));
  }

  const auto candidates = candidate_shares<G>(adv);
  std::size_t recovered = 0;
  for (const auto& f : adv.frames()) {
    if (f.kind != MessageKind::ServiceRequest) continue;
    const auto req = handover::ServiceRequest<G>::deserialize(f.bytes);
    const Bytes aad = handover::detail::aad(handover::kServiceAad, req.sender_x);
    for (const auto& guess : candidates) {
      auto plain = crypto::open(handover::derive_symmetric_key(guess), req.payload.nonce, aad, req.payload.ciphertext);
      if (plain && std::find(plaintexts.begin(), plaintexts.end(), *plain) != plaintexts.end()) {
        ++recovered;
        break;
      }
    }
  }
  for (const auto& f : tap.frames())
    for (const auto& p : plaintexts)
      if (contains_run(f.bytes, p)) ++recovered;

  if (recovered > 0) return {AdversaryOutcome::Succeeded, std::to_string(recovered) + " plaintexts recovered"};
  return {AdversaryOutcome::Thwarted, "0 of " + std::to_string(requests) + " plaintexts recovered with " +
                                          std::to_string(candidates.size()) + " candidate keys"};
}

/// A fake BS runs a handover with the t-BS so the network-side NCC moves
/// while the UE's does not. Thwarted means the next genuine exchange
/// exposes the mismatch.
inline AdversaryVerdict fake_bs_desync(std::uint64_t seed, bool control) {
  const Bytes k_amf = k_amf_for(seed, 0, false);
  auto ue = baseline::derive_key_hierarchy(k_amf);
  auto network = baseline::network_key_chain(k_amf);
  const Bytes challenge = to_bytes("gho/sim/desync-challenge");

  ue = baseline::handover_key_exchange(ue);
  network = baseline::handover_key_exchange(network);
  if (!baseline::keys_agree(ue, network, challenge)) throw Error(Errc::InvalidScenario, "honest handover disagreed");

  network = baseline::handover_key_exchange(network, {.target_cell_id = 0xfa4e, .arfcn = 1});
  if (control) ue = baseline::handover_key_exchange(ue, {.target_cell_id = 0xfa4e, .arfcn = 1});

  ue = baseline::handover_key_exchange(ue);
  network = baseline::handover_key_exchange(network);
  if (baseline::keys_agree(ue, network, challenge))
    return {AdversaryOutcome::Succeeded, "NCC advanced without detection (ncc=" + std::to_string(network.ncc) + ")"};
  return {AdversaryOutcome::Thwarted, "key mismatch at ncc ue=" + std::to_string(ue.ncc) +
                                          " network=" + std::to_string(network.ncc)};
}

}  // namespace detail

template <math::PrimeOrderGroup G>
AdversaryVerdict execute_adversary(const AdversaryScript& script, std::uint64_t seed, std::size_t threshold) {
  switch (script.kind) {
    case AdversaryKind::ReplayUxnbCredential:
      return detail::replay_uxnb_credential<G>(seed, threshold, script.stolen_share_control);
    case AdversaryKind::ReplayUeCredential:
      return detail::replay_ue_credential<G>(seed, threshold, script.stolen_share_control);
    case AdversaryKind::EavesdropServiceTraffic:
      return detail::eavesdrop_service_traffic<G>(seed, threshold, script.stolen_share_control);
    case AdversaryKind::FakeBsDesync:
      return detail::fake_bs_desync(seed, script.stolen_share_control);
  }
  throw Error(Errc::InvalidScenario, "unknown adversary kind");
}

/// The scenario's normal run plus the scripted attack against a fresh
/// instance seeded from the same seed.
template <math::PrimeOrderGroup G>
ScenarioReport run_adversary(const Scenario& sc) {
  if (!sc.adversary) throw Error(Errc::InvalidScenario, "run_adversary needs an adversary script");
  Scenario honest = sc;
  honest.adversary.reset();
  auto report = run_scenario<G>(honest);
  const auto verdict = execute_adversary<G>(*sc.adversary, detail::substream(sc.rng_seed, 7), sc.threshold_t);
  report.adversary_outcome = verdict.outcome;
  report.adversary_detail = verdict.detail;
  return report;
}

struct AdversaryTally {
  AdversaryKind kind;
  bool control = false;
  std::size_t trials = 0;
  std::size_t thwarted = 0;
};

/// Seeds seed, seed+1, ... seed+trials-1.
template <math::PrimeOrderGroup G>
AdversaryTally adversary_trials(const AdversaryScript& script, std::size_t trials, std::uint64_t seed,
                                std::size_t threshold = 3) {
  AdversaryTally t{script.kind, script.stolen_share_control, trials, 0};
  for (std::size_t i = 0; i < trials; ++i)
    if (execute_adversary<G>(script, seed + i, threshold).outcome == AdversaryOutcome::Thwarted) ++t.thwarted;
  return t;
}

}  // namespace gho::sim
