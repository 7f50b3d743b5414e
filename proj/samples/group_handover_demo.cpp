// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

// A UxNB joins a cell, receives the secret function, and takes over a batch
// of UEs, one of which presents a tampered public point.

#include <iostream>

#include "gho/handover/protocol.hpp"
#include "gho/math/p256.hpp"

int main() {
  using G = gho::math::P256;
  namespace auth = gho::auth;
  namespace ho = gho::handover;

  auto issuer = auth::initialize_group<G>(/*threshold=*/3, /*seed=*/2026);
  std::vector<auth::KeyShare<G>> ues;
  for (int i = 0; i < 8; ++i) ues.push_back(issuer.issue_share("ue-" + std::to_string(i)));
  const auto uxnb_share = issuer.issue_share("uxnb-0", auth::ShareRole::Uxnb);

  auto terrestrial = ho::BaseStationState<G>::terrestrial("enb-1", issuer.params(), issuer.secret_function());
  auto uxnb = ho::BaseStationState<G>::uxnb("uxnb-0", issuer.params(), uxnb_share);

  gho::crypto::NonceSource nonces;
  const auto payload = ho::authenticate_uxnb(terrestrial, uxnb_share.credential(), nonces);
  if (!payload) return 1;
  ho::receive_secret_function(uxnb, *payload);
  std::cout << "uxnb-0 holds f(x): " << std::boolalpha << uxnb.has_secret_function() << '\n';

  std::vector<auth::PublicCredential<G>> batch;
  for (const auto& s : ues) batch.push_back(s.credential());
  batch[5].public_point += G::generator();

  const auto result = ho::group_handover(uxnb, batch);
  std::cout << "aggregate check passed: " << result.aggregate_hit << '\n'
            << "accepted: " << result.accepted.size() << ", rejected:";
  for (const auto& id : result.rejected) std::cout << ' ' << id;
  std::cout << "\npoint comparisons: " << result.point_comparisons << '\n';

  const auto req = ho::ue_send_service_request(ues[0], gho::to_bytes("hello from ue-0"), nonces);
  const auto plain = ho::bs_handle_service_request(uxnb, req);
  std::cout << "service request: " << (plain ? std::string(plain->begin(), plain->end()) : "refused") << '\n';
}
