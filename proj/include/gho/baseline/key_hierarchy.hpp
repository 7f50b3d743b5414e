// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>

#include "gho/crypto/hash.hpp"

namespace gho::baseline {

// 5G key hierarchy, modelled with a labeled hash as the key-derivation
// function: KDF(parent, label, ncc) = SHA-256(parent || label || ncc_be32).
//
//   K_AMF --+--> K_gNB --+--> K_gNB-UE-INT
//           |            +--> K_gNB-UE-ENC
//           +--> K_AMF-UE-INT
//           +--> K_AMF-UE-ENC
//
// A handover derives K_gNB* from the active gNB key, the next NCC value and
// parameters shared by every BS under the same AMF, then re-derives the
// gNB-UE keys from K_gNB*.

enum class KeyNode { AmfUeInt, AmfUeEnc, GnbUeInt, GnbUeEnc };

constexpr std::string_view to_string(KeyNode k) noexcept {
  switch (k) {
    case KeyNode::AmfUeInt: return "K_AMF-UE-INT";
    case KeyNode::AmfUeEnc: return "K_AMF-UE-ENC";
    case KeyNode::GnbUeInt: return "K_gNB-UE-INT";
    case KeyNode::GnbUeEnc: return "K_gNB-UE-ENC";
  }
  return "?";
}

/// Shared security parameters known to the UE and every BS under one AMF.
struct HandoverParams {
  std::uint32_t target_cell_id = 1;
  std::uint32_t arfcn = 632628;
};

struct KeyChainState {
  Bytes k_amf;
  Bytes k_gnb;
  std::optional<Bytes> k_gnb_star;
  std::uint32_t ncc = 0;
  std::map<KeyNode, Bytes> derived;

  /// Key that protects the current gNB-UE link.
  const Bytes& active_gnb_key() const { return k_gnb_star ? *k_gnb_star : k_gnb; }

  friend bool operator==(const KeyChainState&, const KeyChainState&) = default;
};

inline Bytes kdf(ByteView parent, std::string_view label, std::uint32_t ncc = 0) {
  ByteWriter n;
  n.u32(ncc);
  return crypto::hash_to_digest({parent, to_bytes(label), n.bytes()});
}

namespace labels {
inline constexpr std::string_view kGnb = "K_gNB";
inline constexpr std::string_view kGnbStar = "K_gNB*";
inline constexpr std::string_view kAmfUeInt = "K_AMF-UE-INT";
inline constexpr std::string_view kAmfUeEnc = "K_AMF-UE-ENC";
inline constexpr std::string_view kGnbUeInt = "K_gNB-UE-INT";
inline constexpr std::string_view kGnbUeEnc = "K_gNB-UE-ENC";
}  // namespace labels

/// What the AMF derives and keeps; K_gNB is what it ships to the BS.
struct AmfKeys {
  Bytes k_gnb;
  Bytes amf_ue_int;
  Bytes amf_ue_enc;
};

inline AmfKeys amf_derive(ByteView k_amf) {
  if (k_amf.empty()) throw Error(Errc::EmptyKey, "K_AMF is empty");
  return {kdf(k_amf, labels::kGnb), kdf(k_amf, labels::kAmfUeInt), kdf(k_amf, labels::kAmfUeEnc)};
}

/// BS-side derivation of the gNB-UE keys from whatever gNB key is active.
inline std::pair<Bytes, Bytes> gnb_ue_keys(ByteView gnb_key) {
  return {kdf(gnb_key, labels::kGnbUeInt), kdf(gnb_key, labels::kGnbUeEnc)};
}

/// UE-side derivation of the whole chain from K_AMF.
inline KeyChainState derive_key_hierarchy(ByteView k_amf) {
  if (k_amf.empty()) throw Error(Errc::EmptyKey, "K_AMF is empty");
  KeyChainState s;
  s.k_amf.assign(k_amf.begin(), k_amf.end());
  s.k_gnb = kdf(k_amf, labels::kGnb);
  s.derived[KeyNode::AmfUeInt] = kdf(k_amf, labels::kAmfUeInt);
  s.derived[KeyNode::AmfUeEnc] = kdf(k_amf, labels::kAmfUeEnc);
  s.derived[KeyNode::GnbUeInt] = kdf(s.k_gnb, labels::kGnbUeInt);
  s.derived[KeyNode::GnbUeEnc] = kdf(s.k_gnb, labels::kGnbUeEnc);
  return s;
}

/// Network-side view assembled the way the keys actually travel: the AMF
/// derives its keys and K_gNB, the BS derives the gNB-UE keys on receipt.
inline KeyChainState network_key_chain(ByteView k_amf) {
  const AmfKeys amf = amf_derive(k_amf);
  const auto [gnb_int, gnb_enc] = gnb_ue_keys(amf.k_gnb);
  KeyChainState s;
  s.k_amf.assign(k_amf.begin(), k_amf.end());
  s.k_gnb = amf.k_gnb;
  s.derived = {{KeyNode::AmfUeInt, amf.amf_ue_int},
               {KeyNode::AmfUeEnc, amf.amf_ue_enc},
               {KeyNode::GnbUeInt, gnb_int},
               {KeyNode::GnbUeEnc, gnb_enc}};
  return s;
}

/// One handover hop: K_gNB* from the active key, the incremented NCC and the
/// shared parameters; gNB-UE keys re-derived from K_gNB*.
inline KeyChainState handover_key_exchange(const KeyChainState& state, const HandoverParams& shared = {}) {
  if (state.k_gnb.empty()) throw Error(Errc::EmptyKey, "K_gNB missing");
  KeyChainState next = state;
  next.ncc = state.ncc + 1;
  ByteWriter label;
  label.raw(to_bytes(labels::kGnbStar)).u32(shared.target_cell_id).u32(shared.arfcn);
  const Bytes& lb = label.bytes();
  next.k_gnb_star = kdf(state.active_gnb_key(), std::string_view(reinterpret_cast<const char*>(lb.data()), lb.size()),
                        next.ncc);
  auto [gnb_int, gnb_enc] = gnb_ue_keys(*next.k_gnb_star);
  next.derived[KeyNode::GnbUeInt] = std::move(gnb_int);
  next.derived[KeyNode::GnbUeEnc] = std::move(gnb_enc);
  return next;
}

/// Key-confirmation tag over a challenge with the gNB-UE integrity key.
inline Bytes key_confirmation(const KeyChainState& s, ByteView challenge) {
  return crypto::hash_to_digest({s.derived.at(KeyNode::GnbUeInt), challenge});
}

/// True when both sides would accept each other's integrity-protected traffic.
inline bool keys_agree(const KeyChainState& ue_side, const KeyChainState& network_side, ByteView challenge) {
  return key_confirmation(ue_side, challenge) == key_confirmation(network_side, challenge);
}

}  // namespace gho::baseline
