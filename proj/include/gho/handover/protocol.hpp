// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gho/auth/group_auth.hpp"
#include "gho/crypto/aead.hpp"
#include "gho/crypto/hash.hpp"

namespace gho::handover {

using auth::GroupParams;
using auth::KeyShare;
using auth::PublicCredential;
using math::PointOf;
using math::PrimeOrderGroup;
using math::ScalarOf;

inline constexpr std::string_view kShareKeyDomain = "gho/share-key/v1";
inline constexpr std::string_view kSecretFunctionAad = "gho/secret-function/v1";
inline constexpr std::string_view kServiceAad = "gho/service-request/v1";

/// Symmetric key bound to a private share: H(share || domain tag).
template <class Scalar>
Bytes derive_symmetric_key(const Scalar& share_value) {
  return crypto::hash_to_digest({share_value.to_bytes(), to_bytes(kShareKeyDomain)});
}

/// AEAD ciphertext plus the x_i naming the share whose key seals it.
template <PrimeOrderGroup G>
struct EncryptedPayload {
  Bytes ciphertext;  // includes the 16-byte tag
  Bytes nonce;
  ScalarOf<G> key_hint;

  /// nonce (12) || key_hint || u32 |ciphertext| || ciphertext
  Bytes serialize() const {
    ByteWriter w;
    w.raw(nonce).raw(key_hint.to_bytes()).u32(static_cast<std::uint32_t>(ciphertext.size())).raw(ciphertext);
    return std::move(w).bytes();
  }

  static EncryptedPayload read(ByteReader& r) {
    EncryptedPayload p;
    auto n = r.take(crypto::kNonceBytes);
    p.nonce.assign(n.begin(), n.end());
    p.key_hint = ScalarOf<G>::from_bytes(r.take(G::kScalarBytes));
    auto len = r.u32();
    auto c = r.take(len);
    p.ciphertext.assign(c.begin(), c.end());
    return p;
  }

  static EncryptedPayload deserialize(ByteView b) {
    ByteReader r(b);
    auto p = read(r);
    r.expect_done();
    return p;
  }
};

/// UE -> UxNB data after handover: x_i appended to data sealed under f(x_i).
template <PrimeOrderGroup G>
struct ServiceRequest {
  ScalarOf<G> sender_x;
  EncryptedPayload<G> payload;

  /// sender_x || EncryptedPayload
  Bytes serialize() const {
    ByteWriter w;
    w.raw(sender_x.to_bytes()).raw(payload.serialize());
    return std::move(w).bytes();
  }

  static ServiceRequest deserialize(ByteView b) {
    ByteReader r(b);
    ServiceRequest req;
    req.sender_x = ScalarOf<G>::from_bytes(r.take(G::kScalarBytes));
    req.payload = EncryptedPayload<G>::read(r);
    r.expect_done();
    return req;
  }
};

enum class BsRole { Terrestrial, Uxnb };

/// Per-base-station protocol state. Single writer.
template <PrimeOrderGroup G>
class BaseStationState {
 public:
  using Scalar = ScalarOf<G>;
  using Polynomial = math::SecretPolynomial<Scalar>;

  /// A terrestrial BS already holds f(x) from the earlier group authentication.
  static BaseStationState terrestrial(std::string id, GroupParams<G> params, Polynomial secret_fn) {
    BaseStationState bs(std::move(id), BsRole::Terrestrial, std::move(params));
    bs.secret_fn_.emplace(std::move(secret_fn));
    return bs;
  }

  /// An arriving UxNB holds only its AMF-issued share until authenticated.
  static BaseStationState uxnb(std::string id, GroupParams<G> params, KeyShare<G> own_share) {
    BaseStationState bs(std::move(id), BsRole::Uxnb, std::move(params));
    bs.own_share_.emplace(std::move(own_share));
    return bs;
  }

  const std::string& id() const noexcept { return id_; }
  BsRole role() const noexcept { return role_; }
  const GroupParams<G>& params() const noexcept { return params_; }
  bool has_secret_function() const noexcept { return secret_fn_.has_value(); }
  const std::optional<KeyShare<G>>& own_share() const noexcept { return own_share_; }

  /// Throws MissingSecretFunction when f(x) is absent.
  const Polynomial& secret_function() const {
    if (!secret_fn_) throw Error(Errc::MissingSecretFunction, "base station " + id_ + " has no f(x)");
    return *secret_fn_;
  }

  void install_secret_function(Polynomial f) { secret_fn_.emplace(std::move(f)); }

  const std::set<std::string>& served_ues() const noexcept { return served_; }
  bool serves_x(const Scalar& x) const { return served_by_x_.contains(x); }

  void admit(const PublicCredential<G>& cred) {
    served_.insert(cred.ue_id);
    served_by_x_[cred.public_x] = cred.ue_id;
  }

  /// Adds UEs with a known x_i (a terrestrial BS's pre-existing group).
  void admit_all(std::span<const PublicCredential<G>> creds) {
    for (const auto& c : creds) admit(c);
  }

  void release(const std::string& ue_id) {
    served_.erase(ue_id);
    std::erase_if(served_by_x_, [&](const auto& kv) { return kv.second == ue_id; });
  }

  /// False if this (sender, nonce) pair was seen before.
  bool remember_nonce(const Scalar& sender_x, const Bytes& nonce) {
    return seen_nonces_.emplace(sender_x, nonce).second;
  }

 private:
  BaseStationState(std::string id, BsRole role, GroupParams<G> params)
      : id_(std::move(id)), role_(role), params_(std::move(params)) {}

  std::string id_;
  BsRole role_;
  GroupParams<G> params_;
  std::optional<Polynomial> secret_fn_;
  std::optional<KeyShare<G>> own_share_;
  std::set<std::string> served_;
  std::map<Scalar, std::string> served_by_x_;
  std::set<std::pair<Scalar, Bytes>> seen_nonces_;
};

namespace detail {
template <class Scalar>
Bytes aad(std::string_view domain, const Scalar& x) {
  Bytes a = to_bytes(domain);
  const Bytes xb = x.to_bytes();
  a.insert(a.end(), xb.begin(), xb.end());
  return a;
}
}  // namespace detail

/// Terrestrial BS side of the UxNB authentication. A valid (x_i, f(x_i)P)
/// pair earns f(x) sealed under the key of f(x_i); otherwise nullopt
/// ("not a valid UxNB").
template <PrimeOrderGroup G>
std::optional<EncryptedPayload<G>> authenticate_uxnb(const BaseStationState<G>& terrestrial,
                                                     const PublicCredential<G>& applicant,
                                                     crypto::NonceSource& nonces) {
  const auto& f = terrestrial.secret_function();
  const auto share = f(applicant.public_x);
  if (applicant.public_x.is_zero() || !(G::mul_base(share) == applicant.public_point)) return std::nullopt;

  EncryptedPayload<G> out;
  out.key_hint = applicant.public_x;
  out.nonce = nonces.next();
  out.ciphertext = crypto::seal(derive_symmetric_key(share), out.nonce,
                                detail::aad(kSecretFunctionAad, applicant.public_x), f.serialize());
  return out;
}

/// UxNB side: decrypt f(x) with its own share and check its credential
/// against the recovered polynomial before installing it.
template <PrimeOrderGroup G>
void receive_secret_function(BaseStationState<G>& uxnb, const EncryptedPayload<G>& payload) {
  const auto& own = uxnb.own_share();
  if (!own) throw Error(Errc::MissingOwnShare, "UxNB " + uxnb.id() + " holds no issued share");
  if (!(own->public_x == payload.key_hint))
    throw Error(Errc::DecryptionFailure, "payload sealed for another share");

  auto plain = crypto::open(derive_symmetric_key(own->private_share), payload.nonce,
                            detail::aad(kSecretFunctionAad, payload.key_hint), payload.ciphertext);
  if (!plain) throw Error(Errc::DecryptionFailure, "secret function did not authenticate");

  auto f = math::SecretPolynomial<ScalarOf<G>>::deserialize(*plain);
  if (!(f(own->public_x) == own->private_share) || !(G::mul_base(f(own->public_x)) == own->public_point))
    throw Error(Errc::PolynomialMismatch, "recovered f(x) does not reproduce the UxNB's share");
  uxnb.install_secret_function(std::move(f));
}

/// f(x_i)*P == public point, with f(x_i) recomputed from the secret function.
template <PrimeOrderGroup G>
bool verify_single_ue(const BaseStationState<G>& bs, const PublicCredential<G>& cred) {
  return G::mul_base(bs.secret_function()(cred.public_x)) == cred.public_point;
}

struct GroupResult {
  std::vector<std::string> accepted;
  std::vector<std::string> rejected;
  bool aggregate_hit = false;
  std::size_t point_comparisons = 0;
};

/// Group handover at the UxNB. The BS derives every f(x_i) itself, sums the
/// scalars and the presented points, and compares (sum f(x_i))*P with
/// sum f(x_i)P once. On mismatch each UE is checked individually, last to first.
template <PrimeOrderGroup G>
GroupResult group_handover(BaseStationState<G>& uxnb, std::span<const PublicCredential<G>> creds) {
  const auto& f = uxnb.secret_function();
  if (creds.empty()) throw Error(Errc::EmptyInput, "empty handover batch");
  {
    std::vector<ScalarOf<G>> xs;
    for (const auto& c : creds) xs.push_back(c.public_x);
    math::check_evaluation_points(std::span<const ScalarOf<G>>(xs));
  }

  ScalarOf<G> total_scalar;
  PointOf<G> total_point = G::identity();
  for (std::size_t i = creds.size(); i-- > 0;) {
    total_scalar += f(creds[i].public_x);
    total_point += creds[i].public_point;
  }

  GroupResult result;
  result.point_comparisons = 1;
  std::vector<bool> valid(creds.size(), true);
  if (G::mul_base(total_scalar) == total_point) {
    result.aggregate_hit = true;
  } else {
    for (std::size_t i = creds.size(); i-- > 0;) {
      ++result.point_comparisons;
      valid[i] = verify_single_ue(uxnb, creds[i]);
    }
  }
  for (std::size_t i = 0; i < creds.size(); ++i) {
    if (valid[i]) {
      uxnb.admit(creds[i]);
      result.accepted.push_back(creds[i].ue_id);
    } else {
      result.rejected.push_back(creds[i].ue_id);
    }
  }
  return result;
}

template <PrimeOrderGroup G>
GroupResult group_handover(BaseStationState<G>& uxnb, const std::vector<PublicCredential<G>>& creds) {
  return group_handover<G>(uxnb, std::span<const PublicCredential<G>>(creds));
}

template <PrimeOrderGroup G>
ServiceRequest<G> ue_send_service_request(const KeyShare<G>& share, ByteView plaintext,
                                          crypto::NonceSource& nonces) {
  ServiceRequest<G> req;
  req.sender_x = share.public_x;
  req.payload.key_hint = share.public_x;
  req.payload.nonce = nonces.next();
  req.payload.ciphertext = crypto::seal(derive_symmetric_key(share.private_share), req.payload.nonce,
                                        detail::aad(kServiceAad, share.public_x), plaintext);
  return req;
}

/// Serving BS: recompute f(sender_x), open the payload. nullopt for UEs not
/// handed over here, for authentication failures, and for replayed nonces.
template <PrimeOrderGroup G>
std::optional<Bytes> bs_handle_service_request(BaseStationState<G>& bs, const ServiceRequest<G>& req) {
  const auto& f = bs.secret_function();
  if (!bs.serves_x(req.sender_x) || !(req.payload.key_hint == req.sender_x)) return std::nullopt;
  auto plain = crypto::open(derive_symmetric_key(f(req.sender_x)), req.payload.nonce,
                            detail::aad(kServiceAad, req.sender_x), req.payload.ciphertext);
  if (!plain) return std::nullopt;
  if (!bs.remember_nonce(req.sender_x, req.payload.nonce)) return std::nullopt;
  return plain;
}

}  // namespace gho::handover
