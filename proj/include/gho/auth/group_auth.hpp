// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gho/crypto/hash.hpp"
#include "gho/math/lagrange.hpp"
#include "gho/math/polynomial.hpp"

namespace gho::auth {

using math::PointOf;
using math::PrimeOrderGroup;
using math::ScalarOf;

/// Public group context published by the issuer (AMF / group manager).
template <PrimeOrderGroup G>
struct GroupParams {
  math::GroupDescriptor descriptor;
  PointOf<G> commitment;  // Q = s*P
  std::size_t threshold = 1;
  Bytes secret_digest;  // H(s)
  std::set<ScalarOf<G>> issued_points;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

  /// str16 curve_id || P || Q || u16 t || u8 |H(s)| || H(s) || u32 n || n scalars (ascending)
  Bytes serialize() const {
    ByteWriter w;
    w.str16(descriptor.curve_id).raw(G::encode_point(G::generator())).raw(G::encode_point(commitment));
    w.u16(static_cast<std::uint16_t>(threshold));
    w.u8(static_cast<std::uint8_t>(secret_digest.size())).raw(secret_digest);
    w.u32(static_cast<std::uint32_t>(issued_points.size()));
    for (const auto& x : issued_points) w.raw(x.to_bytes());
    return std::move(w).bytes();
  }

  static GroupParams deserialize(ByteView b) {
    ByteReader r(b);
    GroupParams p;
    p.descriptor = G::descriptor();
    if (r.str16() != p.descriptor.curve_id) throw Error(Errc::MalformedMessage, "group params for another curve");
    if (!(G::decode_point(r.take(G::kPointBytes)) == G::generator()))
      throw Error(Errc::MalformedMessage, "unexpected generator");
    p.commitment = G::decode_point(r.take(G::kPointBytes));
    p.threshold = r.u16();
    const auto dlen = r.u8();
    auto d = r.take(dlen);
    p.secret_digest.assign(d.begin(), d.end());
    const auto n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
      auto x = ScalarOf<G>::from_bytes(r.take(G::kScalarBytes));
      if (x.is_zero() || !p.issued_points.insert(x).second)
        throw Error(Errc::MalformedMessage, "issued points must be distinct and nonzero");
    }
    r.expect_done();
    return p;
  }
};

/// What a participant presents: (ID_i, x_i, f(x_i)*P). No secret material.
template <PrimeOrderGroup G>
struct PublicCredential {
  std::string ue_id;
  ScalarOf<G> public_x;
  PointOf<G> public_point;

  /// str16 ue_id || x_i || f(x_i)*P
  Bytes serialize() const {
    ByteWriter w;
    w.str16(ue_id).raw(public_x.to_bytes()).raw(G::encode_point(public_point));
    return std::move(w).bytes();
  }

  static PublicCredential deserialize(ByteView b) {
    ByteReader r(b);
    PublicCredential c;
    c.ue_id = r.str16();
    c.public_x = ScalarOf<G>::from_bytes(r.take(G::kScalarBytes));
    c.public_point = G::decode_point(r.take(G::kPointBytes));
    r.expect_done();
    return c;
  }
};

/// One participant's credential including the private share f(x_i).
template <PrimeOrderGroup G>
struct KeyShare {
  std::string ue_id;
  ScalarOf<G> public_x;
  ScalarOf<G> private_share;
  PointOf<G> public_point;

  PublicCredential<G> credential() const { return {ue_id, public_x, public_point}; }

  /// str16 ue_id || x_i || f(x_i) || f(x_i)*P
  Bytes serialize() const {
    ByteWriter w;
    w.str16(ue_id).raw(public_x.to_bytes()).raw(private_share.to_bytes()).raw(G::encode_point(public_point));
    return std::move(w).bytes();
  }

  static KeyShare deserialize(ByteView b) {
    ByteReader r(b);
    KeyShare s;
    s.ue_id = r.str16();
    s.public_x = ScalarOf<G>::from_bytes(r.take(G::kScalarBytes));
    s.private_share = ScalarOf<G>::from_bytes(r.take(G::kScalarBytes));
    s.public_point = G::decode_point(r.take(G::kPointBytes));
    r.expect_done();
    return s;
  }
};

enum class AggregateVerdict { Accept, TooFew, Reject };

enum class ShareRole { Ue, Uxnb };

inline constexpr std::string_view kSupiDomain = "gho/supi-to-x/v1";

/// The group manager. Holds the secret polynomial and the table of issued
/// credentials. Single writer: issuance must be externally serialized.
template <PrimeOrderGroup G>
class Issuer {
 public:
  using Scalar = ScalarOf<G>;
  using Point = PointOf<G>;

  Issuer(math::SecretPolynomial<Scalar> poly, std::uint64_t seed) : poly_(std::move(poly)), rng_(seed) {
    params_.descriptor = G::descriptor();
    params_.commitment = G::mul_base(poly_.secret());
    params_.threshold = poly_.threshold();
    params_.secret_digest = crypto::hash_to_digest(poly_.secret().to_bytes());
  }

  const GroupParams<G>& params() const noexcept { return params_; }
  const std::map<std::string, PublicCredential<G>>& registry() const noexcept { return registry_; }

  /// The private function f(x). Only handed to base stations the AMF trusts.
  const math::SecretPolynomial<Scalar>& secret_function() const noexcept { return poly_; }

  /// Fresh uniformly random nonzero x_i, never issued before.
  KeyShare<G> issue_share(const std::string& ue_id, ShareRole role = ShareRole::Ue) {
    ensure_unregistered(ue_id);
    // issued_points can hold at most q - 1 values
    if (Scalar(params_.issued_points.size() + 1).is_zero())
      throw Error(Errc::ShareSpaceExhausted, "every nonzero evaluation point has been issued");
    Scalar x;
    do {
      x = Scalar::random_nonzero(rng_);
    } while (params_.issued_points.contains(x));
    return record(ue_id, x, role);
  }

  /// x_i derived from a subscriber identifier by hashing into the scalar field.
  KeyShare<G> issue_share_from_supi(const std::string& ue_id, std::string_view supi,
                                    ShareRole role = ShareRole::Ue) {
    ensure_unregistered(ue_id);
    const Scalar x = supi_to_x(supi);
    if (x.is_zero() || params_.issued_points.contains(x))
      throw Error(Errc::IdentifierCollision, "SUPI maps to an unusable evaluation point");
    return record(ue_id, x, role);
  }

  static Scalar supi_to_x(std::string_view supi) {
    return Scalar::from_digest(crypto::hash_to_digest({to_bytes(kSupiDomain), to_bytes(supi)}));
  }

  /// Policy check, separate from the math: was this exact pair issued to this id?
  bool is_registered(const PublicCredential<G>& cred) const {
    auto it = registry_.find(cred.ue_id);
    return it != registry_.end() && it->second.public_x == cred.public_x &&
           it->second.public_point == cred.public_point;
  }

  std::size_t uxnb_credentials_issued() const noexcept { return uxnb_issued_; }

  /// Holders of t or more UxNB shares could rebuild f(x).
  bool uxnb_exposure_at_threshold() const noexcept { return uxnb_issued_ >= params_.threshold; }

  /// Self-check of the published H(s).
  bool audit_secret_digest() const {
    return crypto::hash_to_digest(poly_.secret().to_bytes()) == params_.secret_digest;
  }

 private:
  void ensure_unregistered(const std::string& ue_id) const {
    if (registry_.contains(ue_id)) throw Error(Errc::DuplicateIdentity, "identity already registered: " + ue_id);
  }

  KeyShare<G> record(const std::string& ue_id, const Scalar& x, ShareRole role) {
    const Scalar share = poly_(x);
    KeyShare<G> ks{ue_id, x, share, G::mul_base(share)};
    params_.issued_points.insert(x);
    registry_.emplace(ue_id, ks.credential());
    if (role == ShareRole::Uxnb) ++uxnb_issued_;
    return ks;
  }

  math::SecretPolynomial<Scalar> poly_;
  GroupParams<G> params_;
  std::map<std::string, PublicCredential<G>> registry_;
  std::size_t uxnb_issued_ = 0;
  std::mt19937_64 rng_;
};

/// Initialization phase: random degree-(t-1) polynomial, Q = s*P, H(s).
/// Deterministic for a fixed seed.
template <PrimeOrderGroup G>
Issuer<G> initialize_group(std::size_t threshold, std::uint64_t seed) {
  if (threshold < 1) throw Error(Errc::InvalidThreshold, "threshold must be at least 1");
  std::mt19937_64 rng(seed);
  auto poly = math::SecretPolynomial<ScalarOf<G>>::random(threshold, rng);
  return Issuer<G>(std::move(poly), rng());
}

/// GM-mode confirmation: recompute f(x_i)*P directly.
template <PrimeOrderGroup G>
bool verify_credential_gm(const Issuer<G>& issuer, const PublicCredential<G>& cred) {
  return G::mul_base(issuer.secret_function()(cred.public_x)) == cred.public_point;
}

/// Aggregate confirmation: sum of C_i = lambda_i * f(x_i)*P compared with Q.
/// Repeated x_i surface as Error(DuplicateEvaluationPoint), not as Reject.
template <PrimeOrderGroup G>
AggregateVerdict verify_group_aggregate(const GroupParams<G>& params, std::span<const PublicCredential<G>> creds) {
  if (creds.empty()) throw Error(Errc::EmptyInput, "no credentials to verify");
  std::vector<std::pair<ScalarOf<G>, PointOf<G>>> shares;
  shares.reserve(creds.size());
  for (const auto& c : creds) shares.emplace_back(c.public_x, c.public_point);
  std::vector<ScalarOf<G>> xs;
  for (const auto& s : shares) xs.push_back(s.first);
  math::check_evaluation_points(std::span<const ScalarOf<G>>(xs));

  if (creds.size() < params.threshold) return AggregateVerdict::TooFew;
  return math::interpolate_in_exponent<G>(shares) == params.commitment ? AggregateVerdict::Accept
                                                                       : AggregateVerdict::Reject;
}

template <PrimeOrderGroup G>
AggregateVerdict verify_group_aggregate(const GroupParams<G>& params, const std::vector<PublicCredential<G>>& creds) {
  return verify_group_aggregate<G>(params, std::span<const PublicCredential<G>>(creds));
}

constexpr std::string_view to_string(AggregateVerdict v) noexcept {
  switch (v) {
    case AggregateVerdict::Accept: return "Accept";
    case AggregateVerdict::TooFew: return "TooFew";
    case AggregateVerdict::Reject: return "Reject";
  }
  return "?";
}

}  // namespace gho::auth
