// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gho/math/group.hpp"

namespace gho::math {

/// Degree-(t-1) polynomial over the scalar field; the constant term is the
/// group secret. Coefficients are stored constant term first.
template <class Scalar>
class SecretPolynomial {
 public:
  explicit SecretPolynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw Error(Errc::InvalidPolynomial, "polynomial needs at least one coefficient");
    if (coeffs_.back().is_zero()) throw Error(Errc::InvalidPolynomial, "leading coefficient is zero");
    if (coeffs_.front().is_zero()) throw Error(Errc::InvalidPolynomial, "secret term is zero");
  }

  /// Uniformly random polynomial with nonzero secret and nonzero leading term.
  template <class URBG>
  static SecretPolynomial random(std::size_t threshold, URBG& rng) {
    if (threshold < 1) throw Error(Errc::InvalidThreshold, "threshold must be at least 1");
    std::vector<Scalar> c;
    c.reserve(threshold);
    c.push_back(Scalar::random_nonzero(rng));
    for (std::size_t k = 1; k < threshold; ++k)
      c.push_back(k + 1 == threshold ? Scalar::random_nonzero(rng) : Scalar::random(rng));
    return SecretPolynomial(std::move(c));
  }

  std::size_t threshold() const noexcept { return coeffs_.size(); }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const Scalar& secret() const noexcept { return coeffs_.front(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const {
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// u16 count || count fixed-width scalars.
  Bytes serialize() const {
    ByteWriter w;
    w.u16(static_cast<std::uint16_t>(coeffs_.size()));
    for (const auto& c : coeffs_) w.raw(c.to_bytes());
    return std::move(w).bytes();
  }

  static SecretPolynomial deserialize(ByteView b) {
    ByteReader r(b);
    const auto n = r.u16();
    std::vector<Scalar> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(Scalar::from_bytes(r.take(Scalar::kBytes)));
    r.expect_done();
    try {
      return SecretPolynomial(std::move(c));
    } catch (const Error& e) {
      throw Error(Errc::MalformedMessage, e.what());
    }
  }

  friend bool operator==(const SecretPolynomial&, const SecretPolynomial&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

template <class Scalar>
Scalar evaluate_polynomial(const SecretPolynomial<Scalar>& poly, const Scalar& x) {
  return poly(x);
}

}  // namespace gho::math
