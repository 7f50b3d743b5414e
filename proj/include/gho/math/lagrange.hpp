// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gho/math/group.hpp"

namespace gho::math {

/// Rejects zero and repeated evaluation points; zero would expose f(0) = s.
template <class Scalar>
void check_evaluation_points(std::span<const Scalar> points) {
  if (points.empty()) throw Error(Errc::EmptyInput, "no evaluation points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_zero()) throw Error(Errc::ZeroEvaluationPoint, "evaluation point x = 0");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw Error(Errc::DuplicateEvaluationPoint, "evaluation points coincide");
  }
}

namespace detail {
template <class Scalar>
Scalar lagrange_at_zero(std::span<const Scalar> points, std::size_t i) {
  Scalar num = Scalar::one(), den = Scalar::one();
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (r == i) continue;
    num *= -points[r];
    den *= points[i] - points[r];
  }
  return num * den.inverse();
}
}  // namespace detail

/// Lagrange basis polynomial i evaluated at zero:
///   prod_{r != i} (-x_r) / (x_i - x_r)
template <class Scalar>
Scalar lagrange_coefficient(std::span<const Scalar> points, std::size_t i) {
  check_evaluation_points(points);
  if (i >= points.size()) throw Error(Errc::EmptyInput, "lagrange index out of range");
  return detail::lagrange_at_zero(points, i);
}

template <class Scalar>
Scalar lagrange_coefficient(const std::vector<Scalar>& points, std::size_t i) {
  return lagrange_coefficient(std::span<const Scalar>(points), i);
}

/// sum_i lambda_i * point_i. With m >= t points f(x_i)*P of a degree-(t-1)
/// polynomial this equals f(0)*P without learning any f(x_i).
template <PrimeOrderGroup G>
PointOf<G> interpolate_in_exponent(std::span<const std::pair<ScalarOf<G>, PointOf<G>>> shares) {
  std::vector<ScalarOf<G>> xs;
  xs.reserve(shares.size());
  for (const auto& s : shares) xs.push_back(s.first);
  check_evaluation_points(std::span<const ScalarOf<G>>(xs));

  PointOf<G> acc = G::identity();
  for (std::size_t i = 0; i < shares.size(); ++i)
    acc += detail::lagrange_at_zero(std::span<const ScalarOf<G>>(xs), i) * shares[i].second;
  return acc;
}

template <PrimeOrderGroup G>
PointOf<G> interpolate_in_exponent(const std::vector<std::pair<ScalarOf<G>, PointOf<G>>>& shares) {
  return interpolate_in_exponent<G>(std::span<const std::pair<ScalarOf<G>, PointOf<G>>>(shares));
}

/// Plain interpolation at zero, sum_i lambda_i * y_i.
template <class Scalar>
Scalar interpolate_at_zero(std::span<const std::pair<Scalar, Scalar>> shares) {
  std::vector<Scalar> xs;
  for (const auto& s : shares) xs.push_back(s.first);
  check_evaluation_points(std::span<const Scalar>(xs));
  Scalar acc;
  for (std::size_t i = 0; i < shares.size(); ++i)
    acc += detail::lagrange_at_zero(std::span<const Scalar>(xs), i) * shares[i].second;
  return acc;
}

}  // namespace gho::math
