// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "gho/bytes.hpp"

namespace gho::math {

/// Runtime description of a group instantiation, for reports and wire headers.
struct GroupDescriptor {
  std::string curve_id;
  Bytes order;      // big-endian q
  Bytes generator;  // compressed encoding of P
  std::size_t scalar_bytes = 0;
  std::size_t point_bytes = 0;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// A cyclic group of prime order q with its scalar field. Protocol code is
/// written against this concept only.
template <class G>
concept PrimeOrderGroup = requires(const typename G::Scalar& k, const typename G::Point& p,
                                   ByteView b) {
  typename G::Scalar;
  typename G::Point;
  { G::kId } -> std::convertible_to<std::string_view>;
  { G::kScalarBytes } -> std::convertible_to<std::size_t>;
  { G::kPointBytes } -> std::convertible_to<std::size_t>;
  { G::generator() } -> std::same_as<typename G::Point>;
  { G::identity() } -> std::same_as<typename G::Point>;
  { G::mul_base(k) } -> std::same_as<typename G::Point>;
  { k * p } -> std::same_as<typename G::Point>;
  { p + p } -> std::same_as<typename G::Point>;
  { -p } -> std::same_as<typename G::Point>;
  { p == p } -> std::convertible_to<bool>;
  { G::encode_point(p) } -> std::same_as<Bytes>;
  { G::decode_point(b) } -> std::same_as<typename G::Point>;
  { G::descriptor() } -> std::same_as<GroupDescriptor>;
};

template <PrimeOrderGroup G>
using ScalarOf = typename G::Scalar;

template <PrimeOrderGroup G>
using PointOf = typename G::Point;

}  // namespace gho::math
