// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gho {

enum class Errc {
  InvalidThreshold,
  DuplicateIdentity,
  ShareSpaceExhausted,
  IdentifierCollision,
  DuplicateEvaluationPoint,
  ZeroEvaluationPoint,
  EmptyInput,
  InvalidPolynomial,
  MissingSecretFunction,
  MissingOwnShare,
  DecryptionFailure,
  PolynomialMismatch,
  MalformedMessage,
  InvalidCount,
  EmptyKey,
  InvalidRate,
  InvalidScenario,
  WireKnowledgeViolation,
  CryptoBackend,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::InvalidThreshold: return "InvalidThreshold";
    case Errc::DuplicateIdentity: return "DuplicateIdentity";
    case Errc::ShareSpaceExhausted: return "ShareSpaceExhausted";
    case Errc::IdentifierCollision: return "IdentifierCollision";
    case Errc::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
    case Errc::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidPolynomial: return "InvalidPolynomial";
    case Errc::MissingSecretFunction: return "MissingSecretFunction";
    case Errc::MissingOwnShare: return "MissingOwnShare";
    case Errc::DecryptionFailure: return "DecryptionFailure";
    case Errc::PolynomialMismatch: return "PolynomialMismatch";
    case Errc::MalformedMessage: return "MalformedMessage";
    case Errc::InvalidCount: return "InvalidCount";
    case Errc::EmptyKey: return "EmptyKey";
    case Errc::InvalidRate: return "InvalidRate";
    case Errc::InvalidScenario: return "InvalidScenario";
    case Errc::WireKnowledgeViolation: return "WireKnowledgeViolation";
    case Errc::CryptoBackend: return "CryptoBackend";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gho
