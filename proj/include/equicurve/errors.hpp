#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equicurve {

enum class ErrorCode {
  NotPrime,
  BoundExceeded,
  ZeroPolynomial,
  NoSimpleRoot,
  PrecisionExhausted,
  NotSmooth,
  GenusTooSmall,
  WrongCharacteristic,
  ZeroFunction,
  NeedsExtension,
  InvalidAutomorphism,
  NotAGroup,
  NotFaithful,
  HurwitzInconsistent,
  BadFiltration,
  QuotientNotRational,
  NotInvariant,
  DegreeTooSmall,
  HypothesisViolated,
  SupportOverlap,
  NotStable,
  NoCodewords,
  PoleAtPlace,
  Parse,
  Internal,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an object must be base-changed before the request can be answered.
class NeedsExtensionError : public Error {
 public:
  NeedsExtensionError(int degree, const std::string& what)
      : Error(ErrorCode::NeedsExtension,
              what + " (minimal extension degree " + std::to_string(degree) + ")"),
        degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoSimpleRoot: return "NoSimpleRoot";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NeedsExtension: return "NeedsExtension";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::HurwitzInconsistent: return "HurwitzInconsistent";
    case ErrorCode::BadFiltration: return "BadFiltration";
    case ErrorCode::QuotientNotRational: return "QuotientNotRational";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SupportOverlap: return "SupportOverlap";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NoCodewords: return "NoCodewords";
    case ErrorCode::PoleAtPlace: return "PoleAtPlace";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace equicurve
