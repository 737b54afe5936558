// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_ERROR_HPP
#define CHEBTRACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chebtrace {

enum class ErrorCode {
  NonRegular,
  EmptyGraph,
  InvalidParameter,
  ParseError,
  SingularEndpoint,
  NoConvergence,
  MissingDecay,
  BudgetExceeded,
  RouteMismatch,
  Overflow,
  PoleOnSupport,
  ZeroArgument,
  RadiusTooSmall,
  DivergentSeries,
  NotEvaluable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonRegular: return "NonRegular";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularEndpoint: return "SingularEndpoint";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MissingDecay: return "MissingDecay";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::PoleOnSupport: return "PoleOnSupport";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::DivergentSeries: return "DivergentSeries";
    case ErrorCode::NotEvaluable: return "NotEvaluable";
  }
  return "Unknown";
}

}  // namespace chebtrace

#endif  // CHEBTRACE_ERROR_HPP
