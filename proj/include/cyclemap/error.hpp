// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclemap {

enum class ErrorCode {
  // Malformed or unsupported input.
  kLoopEdge,
  kDuplicateEdge,
  kDuplicateVertex,
  kUnknownVertex,
  kUnknownName,
  kBadParams,
  kParseError,
  kGroundMismatch,
  kGroundTooLarge,
  kEmptyCircuit,
  kDisconnected,
  kIsolatedVertex,
  kHamiltonianInput,
  kNotInjection,
  kNotBijective,
  kPreconditionUnmet,
  kSInSpan,
  // Work limits.
  kCircuitBudgetExceeded,
  kSearchBudgetExceeded,
  kDimensionCapExceeded,
  kCapExceeded,
  // A proven statement failed on a concrete instance: always an implementation
  // bug, never a property of the input.
  kInternalContradiction,
  kCertificateFailure,
  kNoWitnessFound,
  kSelfTestFailed,
};

enum class ErrorCategory { kInput, kBudget, kTheoremAlarm };

inline constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kGroundTooLarge: return "GroundTooLarge";
    case ErrorCode::kEmptyCircuit: return "EmptyCircuit";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kHamiltonianInput: return "HamiltonianInput";
    case ErrorCode::kNotInjection: return "NotInjection";
    case ErrorCode::kNotBijective: return "NotBijective";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kSInSpan: return "SInSpan";
    case ErrorCode::kCircuitBudgetExceeded: return "CircuitBudgetExceeded";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kDimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kCertificateFailure: return "CertificateFailure";
    case ErrorCode::kNoWitnessFound: return "NoWitnessFound";
    case ErrorCode::kSelfTestFailed: return "SelfTestFailed";
  }
  return "Unknown";
}

inline constexpr ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCircuitBudgetExceeded:
    case ErrorCode::kSearchBudgetExceeded:
    case ErrorCode::kDimensionCapExceeded:
    case ErrorCode::kCapExceeded:
      return ErrorCategory::kBudget;
    case ErrorCode::kInternalContradiction:
    case ErrorCode::kCertificateFailure:
    case ErrorCode::kNoWitnessFound:
    case ErrorCode::kSelfTestFailed:
      return ErrorCategory::kTheoremAlarm;
    default:
      return ErrorCategory::kInput;
  }
}

// Single exception type for the library. `reproducer` carries a serialized
// instance for theorem alarms so a failing case can be replayed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string reproducer = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        reproducer_(std::move(reproducer)) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }
  const std::string& reproducer() const noexcept { return reproducer_; }

 private:
  ErrorCode code_;
  std::string reproducer_;
};

}  // namespace cyclemap
