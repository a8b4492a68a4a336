// Copyright 2026 The qpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPC_ERROR_HPP_
#define QPC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpc {

enum class ErrorCode {
  NonHermitian,
  TraceNotOne,
  NotNormalized,
  SingularBasis,
  OutOfRange,
  OutsideSupport,
  DegenerateMarginal,
  Unphysical,
  SingularParameter,
  IntegrationFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::DegenerateMarginal: return "DegenerateMarginal";
    case ErrorCode::Unphysical: return "Unphysical";
    case ErrorCode::SingularParameter: return "SingularParameter";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// code tells callers (and the CLI's exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qpc

#endif  // QPC_ERROR_HPP_
