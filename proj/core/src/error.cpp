// Copyright 2026 The blobflow Authors
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

#include "blobflow/error.hpp"

namespace blobflow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::NonpositiveInput: return "NonpositiveInput";
    case ErrorCode::AllInfinite: return "AllInfinite";
    case ErrorCode::CoincidentParticles: return "CoincidentParticles";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::UnboundedQuantile: return "UnboundedQuantile";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace blobflow
