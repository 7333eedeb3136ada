/* Copyright 2026 The qmarkov Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qmarkov/error.hpp"

namespace qmarkov {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NotHermitian: return "not Hermitian";
    case ErrorCode::NotPsd: return "not positive semidefinite";
    case ErrorCode::NotReal: return "not real";
    case ErrorCode::NotUnitary: return "not unitary";
    case ErrorCode::NotNormalized: return "not normalized";
    case ErrorCode::BadAxis: return "bad rotation axis";
    case ErrorCode::NegativeTime: return "negative time";
    case ErrorCode::NegativeRate: return "negative rate";
    case ErrorCode::ConvergenceFailure: return "convergence failure";
    case ErrorCode::UnsolvableSystem: return "unsolvable system";
    case ErrorCode::FitResidualTooLarge: return "fit residual too large";
    case ErrorCode::BasisMismatch: return "basis mismatch";
    case ErrorCode::InternalInconsistency: return "internal inconsistency";
    case ErrorCode::ModeMismatch: return "mode mismatch";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::IoError: return "I/O error";
  }
  return "unknown error";
}

}  // namespace qmarkov
