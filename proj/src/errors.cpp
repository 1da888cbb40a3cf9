/*
Copyright 2026 The jacsyz Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "errors.hpp"

namespace jacsyz {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::NotReduced: return "NOT_REDUCED";
    case ErrorCode::MdrZero: return "MDR_ZERO";
    case ErrorCode::NotStabilized: return "NOT_STABILIZED";
    case ErrorCode::BoundTooLow: return "BOUND_TOO_LOW";
    case ErrorCode::ClosureFailure: return "CLOSURE_FAILURE";
    case ErrorCode::SaturationUnstable: return "SATURATION_UNSTABLE";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::HypothesisFailure: return "HYPOTHESIS_FAILURE";
    case ErrorCode::RetryExhausted: return "RETRY_EXHAUSTED";
    case ErrorCode::DuplicateLine: return "DUPLICATE_LINE";
    case ErrorCode::UnsupportedDelta: return "UNSUPPORTED_DELTA";
    case ErrorCode::BadPrime: return "BAD_PRIME";
    case ErrorCode::Registry: return "REGISTRY_ERROR";
    case ErrorCode::Io: return "IO_ERROR";
    case ErrorCode::Usage: return "USAGE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace jacsyz
