// Copyright 2026 The Orbitale Authors
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

#ifndef ORBITALE_ERROR_HPP_
#define ORBITALE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace orbitale {

// Numeric values are shared with the C API status codes.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kParse = 2,
  kPrecisionExhausted = 3,
  kNotPreRegular = 4,
  kNotRegular = 5,
  kLinearSolveSingular = 6,
  kDegenerate = 7,
  kNotThetaStable = 8,
  kDegenerateGram = 9,
  kDescentFails = 10,
  kCapExceeded = 11,
  kBoundUnstable = 12,
  kSamplingExhausted = 13,
  kInternal = 14,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace orbitale

#endif  // ORBITALE_ERROR_HPP_
