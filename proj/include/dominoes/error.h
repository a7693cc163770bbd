// Copyright 2026 The Dominoes Limited Forecast Authors
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

#ifndef DOMINOES_ERROR_H_
#define DOMINOES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dominoes {

enum class ErrorCode {
  kParameter,
  kRule,
  kState,
  kMove,
  kPath,
  kTrace,
  kCapacity,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library; `code()` tells callers which
// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + " error: " +
                           message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dominoes

#endif  // DOMINOES_ERROR_H_
