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

#include "dominoes/error.h"

namespace dominoes {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kRule: return "rule";
    case ErrorCode::kState: return "state";
    case ErrorCode::kMove: return "move";
    case ErrorCode::kPath: return "path";
    case ErrorCode::kTrace: return "trace";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace dominoes
