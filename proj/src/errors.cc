// Copyright 2026 The fourcycle Authors
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

#include "fourcycle/errors.h"

namespace fourcycle {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kRejected:
      return "rejected";
    case ErrorCode::kOverflow:
      return "overflow";
    case ErrorCode::kUndefined:
      return "undefined";
    case ErrorCode::kCapExceeded:
      return "cap exceeded";
    case ErrorCode::kIo:
      return "i/o error";
  }
  return "unknown";
}

void throw_counter_overflow() {
  throw Error(ErrorCode::kOverflow, "4-cycle counter exceeded 64 bits");
}

}  // namespace fourcycle
