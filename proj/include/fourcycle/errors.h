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

#ifndef FOURCYCLE_ERRORS_H_
#define FOURCYCLE_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fourcycle {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kRejected,
  kOverflow,
  kUndefined,
  kCapExceeded,
  kIo,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void throw_counter_overflow();

// Adds `x` to `acc`, throwing kOverflow instead of wrapping around.
inline void checked_add(std::uint64_t& acc, std::uint64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) [[unlikely]] {
    throw_counter_overflow();
  }
}

}  // namespace fourcycle

#endif  // FOURCYCLE_ERRORS_H_
