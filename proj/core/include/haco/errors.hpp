// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HACO_ERRORS_HPP_
#define HACO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace haco {

// Error taxonomy shared by the whole library. The split matters for the CLI:
// compatibility errors (operands belong to different groups / families that
// cannot meet) map to exit code 3, everything else to exit code 2.
enum class errc {
  // compatibility
  group_mismatch,
  family_mismatch,
  dim_mismatch,
  not_closed,
  // validation
  unsupported_group,
  empty_set,
  aliasing,
  invalid_p,
  not_real,
  not_analytic,
  out_of_range,
  invalid_argument,
  parse_error,
};

const char* errc_name(errc code) noexcept;

bool is_compatibility_error(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

// Literal-message overload: allocates nothing unless the check fails, so it
// is safe on hot paths.
inline void require(bool condition, errc code, const char* message) {
  if (!condition) fail(code, std::string(message));
}

}  // namespace haco

#endif  // HACO_ERRORS_HPP_
