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

#ifndef HACO_VERIFY_HPP_
#define HACO_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace haco {

// Outcome of one verification check: a batch of seeded instances of a
// single identity or inequality, its worst observed deviation and the pinned
// tolerance. Witness-producing checks carry the witness on success;
// invariance checks carry one only on failure.
struct CheckRecord {
  std::string id;
  std::string anchor;  // which identity/inequality the check exercises
  std::int64_t instances = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<std::string> witness;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  double wall_time_seconds = 0.0;

  bool all_passed() const;
};

// Named suites, in the fixed order they run under "all".
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);  // includes "all"

// Runs the named suite (or every suite for "all") with deterministic
// per-check substreams of `seed`. Byte-identical checks for identical
// inputs; only wall_time_seconds varies between runs.
VerificationReport run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace haco

#endif  // HACO_VERIFY_HPP_
