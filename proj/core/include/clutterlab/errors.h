// Copyright 2026 The Clutterlab Authors
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

#ifndef CLUTTERLAB_ERRORS_H_
#define CLUTTERLAB_ERRORS_H_

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace clutterlab {

// Malformed input: out-of-range vertices, invalid posets, bad bounds.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard or the compute deadline was exceeded.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Per-thread compute deadline. Long-running loops call CheckDeadline(),
// which throws ResourceExhausted once the installed deadline has passed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::optional<std::chrono::milliseconds> budget);
  ~ScopedDeadline();

  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void CheckDeadline();

// Reads CLUTTERLAB_GUARD_MS; nullopt when unset or not a positive integer.
std::optional<std::chrono::milliseconds> GuardBudgetFromEnvironment();

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

inline void Ensure(bool condition, const std::string& message) {
  if (!condition) throw ConsistencyError(message);
}

}  // namespace clutterlab

#endif  // CLUTTERLAB_ERRORS_H_
