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

#include "clutterlab/errors.h"

#include <cstdlib>
#include <string>

namespace clutterlab {
namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;
thread_local unsigned g_tick = 0;

}  // namespace

ScopedDeadline::ScopedDeadline(std::optional<std::chrono::milliseconds> budget)
    : previous_(g_deadline) {
  if (budget.has_value()) {
    const auto candidate = std::chrono::steady_clock::now() + *budget;
    if (!g_deadline.has_value() || candidate < *g_deadline) {
      g_deadline = candidate;
    }
  }
}

ScopedDeadline::~ScopedDeadline() { g_deadline = previous_; }

void CheckDeadline() {
  if (!g_deadline.has_value()) return;
  // Reading the clock on every call dominates tight loops.
  if ((++g_tick & 0xff) != 0) return;
  if (std::chrono::steady_clock::now() > *g_deadline) {
    throw ResourceExhausted("compute deadline exceeded");
  }
}

std::optional<std::chrono::milliseconds> GuardBudgetFromEnvironment() {
  const char* raw = std::getenv("CLUTTERLAB_GUARD_MS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0) return std::nullopt;
  return std::chrono::milliseconds(value);
}

}  // namespace clutterlab
