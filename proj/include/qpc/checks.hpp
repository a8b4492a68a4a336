// Copyright 2026 The qpc Authors
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

// Randomized invariant suites, one per module, runnable from the CLI.

#ifndef QPC_CHECKS_HPP_
#define QPC_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/sampling.hpp"

namespace qpc {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  double value;      // measured error or witness size
  double threshold;  // bound the value was compared against
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = kDefaultSeed;
  int samples = 10'000;
};

// Suite names accepted by run_check_suite, "all" last.
const std::vector<std::string>& check_suites();

// Throws Error(OutOfRange) for an unknown suite name.
std::vector<CheckResult> run_check_suite(std::string_view suite, const CheckOptions& opts = {});

}  // namespace qpc

#endif  // QPC_CHECKS_HPP_
