// Copyright 2026 The Authors.
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

#ifndef DCA_SELFTEST_HPP
#define DCA_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dca {

struct SelftestOptions {
  int max_n = 4;  // 1..6
  int trials = 100;
  std::uint64_t seed = 42;
};

struct PropertyTally {
  std::string name;
  long checked = 0;
  long violations = 0;
  /// Up to five human-readable descriptions of violations.
  std::vector<std::string> examples;

  bool ok() const { return violations == 0; }
};

/// Runs the property suites on fixtures, seeded family instances and their
/// perturbations up to max_n elements. For max_n <= 2 every function with
/// values in {0, 1, 2} on every nonempty domain is enumerated as well.
/// Throws Error(InvalidArgument) for max_n outside 1..6 or trials < 1.
std::vector<PropertyTally> run_selftest(const SelftestOptions& options);

}  // namespace dca

#endif  // DCA_SELFTEST_HPP
