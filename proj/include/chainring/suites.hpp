/* Copyright (C) 2026 The chainring authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// Seeded verification suites, shared by `chainring verify` and the
// acceptance runner.

#ifndef CHAINRING_SUITES_HPP
#define CHAINRING_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace chainring {

struct SuiteOptions {
  uint64_t seed = 0;
  int cases = -1;                     // -1 picks the suite default
  std::vector<std::string> fixtures;  // empty picks the suite default
  int ell = -1;
  int transforms = -1;  // rsf suite: row transforms per matrix
};

struct SuiteResult {
  std::string suite;
  long cases = 0;
  long passed = 0;
  long failed = 0;
  std::string counterexample;      // first failure, empty if none
  std::vector<std::string> notes;  // extra tallies, one line each
  double seconds = 0;

  bool ok() const { return failed == 0 && cases > 0; }
};

/// rsf, dual, delsarte, closure, bounds, factorization, bijection,
/// defining-sets, restricted, bch.
std::vector<std::string> suite_names();
/// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace chainring

#endif  // CHAINRING_SUITES_HPP
