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


// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
//   acceptance                 all criteria
//   acceptance --criterion 3   just one

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainring/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double budget;  // seconds
};

const std::vector<Criterion> kCriteria = {
    {1, "rsf canonicity", "rsf", 30},
    {2, "dual involution and cardinality", "dual", 30},
    {3, "trace dual of restriction", "delsarte", 60},
    {4, "closure and interior identities", "closure", 60},
    {5, "rank bounds", "bounds", 30},
    {6, "cyclic factorization", "factorization", 30},
    {7, "multi-index bijection", "bijection", 120},
    {8, "defining-set invariance and duality", "defining-sets", 120},
    {9, "restricted pipeline agreement", "restricted", 60},
    {10, "bch bound", "bch", 120},
};

bool run_one(const Criterion& c, bool verbose) {
  chainring::SuiteResult r = chainring::run_suite(c.suite);
  bool in_time = r.seconds < c.budget;
  bool pass = r.ok() && in_time;
  std::printf("criterion %2d %-34s %s  %ld/%ld  %.2fs (budget %.0fs)\n", c.id, c.title,
              pass ? "PASS" : "FAIL", r.passed, r.cases, r.seconds, c.budget);
  if (!in_time) std::printf("    over time budget\n");
  if (verbose || !pass) {
    if (!r.counterexample.empty()) std::printf("    first counterexample: %s\n", r.counterexample.c_str());
    for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
  }
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner", "acceptance"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
  app.add_flag("-v,--verbose", verbose, "Print suite notes for passing criteria too");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    try {
      if (!run_one(c, verbose)) ++failed;
    } catch (const std::exception& e) {
      std::printf("criterion %2d %-34s FAIL  error: %s\n", c.id, c.title, e.what());
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
