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


#include <gtest/gtest.h>

#include "brute.hpp"
#include "chainring/gen.hpp"

using namespace chainring;

namespace {

class OracleFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(OracleFixture, PackedAdditionMatchesRing) {
  auto r = brute::ring(GetParam());
  BruteSpace sp(*r, 3);
  Gen g(51);
  for (int i = 0; i < 300; ++i) {
    Vec a = g.vec(*r, 3), b = g.vec(*r, 3);
    EXPECT_EQ(sp.decode(sp.encode(a)), a);
    EXPECT_EQ(sp.decode(sp.add(sp.encode(a), sp.encode(b))), add(a, b));
  }
}

TEST_P(OracleFixture, SpanIsClosedUnderScalars) {
  auto r = brute::ring(GetParam());
  if (r->log2_size() * 2 > 12) GTEST_SKIP();
  BruteSpace sp(*r, 2);
  Gen g(52);
  for (int i = 0; i < 20; ++i) {
    std::vector<Vec> rows = {g.vec(*r, 2), g.vec(*r, 2)};
    auto ws = sp.span(rows);
    for (const auto& w : sp.words(ws))
      for (const auto& c : brute::all_elements(*r))
        EXPECT_TRUE(std::binary_search(ws.begin(), ws.end(), sp.encode(scale(w, c))));
    for (const auto& row : rows) EXPECT_TRUE(std::binary_search(ws.begin(), ws.end(), sp.encode(row)));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, OracleFixture,
                         ::testing::Values("z4", "z8", "z9", "f2u2", "f2u3", "gr42", "f4u2"));

TEST(Oracle, MinWeight) {
  auto r = brute::ring("z4");
  BruteSpace sp(*r, 4);
  EXPECT_EQ(brute_min_weight(sp, sp.span({})), -1);
  EXPECT_EQ(brute_min_weight(sp, sp.span({brute::vec(*r, {1, 1, 1, 0})})), 3);
  EXPECT_EQ(brute_min_weight(sp, sp.span({brute::vec(*r, {1, 1, 0, 0}), brute::vec(*r, {0, 1, 1, 1})})), 2);
}

TEST(Oracle, IdealCountsOverZ4) {
  // one chain of length s + 1 per cyclotomic coset
  EXPECT_EQ(brute_ideals(*brute::ring("z4"), 3).size(), 9u);
  EXPECT_EQ(brute_ideals(*brute::ring("z4"), 5).size(), 9u);
  EXPECT_EQ(brute_ideals(*brute::ring("z9"), 2).size(), 9u);
  EXPECT_EQ(brute_ideals(*brute::ring("f2u2"), 3).size(), 9u);
}

TEST(Oracle, OrthogonalHermitianConjugation) {
  auto tw = fixture("gr42");
  const Ring& S = tw->top();
  BruteSpace sp(S, 1);
  auto conj = [&](const Element& a) { return tw->frobenius(a); };
  Vec row{S.one()};
  auto ws = sp.orthogonal({row}, conj);
  EXPECT_EQ(ws.size(), 1u);
}

}  // namespace
