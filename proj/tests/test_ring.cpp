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


#include <map>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "chainring/gen.hpp"

using namespace chainring;

namespace {

TEST(Ring, SmallConstructions) {
  auto z4 = Ring::make(Family::unramified, 2, 1, 2);
  EXPECT_EQ(z4->size(), 4u);
  EXPECT_EQ(z4->name(), "Z4");
  EXPECT_EQ(z4->teichmuller_set().size(), 2u);

  auto f2 = Ring::make(Family::unramified, 2, 1, 1);
  EXPECT_EQ(f2->size(), 2u);
  EXPECT_EQ(f2->s(), 1);

  auto f2u2 = Ring::make(Family::equal_characteristic, 2, 1, 2);
  EXPECT_EQ(f2u2->size(), 4u);
  Element u = f2u2->theta();
  EXPECT_FALSE(u.is_zero());
  EXPECT_TRUE((u * u).is_zero());
}

TEST(Ring, BadParameters) {
  try {
    Ring::make(Family::unramified, 4, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  try {
    Ring::make(Family::unramified, 2, 2, 2, std::vector<int64_t>{1, 0, 1});  // x^2 + 1 = (x+1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
}

TEST(Ring, Z4Arithmetic) {
  auto z4 = brute::ring("z4");
  auto v = [&](int x) { return z4->from_int(x); };
  EXPECT_EQ(v(3) + v(3), v(2));
  EXPECT_EQ(v(3) * v(3), v(1));
  EXPECT_EQ(-v(1), v(3));
  EXPECT_EQ(v(3).inv(), v(3));
  EXPECT_EQ(v(1).inv(), v(1));
  try {
    v(2).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnit);
  }
}

TEST(Ring, ThetaAdicZ4) {
  auto z4 = brute::ring("z4");
  auto g = z4->theta_adic(z4->from_int(3));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], z4->from_int(1));
  EXPECT_EQ(g[1], z4->from_int(1));
  g = z4->theta_adic(z4->from_int(2));
  EXPECT_EQ(g[0], z4->zero());
  EXPECT_EQ(g[1], z4->from_int(1));
  for (auto& c : z4->theta_adic(z4->zero())) EXPECT_TRUE(c.is_zero());
}

TEST(Ring, ValuationAndDegree) {
  auto z4 = brute::ring("z4");
  EXPECT_EQ(z4->zero().valuation(), 2);
  EXPECT_TRUE(z4->zero().degree().is_neg_inf());
  EXPECT_EQ(z4->from_int(2).valuation(), 1);
  EXPECT_EQ(z4->from_int(2).degree(), Degree(1));
  EXPECT_EQ(z4->from_int(3).valuation(), 0);
  EXPECT_EQ(z4->from_int(3).degree(), Degree(1));
  EXPECT_EQ(z4->from_int(1).degree(), Degree(0));
  EXPECT_LT(Degree::neg_inf(), Degree(0));
}

TEST(Ring, ResidueProjection) {
  auto z4 = brute::ring("z4");
  EXPECT_TRUE(z4->residue_project(z4->from_int(2)).value.is_zero());
  EXPECT_TRUE(z4->residue_project(z4->from_int(3)).value.is_one());

  auto gr = brute::ring("gr42");
  std::map<uint64_t, int> fibres;
  for (const auto& a : brute::all_elements(*gr))
    ++fibres[gr->residue_field().index_of(gr->residue_project(a).value)];
  EXPECT_EQ(fibres.size(), 4u);
  for (auto& [k, n] : fibres) EXPECT_EQ(n, 4) << k;
}

class RingFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(RingFixture, TeichmullerMatchesFixedPoints) {
  auto r = brute::ring(GetParam());
  const auto& gamma = r->teichmuller_set();
  auto expected = brute::teichmuller(*r);
  std::vector<Element> got(gamma.begin(), gamma.end());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(gamma.size(), r->residue_size());
  for (const auto& g : gamma) EXPECT_TRUE(r->is_teichmuller(g));
}

TEST_P(RingFixture, ThetaAdicRoundTrip) {
  auto r = brute::ring(GetParam());
  for (const auto& a : brute::all_elements(*r)) {
    auto g = r->theta_adic(a);
    ASSERT_EQ(static_cast<int>(g.size()), r->s());
    for (const auto& c : g) EXPECT_TRUE(r->is_teichmuller(c));
    EXPECT_EQ(r->from_theta_adic(g), a);
  }
}

TEST_P(RingFixture, InverseAndValuationAgreeWithSearch) {
  auto r = brute::ring(GetParam());
  uint64_t units = 0;
  for (const auto& a : brute::all_elements(*r)) {
    auto inv = brute::inverse(*r, a);
    EXPECT_EQ(inv.has_value(), a.is_unit());
    EXPECT_EQ(a.is_unit(), a.valuation() == 0);
    if (inv) {
      ++units;
      EXPECT_EQ(a.inv(), *inv);
    }
    EXPECT_EQ(a.valuation(), brute::valuation(*r, a));
  }
  EXPECT_EQ(units, r->unit_count());
}

TEST_P(RingFixture, IdealChainSizes) {
  auto r = brute::ring(GetParam());
  for (int t = 0; t <= r->s(); ++t) {
    std::set<Element> ideal;
    for (const auto& a : brute::all_elements(*r)) ideal.insert(r->theta_pow(t) * a);
    uint64_t expect = 1;
    for (int i = t; i < r->s(); ++i) expect *= r->residue_size();
    EXPECT_EQ(ideal.size(), expect) << "t = " << t;
  }
}

TEST_P(RingFixture, RingAxiomsOnRandomTriples) {
  auto r = brute::ring(GetParam());
  Gen g(7);
  for (int i = 0; i < 300; ++i) {
    Element a = g.element(*r), b = g.element(*r), c = g.element(*r);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, r->zero());
    EXPECT_EQ(a * r->one(), a);
  }
}

TEST_P(RingFixture, UnitPartAndThetaDivision) {
  auto r = brute::ring(GetParam());
  for (const auto& a : brute::all_elements(*r)) {
    if (a.is_zero()) continue;
    int v = a.valuation();
    Element u = r->unit_part(a);
    EXPECT_TRUE(u.is_unit());
    EXPECT_EQ(r->theta_pow(v) * u, a);
    EXPECT_EQ(r->theta_pow(v) * r->div_theta_pow(a, v), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, RingFixture,
                         ::testing::Values("f2", "f4", "z4", "z8", "z9", "f2u2", "f2u3", "gr42",
                                           "gr43", "f4u2"));

TEST(Ring, GR42TeichmullerIsCyclicOfOrderThree) {
  auto r = brute::ring("gr42");
  const auto& gamma = r->teichmuller_set();
  ASSERT_EQ(gamma.size(), 4u);
  int generators = 0;
  for (const auto& g : gamma) {
    if (g.is_zero()) continue;
    EXPECT_TRUE(g.pow(3).is_one());
    if (!g.is_one()) ++generators;
  }
  EXPECT_EQ(generators, 2);
}

TEST(Ring, GuardRefusesHugeRings) {
  int old = guard_bits();
  set_guard_bits(10);
  auto r = Ring::make(Family::unramified, 3, 4, 2);  // 9^4 = 6561 > 2^10
  EXPECT_THROW(r->size(), Error);
  set_guard_bits(old);
  EXPECT_EQ(r->size(), 6561u);
}

}  // namespace
