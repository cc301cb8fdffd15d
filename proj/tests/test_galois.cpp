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

TEST(Galois, DefaultGR43Modulus) {
  auto tw = fixture("gr43");
  const auto& h = tw->top().modulus();
  ASSERT_EQ(h.size(), 4u);
  std::vector<int64_t> mod2;
  for (const auto& c : h) mod2.push_back(tw->base().index_of(c) % 2);
  EXPECT_EQ(mod2, (std::vector<int64_t>{1, 1, 0, 1}));  // x^3 + x + 1

  // h divides x^7 - 1 over Z4
  Poly hp(h.begin(), h.end());
  auto r = poly::mod(poly::x_pow_minus_one(tw->base(), 7), hp);
  EXPECT_TRUE(r.empty());
}

TEST(Galois, TrivialTower) {
  auto tw = Tower::extend(brute::ring("z4"), 1);
  EXPECT_EQ(tw->m(), 1);
  EXPECT_EQ(tw->top().size(), 4u);
  EXPECT_EQ(tw->basis().size(), 1u);
  EXPECT_TRUE(tw->dual_basis()[0].is_one());
  EXPECT_TRUE(tw->gram_matrix().at(0, 0).is_one());
}

TEST(Galois, EqualCharacteristicExtension) {
  auto tw = fixture("f8u2");
  EXPECT_EQ(tw->m(), 3);
  EXPECT_EQ(tw->top().size(), 64u);
  EXPECT_EQ(tw->top().residue_size(), 8u);
  // sigma acts on coefficients: u is fixed
  Element u = tw->top().theta();
  EXPECT_EQ(tw->frobenius(u), u);
}

TEST(Galois, FrobeniusOnPrimitiveRoot) {
  auto tw = fixture("gr43");
  Element xi = tw->primitive_root(7);
  EXPECT_TRUE(xi.pow(7).is_one());
  EXPECT_FALSE(xi.is_one());
  EXPECT_TRUE(tw->top().is_teichmuller(xi));
  Element s = tw->frobenius(xi);
  EXPECT_EQ(s, xi.pow(2));
  EXPECT_TRUE(s.pow(7).is_one());
  EXPECT_FALSE(s.is_one());
}

TEST(Galois, PrimitiveRootErrors) {
  auto tw = fixture("gr43");
  EXPECT_TRUE(tw->primitive_root(1).is_one());
  try {
    tw->primitive_root(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderUnavailable);
  }
}

TEST(Galois, TraceOfOne) {
  auto tw = fixture("gr43");
  EXPECT_EQ(tw->trace(tw->top().one()), tw->base().from_int(3));
  bool witness = false;
  for (const auto& g : tw->top().teichmuller_set())
    if (tw->trace(g).is_one()) witness = true;
  EXPECT_TRUE(witness);
}

class TowerFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(TowerFixture, FrobeniusMatchesDefinition) {
  auto tw = fixture(GetParam());
  const Ring& S = tw->top();
  for (const auto& a : brute::all_elements(S)) {
    Element expect = brute::frobenius(S, tw->q(), a);
    EXPECT_EQ(tw->frobenius(a), expect);
    EXPECT_EQ(tw->frobenius_definitional(a), expect);
  }
}

TEST_P(TowerFixture, FrobeniusIsAutomorphismOfOrderM) {
  auto tw = fixture(GetParam());
  const Ring& S = tw->top();
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Element a = g.element(S), b = g.element(S);
    EXPECT_EQ(tw->frobenius(a + b), tw->frobenius(a) + tw->frobenius(b));
    EXPECT_EQ(tw->frobenius(a * b), tw->frobenius(a) * tw->frobenius(b));
    EXPECT_EQ(tw->frobenius(a, tw->m()), a);
    Element r = g.element(tw->base());
    EXPECT_EQ(tw->frobenius(tw->embed(r)), tw->embed(r));
  }
}

TEST_P(TowerFixture, TraceAgreesWithConjugateSum) {
  auto tw = fixture(GetParam());
  const Ring& S = tw->top();
  Gen g(12);
  Element th = tw->base().theta();
  for (int i = 0; i < 200; ++i) {
    Element a = g.element(S);
    Element t = tw->trace(a);
    EXPECT_EQ(tw->embed(t), brute::trace(*tw, a));
    EXPECT_EQ(tw->trace(tw->embed(th) * a), th * t);
  }
}

TEST_P(TowerFixture, DualBasisIsBiorthogonal) {
  auto tw = fixture(GetParam());
  const auto& a = tw->basis();
  const auto& b = tw->dual_basis();
  ASSERT_EQ(static_cast<int>(a.size()), tw->m());
  for (int i = 0; i < tw->m(); ++i)
    for (int j = 0; j < tw->m(); ++j) {
      Element t = brute::trace(*tw, a[i] * b[j]);
      EXPECT_EQ(t, i == j ? tw->top().one() : tw->top().zero()) << i << "," << j;
    }
}

TEST_P(TowerFixture, CoordinatesRoundTrip) {
  auto tw = fixture(GetParam());
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    Element a = g.element(tw->top());
    EXPECT_EQ(tw->from_coordinates(tw->coordinates(a)), a);
  }
}

TEST_P(TowerFixture, TeichmullerLiftsHaveResidueOrder) {
  auto tw = fixture(GetParam());
  const Ring& S = tw->top();
  const Ring& F = S.residue_field();
  uint64_t ord = S.residue_size() - 1;
  for (uint64_t i = 0; i < F.size(); ++i) {
    ResidueElement r{F.from_index(i)};
    Element w = tw->teichmuller_lift(r);
    EXPECT_EQ(S.residue_project(w), r);
    if (r.value.is_zero()) {
      EXPECT_TRUE(w.is_zero());
    } else {
      EXPECT_TRUE(w.pow(ord).is_one());
    }
  }
}

TEST_P(TowerFixture, FixedRingExtremes) {
  auto tw = fixture(GetParam());
  auto all = tw->fixed_ring(make_subgroup(tw->m(), 1));
  EXPECT_EQ(all.elements.size(), tw->base().size());
  for (const auto& e : all.elements) EXPECT_TRUE(tw->in_base(e));
  auto none = tw->fixed_ring(make_subgroup(tw->m(), tw->m()));
  EXPECT_EQ(none.elements.size(), tw->top().size());
  EXPECT_EQ(tw->stabilizer(all), make_subgroup(tw->m(), 1));
  EXPECT_EQ(tw->stabilizer(none), make_subgroup(tw->m(), tw->m()));
}

INSTANTIATE_TEST_SUITE_P(Small, TowerFixture,
                         ::testing::Values("f4", "gr42", "gr43", "gr92", "f4u2", "f8u2"));

TEST(Galois, IntermediateRingOfGR44) {
  auto tw = fixture("gr44");
  auto h = make_subgroup(4, 2);
  auto T = tw->fixed_ring(h);
  EXPECT_EQ(T.elements.size(), 16u);
  for (const auto& e : T.elements) EXPECT_EQ(tw->frobenius(e, 2), e);
  EXPECT_EQ(tw->stabilizer(T), h);
}

TEST(Galois, SubgroupNeedsDivisor) {
  EXPECT_THROW(make_subgroup(4, 3), Error);
}

}  // namespace
