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

class IoFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(IoFixture, ElementRoundTrips) {
  auto tw = fixture(GetParam());
  const Ring& S = tw->top();
  Gen g(41);
  for (int i = 0; i < 100; ++i) {
    Element a = g.element(S);
    EXPECT_EQ(element_from_json(S, element_to_json(a)), a);
    EXPECT_EQ(element_from_text(S, element_to_text(a)), a);
  }
}

TEST_P(IoFixture, CodeRoundTrips) {
  auto tw = fixture(GetParam());
  Gen g(42);
  for (int i = 0; i < 30; ++i) {
    Code c = g.code(tw, 4, 3);
    json j = code_to_json(c);
    Code back = code_from_json(json::parse(j.dump()));
    EXPECT_EQ(back, c);
    if (c.is_zero()) continue;  // a matrix without rows carries no width
    EXPECT_EQ(matrix_from_text(tw->top_ptr(), matrix_to_text(c.rsf())), c.rsf());
    EXPECT_EQ(matrix_from_json(tw->top_ptr(), matrix_to_json(c.rsf())), c.rsf());
  }
}

TEST_P(IoFixture, TowerRoundTrip) {
  auto tw = fixture(GetParam());
  auto back = tower_from_json(tower_to_json(*tw));
  EXPECT_TRUE(back->same_as(*tw));
  EXPECT_TRUE(ring_from_json(ring_to_json(tw->base()))->same_as(tw->base()));
}

INSTANTIATE_TEST_SUITE_P(All, IoFixture, ::testing::ValuesIn(fixture_names()));

TEST(Io, ElementEncodings) {
  auto z4 = brute::ring("z4");
  EXPECT_EQ(element_to_json(z4->from_int(3)), json(3));
  auto f2u2 = brute::ring("f2u2");
  EXPECT_EQ(element_to_json(f2u2->theta()), json::parse("[0,1]"));
  EXPECT_EQ(element_to_text(f2u2->theta()), "0,1");
  auto gr = brute::ring("gr42");
  Element y = gr->from_digits(std::vector<int64_t>{0, 1});
  EXPECT_EQ(element_to_json(y), json::parse("[0,1]"));
  auto f4u2 = brute::ring("f4u2");
  EXPECT_EQ(element_to_json(f4u2->theta()), json::parse("[[0,1],[0,0]]"));
}

TEST(Io, ParseErrors) {
  auto z4 = brute::ring("z4");
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind([&] { element_from_text(*z4, "5"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([&] { element_from_text(*z4, "x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([&] { element_from_text(*brute::ring("gr42"), "1,2,3"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([&] { matrix_from_text(z4, "1 1;1"); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind([&] { fixture("nope"); }), ErrorKind::UnknownFixture);
  EXPECT_EQ(kind([&] { element_from_json(*z4, json::parse("\"a\"")); }), ErrorKind::ParseError);
}

TEST(Io, SmallIntegerShorthand) {
  auto gr = brute::ring("gr42");
  EXPECT_EQ(element_from_text(*gr, "3"), gr->from_int(3));
  EXPECT_EQ(element_from_json(*gr, json(2)), gr->from_int(2));
}

TEST(Io, SetsAndTypes) {
  EXPECT_EQ(set_to_text({1, 2, 4}), "{1,2,4}");
  EXPECT_EQ(set_to_text({}), "{}");
  EXPECT_EQ(set_from_text("4,1,2", 7), (DefiningSet{1, 2, 4}));
  EXPECT_EQ(set_from_text("{0, 3}", 7), (DefiningSet{0, 3}));
  EXPECT_THROW(set_from_text("9", 7), Error);
}

TEST(Io, MatrixText) {
  auto z4 = brute::ring("z4");
  Mat m = matrix_from_text(z4, "1 2\n3 0");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m, matrix_from_text(z4, "1 2; 3 0"));
  EXPECT_EQ(matrix_to_text(m), "1 2\n3 0\n");
}

}  // namespace
