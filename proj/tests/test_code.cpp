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

Code z4code(int len, std::initializer_list<std::initializer_list<int64_t>> rows) {
  auto tw = fixture("z4");
  std::vector<Vec> vs;
  for (auto r : rows) vs.push_back(brute::vec(tw->top(), r));
  return Code::from_generators(tw, len, vs);
}

/// span{(1, x)} over the tower.
Code line(const TowerPtr& tw, const Element& x) {
  return Code::from_generators(tw, 2, {{tw->top().one(), x}});
}

/// Codewords of a code as packed words over the top ring.
WordSet words(const Code& c) { return brute::span_of(c.rsf()); }

TEST(Codes, Construction) {
  Code c = z4code(2, {{2, 2}, {1, 1}});
  EXPECT_EQ(c.type(), (std::vector<int>{1, 0}));
  EXPECT_EQ(c.rank(), 1);
  EXPECT_EQ(type_to_text(c), "(2;1,0)");

  Code z = Code::zero(fixture("z4"), 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.type(), (std::vector<int>{0, 0}));
  EXPECT_EQ(z.log2_cardinality(), 0);

  Code f = Code::full(fixture("z4"), 3);
  EXPECT_EQ(f.type(), (std::vector<int>{3, 0}));
  EXPECT_EQ(f, z4code(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Codes, Contains) {
  Code c = z4code(2, {{1, 1}});
  auto r = brute::ring("z4");
  EXPECT_TRUE(c.contains(brute::vec(*r, {0, 0})));
  EXPECT_TRUE(c.contains(brute::vec(*r, {3, 3})));
  EXPECT_FALSE(c.contains(brute::vec(*r, {1, 2})));
  try {
    c.contains(brute::vec(*r, {1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(Codes, SumAndIntersect) {
  Code b = z4code(2, {{1, 1}});
  auto tw = fixture("z4");
  EXPECT_EQ(sum(b, Code::zero(tw, 2)), b);
  EXPECT_EQ(intersect(b, Code::full(tw, 2)), b);
  EXPECT_TRUE(intersect(z4code(2, {{1, 0}}), z4code(2, {{0, 1}})).is_zero());
  Code i = intersect(b, z4code(2, {{2, 0}, {0, 2}}));
  EXPECT_EQ(i, z4code(2, {{2, 2}}));
  EXPECT_EQ(words(i), brute::intersect(words(b), words(z4code(2, {{2, 0}, {0, 2}}))));
}

TEST(Codes, DualExamples) {
  auto tw = fixture("z4");
  EXPECT_TRUE(dual(Code::full(tw, 3)).is_zero());
  EXPECT_EQ(dual(Code::zero(tw, 3)), Code::full(tw, 3));
  EXPECT_EQ(dual(z4code(2, {{1, 1}})), z4code(2, {{1, 3}}));
  Code b = z4code(2, {{1, 1}, {0, 2}});
  EXPECT_EQ(b.type(), (std::vector<int>{1, 1}));
  EXPECT_EQ(dual(b).type(), (std::vector<int>{0, 1}));
  EXPECT_EQ(dual(b), z4code(2, {{2, 2}}));
}

TEST(Codes, HermitianNeedsEvenDegree) {
  auto tw = fixture("gr43");
  try {
    dual(Code::full(tw, 2), Form::hermitian);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HermitianRequiresEvenDegree);
  }
}

TEST(Codes, AutomorphismMovesPrimitiveRoot) {
  auto tw = fixture("gr43");
  Element xi = tw->primitive_root(7);
  Code b = line(tw, xi);
  EXPECT_EQ(apply_automorphism(b, 0), b);
  EXPECT_EQ(apply_automorphism(b, 1), line(tw, xi.pow(2)));
  Code c = z4code(2, {{1, 1}});
  Code e = extension(c, tw);
  EXPECT_EQ(apply_automorphism(e, 1), e);
}

TEST(Codes, ExtensionRestrictionRoundTrip) {
  Code c = z4code(2, {{1, 1}});
  auto tw = fixture("gr42");
  Code e = extension(c, tw);
  EXPECT_EQ(restriction(e), c);
  EXPECT_EQ(trace_code(e), c);
  EXPECT_TRUE(restriction(Code::zero(tw, 2)).is_zero());
  EXPECT_TRUE(trace_code(Code::zero(tw, 2)).is_zero());
  EXPECT_EQ(restriction(Code::full(tw, 2)), Code::full(fixture("z4"), 2));
  EXPECT_EQ(trace_code(Code::full(tw, 2)), Code::full(fixture("z4"), 2));
}

TEST(Codes, ClosureInteriorOfLine) {
  auto tw = fixture("gr43");
  Element xi = tw->primitive_root(7);
  Code b = line(tw, xi);
  EXPECT_FALSE(is_galois_invariant(b));

  // brute: sum and intersection of the three conjugate spans as word sets
  auto c0 = line(tw, xi), c1 = line(tw, xi.pow(2)), c2 = line(tw, xi.pow(4));
  BruteSpace sp(tw->top(), 2);
  std::vector<Vec> gens;
  for (const auto* c : {&c0, &c1, &c2})
    for (auto& r : c->rsf().row_list()) gens.push_back(r);
  EXPECT_EQ(words(closure(b)), sp.span(gens));
  EXPECT_EQ(words(interior(b)), brute::intersect(brute::intersect(words(c0), words(c1)), words(c2)));

  EXPECT_EQ(interior(dual(b)), dual(closure(b)));
  EXPECT_TRUE(is_galois_invariant(closure(b)));
  EXPECT_TRUE(is_galois_invariant(interior(b)));
}

TEST(Codes, InvariantCodesAreTheirOwnClosure) {
  auto tw = fixture("gr43");
  Code e = extension(z4code(3, {{1, 2, 3}, {0, 2, 0}}), tw);
  EXPECT_TRUE(is_galois_invariant(e));
  EXPECT_EQ(closure(e), e);
  EXPECT_EQ(interior(e), e);
  EXPECT_TRUE(is_galois_invariant(Code::zero(tw, 2)));
  EXPECT_TRUE(is_galois_invariant(Code::full(tw, 2)));
}

TEST(Codes, DelsarteExamples) {
  auto tw = fixture("gr42");
  auto z = delsarte_check(Code::zero(tw, 2));
  EXPECT_TRUE(z.equal);
  EXPECT_EQ(z.lhs, Code::full(fixture("z4"), 2));
  auto f = delsarte_check(Code::full(tw, 2));
  EXPECT_TRUE(f.equal);
  EXPECT_TRUE(f.lhs.is_zero());
  auto l = delsarte_check(line(tw, tw->primitive_root(3)));
  EXPECT_TRUE(l.equal);
  EXPECT_EQ(l.lhs, l.rhs);
}

TEST(Codes, SubcodeCorrespondence) {
  auto tw = fixture("gr44");
  Element xi = tw->primitive_root(15);
  Code b = line(tw, xi);
  EXPECT_EQ(subcode_correspondence(b, make_subgroup(4, 4)), b);
  EXPECT_EQ(subcode_correspondence(b, make_subgroup(4, 1)), interior(b));
  Code h2 = subcode_correspondence(b, make_subgroup(4, 2));
  EXPECT_EQ(h2, intersect(b, apply_automorphism(b, 2)));
  EXPECT_EQ(fix_via_fixed_subring(b, make_subgroup(4, 2)), h2);
  EXPECT_EQ(2 % code_stabilizer(b, h2).d, 0);

  Code c = line(tw, xi.pow(5));  // coordinates in the sigma^2-fixed subring
  EXPECT_EQ(subcode_correspondence(c, make_subgroup(4, 2)), c);
  EXPECT_EQ(code_stabilizer(c, c), make_subgroup(4, 2));
}

TEST(Codes, LevelSetsOfLines) {
  auto t3 = fixture("gr43");
  Code b3 = line(t3, t3->primitive_root(7));
  EXPECT_EQ(level_set(b3), (std::vector<int>{3}));
  auto rep3 = bounds_report(b3);
  EXPECT_LE(rep3.rank_closure, 3);

  auto t2 = fixture("gr42");
  Code b2 = line(t2, t2->primitive_root(3));
  EXPECT_EQ(level_set(b2), (std::vector<int>{2}));
  auto rep2 = bounds_report(b2);
  EXPECT_GE(rep2.rank_trace, 1);
  EXPECT_LE(rep2.rank_trace, 2);
}

TEST(Codes, BoundsCollapseOnInvariantCodes) {
  auto tw = fixture("gr43");
  Gen g(31);
  for (int i = 0; i < 40; ++i) {
    Code e = g.invariant_code(tw, 4, 3);
    auto rep = bounds_report(e);
    for (int m : rep.level_set) EXPECT_EQ(m, 1);
    EXPECT_EQ(rep.rank_restriction, rep.rank_code);
    EXPECT_EQ(rep.rank_trace, rep.rank_code);
  }
}

class CodeFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(CodeFixture, DualInvolutionAndCardinality) {
  auto tw = fixture(GetParam());
  Gen g(32);
  double q = tw->top().log2_size();
  for (int i = 0; i < 60; ++i) {
    Code b = g.mixed_code(tw, 4, 3);
    Code d = dual(b);
    EXPECT_EQ(dual(d), b);
    EXPECT_DOUBLE_EQ(b.log2_cardinality() + d.log2_cardinality(), q * b.length());
    if (tw->m() % 2 == 0) {
      EXPECT_EQ(dual(dual(b, Form::hermitian), Form::hermitian), b);
    }
    if (q * b.length() <= 12) {
      BruteSpace sp(tw->top(), b.length());
      EXPECT_EQ(words(d), sp.orthogonal(b.rsf().row_list()));
    }
  }
}

TEST_P(CodeFixture, RestrictionInsideTrace) {
  auto tw = fixture(GetParam());
  Gen g(33);
  for (int i = 0; i < 60; ++i) {
    Code b = g.mixed_code(tw, 4, 3);
    Code res = restriction(b), tr = trace_code(b);
    EXPECT_TRUE(tr.contains(res));
    EXPECT_EQ(res, restriction_via_coordinates(b));
    EXPECT_TRUE(b.contains(extension(res, tw)));
    EXPECT_TRUE(closure(b).contains(b));
    EXPECT_TRUE(b.contains(interior(b)));
  }
}

TEST_P(CodeFixture, RestrictionAndTraceAgainstEnumeration) {
  auto tw = fixture(GetParam());
  Gen g(34);
  const Ring& S = tw->top();
  const Ring& R = tw->base();
  for (int i = 0; i < 30; ++i) {
    Code b = g.mixed_code(tw, 2, 2);
    if (S.log2_size() * b.length() > 16) continue;
    BruteSpace ss(S, b.length()), rs(R, b.length());
    std::set<uint64_t> res, tr;
    for (const auto& w : ss.words(words(b))) {
      bool in_r = true;
      Vec t;
      for (const auto& x : w) {
        in_r = in_r && tw->in_base(x);
        t.push_back(tw->to_base(brute::trace(*tw, x)));
      }
      if (in_r) {
        Vec r;
        for (const auto& x : w) r.push_back(tw->to_base(x));
        res.insert(rs.encode(r));
      }
      tr.insert(rs.encode(t));
    }
    EXPECT_EQ(brute::span_of(restriction(b).rsf()), WordSet(res.begin(), res.end()));
    EXPECT_EQ(brute::span_of(trace_code(b).rsf()), WordSet(tr.begin(), tr.end()));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, CodeFixture, ::testing::Values("gr42", "gr43", "f4u2", "gr92"));

TEST(Codes, ExhaustiveDoubleDualLengthTwo) {
  auto tw = fixture("z4");
  BruteSpace sp(tw->top(), 2);
  std::set<std::vector<Element>> seen;
  for (uint64_t a = 0; a < sp.size(); ++a)
    for (uint64_t b = a; b < sp.size(); ++b) {
      Code c = Code::from_generators(tw, 2, {sp.decode(a), sp.decode(b)});
      EXPECT_EQ(dual(dual(c)), c);
    }
}

}  // namespace
