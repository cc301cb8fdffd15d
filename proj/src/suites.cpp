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

#include "chainring/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "chainring/gen.hpp"
#include "chainring/io.hpp"
#include "chainring/oracle.hpp"

namespace chainring {

namespace {

constexpr double kSpanCheckBits = 16;
constexpr double kBruteBits = 12;

struct Tally {
  SuiteResult& r;

  void check(bool ok, const std::function<std::string()>& what) {
    ++r.cases;
    if (ok) {
      ++r.passed;
      return;
    }
    ++r.failed;
    if (r.counterexample.empty()) r.counterexample = what();
  }
};

std::string code_text(const Code& c) {
  if (c.is_zero()) return "0 (length " + std::to_string(c.length()) + ")";
  std::string m = matrix_to_text(c.rsf());
  std::replace(m.begin(), m.end(), '\n', ';');
  m.pop_back();
  return "[" + m + "]";
}

std::string mat_text(const Mat& a) {
  std::string m = matrix_to_text(a);
  std::replace(m.begin(), m.end(), '\n', ';');
  if (!m.empty()) m.pop_back();
  return "[" + m + "]";
}

double log2_words(const Ring& ring, int l) { return l * ring.log2_size(); }

std::vector<std::string> pick(const SuiteOptions& opt, std::vector<std::string> def) {
  return opt.fixtures.empty() ? def : opt.fixtures;
}

int pick(int v, int def) { return v >= 0 ? v : def; }

Element frob_definitional(const Tower& tw, Element a, int k) {
  for (int i = 0; i < k; ++i) a = tw.frobenius_definitional(a);
  return a;
}

Vec trace_definitional(const Tower& tw, const Vec& x) {
  Vec out;
  for (const auto& e : x) {
    Element acc = tw.top().zero(), cur = e;
    for (int k = 0; k < tw.m(); ++k) {
      acc += cur;
      cur = tw.frobenius_definitional(cur);
    }
    out.push_back(tw.to_base(acc));
  }
  return out;
}

WordSet words_of(const BruteSpace& sp, const Code& c) { return sp.span(c.rsf().row_list()); }

WordSet sorted_unique(WordSet w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

// ---------------------------------------------------------------- rsf

SuiteResult suite_rsf(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  Gen gen(opt.seed);
  const int cases = pick(opt.cases, 1000), transforms = pick(opt.transforms, 200);
  long span_checks = 0;
  for (const auto& name : pick(opt, {"z4", "z9", "gr42", "f2u2"})) {
    TowerPtr tw = fixture(name);
    const RingPtr& S = tw->top_ptr();
    for (int i = 0; i < cases; ++i) {
      const int k = gen.uniform(1, 4), l = gen.uniform(1, 6);
      Mat a = gen.matrix(S, k, l);
      RsfReport rep = row_standard_form(a, true);
      const Mat& canon = rep.rsf;
      std::string bad;
      RsfCheck chk = is_rsf(canon);
      if (!chk.ok) bad = "output not in RSF: " + chk.violation;
      if (bad.empty() && !(rep.transform * a == canon)) bad = "transform does not map input to RSF";
      if (bad.empty() && !(rsf(canon) == canon)) bad = "RSF not idempotent";
      for (int j = 0; bad.empty() && j < transforms; ++j) {
        Mat p = gen.invertible(S, k);
        if (!(rsf(p * a) == canon)) bad = "RSF(PA) differs for P = " + mat_text(p);
      }
      if (bad.empty() && log2_words(*S, l) <= kSpanCheckBits) {
        ++span_checks;
        BruteSpace sp(*S, l);
        if (sp.span(a.row_list()) != sp.span(canon.row_list())) bad = "row spans differ";
      }
      t.check(bad.empty(), [&] { return name + " A=" + mat_text(a) + ": " + bad; });
    }
  }
  r.notes.push_back("exhaustive span checks: " + std::to_string(span_checks));
  return r;
}

// ---------------------------------------------------------------- dual

SuiteResult suite_dual(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  Gen gen(opt.seed);
  const int cases = pick(opt.cases, 500);
  long brute = 0;
  for (const auto& name : pick(opt, {"z4", "z9", "gr42", "f2u2", "gr43", "f8u2"})) {
    TowerPtr tw = fixture(name);
    const Ring& S = tw->top();
    const int s = S.s();
    for (int i = 0; i < cases; ++i) {
      Code b = gen.code(tw, 6, 4);
      Code d = dual(b);
      const int l = b.length();
      std::string bad;
      if (!(dual(d) == b)) bad = "dual is not an involution";
      long units = 0;
      for (int u = 0; u < s; ++u) units += static_cast<long>(b.type()[u] + d.type()[u]) * (s - u);
      if (bad.empty() && units != static_cast<long>(l) * s) bad = "|B| |B^perp| != |S|^l";
      if (bad.empty()) {
        std::vector<int> want(s);
        want[0] = l - b.rank();
        for (int u = 1; u < s; ++u) want[u] = b.type()[s - u];
        if (d.type() != want) bad = "dual type " + type_to_text(d) + " does not match the type formula";
      }
      if (bad.empty() && log2_words(S, l) <= kBruteBits) {
        ++brute;
        BruteSpace sp(S, l);
        if (sp.orthogonal(b.rsf().row_list()) != words_of(sp, d)) bad = "dual differs from enumeration";
      }
      t.check(bad.empty(), [&] { return name + " B=" + code_text(b) + ": " + bad; });
    }
  }
  r.notes.push_back("duals checked by enumeration: " + std::to_string(brute));
  return r;
}

// ---------------------------------------------------------------- delsarte

/// Every S-submodule of S^l: cyclic submodules closed under sums.
std::vector<Code> all_codes(const TowerPtr& tw, int l) {
  BruteSpace sp(tw->top(), l);
  std::map<std::string, Code> found;
  std::vector<Code> list;
  auto add = [&](const Code& c) {
    if (found.emplace(matrix_to_text(c.rsf()), c).second) {
      list.push_back(c);
      return true;
    }
    return false;
  };
  add(Code::zero(tw, l));
  for (uint64_t w = 1; w < sp.size(); ++w) add(Code::from_generators(tw, l, {sp.decode(w)}));
  for (bool grew = true; grew;) {
    grew = false;
    const size_t n = list.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) grew |= add(sum(list[i], list[j]));
  }
  return list;
}

std::string delsarte_failure(const Code& b) {
  const Tower& tw = *b.tower();
  Code lhs = trace_code(dual_phi_prime(b));
  Code rhs = dual(restriction(b));
  if (!(lhs == rhs)) return "Tr(dual) != dual(Res)";
  if (!(rhs == dual(restriction_via_coordinates(b)))) return "restriction pipelines disagree";
  const int l = b.length();
  if (log2_words(tw.top(), l) > kBruteBits) return {};
  BruteSpace sS(tw.top(), l), sR(tw.base(), l);
  std::function<Element(const Element&)> conj;
  if (tw.m() % 2 == 0) conj = [&](const Element& e) { return frob_definitional(tw, e, tw.m() / 2); };
  WordSet lw;
  for (const auto& x : sS.words(sS.orthogonal(b.rsf().row_list(), conj))) lw.push_back(sR.encode(trace_definitional(tw, x)));
  std::vector<Vec> res;
  for (const auto& x : sS.words(words_of(sS, b)))
    if (std::all_of(x.begin(), x.end(), [&](const Element& e) { return tw.in_base(e); })) {
      Vec y;
      for (const auto& e : x) y.push_back(tw.to_base(e));
      res.push_back(y);
    }
  if (sorted_unique(lw) != words_of(sR, lhs)) return "trace of the dual differs from enumeration";
  if (sR.orthogonal(res) != words_of(sR, rhs)) return "dual of the restriction differs from enumeration";
  return {};
}

SuiteResult suite_delsarte(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  Gen gen(opt.seed);
  const bool exhaustive = opt.fixtures.empty();
  const int cases = pick(opt.cases, 300);
  for (const auto& name : pick(opt, {"gr42", "gr43"})) {
    TowerPtr tw = fixture(name);
    if (exhaustive) {
      for (int l = 1; l <= 2; ++l) {
        auto codes = all_codes(tw, l);
        r.notes.push_back(name + ": " + std::to_string(codes.size()) + " codes of length " + std::to_string(l));
        for (const auto& b : codes) {
          std::string bad = delsarte_failure(b);
          t.check(bad.empty(), [&] { return name + " B=" + code_text(b) + ": " + bad; });
        }
      }
    }
    for (int i = 0; i < cases; ++i) {
      Code b = gen.mixed_code(tw, 5, 4);
      std::string bad = delsarte_failure(b);
      t.check(bad.empty(), [&] { return name + " B=" + code_text(b) + ": " + bad; });
    }
  }
  return r;
}

// ---------------------------------------------------------------- closure

SuiteResult suite_closure(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  Gen gen(opt.seed);
  const int cases = pick(opt.cases, 300);
  long invariant = 0;
  for (const auto& name : pick(opt, {"gr43"})) {
    TowerPtr tw = fixture(name);
    const int m = tw->m();
    for (int i = 0; i < cases; ++i) {
      Code b = gen.mixed_code(tw, 5, 4);
      std::string bad;
      Code meet = b, join = b;
      for (int j = 1; j < m; ++j) {
        meet = intersect(meet, apply_automorphism(b, j));
        join = sum(join, apply_automorphism(b, j));
      }
      if (!(meet == extension(restriction(b), tw))) bad = "intersection of conjugates != Ext(Res)";
      if (bad.empty() && !(meet == extension(restriction_via_coordinates(b), tw)))
        bad = "intersection of conjugates != Ext(Res) via coordinates";
      if (bad.empty() && !(join == extension(trace_code(b), tw))) bad = "sum of conjugates != Ext(Tr)";
      if (bad.empty() && !(interior(dual(b)) == dual(closure(b)))) bad = "interior(dual) != dual(closure)";
      const bool over_r = is_galois_invariant(b), fixed = is_sigma_fixed(b);
      const bool tr_res = trace_code(b) == restriction(b);
      invariant += over_r;
      if (bad.empty() && !(over_r == fixed && fixed == tr_res)) bad = "invariance criteria disagree";
      if (bad.empty() && log2_words(tw->top(), b.length()) <= kBruteBits) {
        BruteSpace sS(tw->top(), b.length()), sR(tw->base(), b.length());
        WordSet res, tr;
        for (const auto& x : sS.words(words_of(sS, b))) {
          tr.push_back(sR.encode(trace_definitional(*tw, x)));
          if (std::all_of(x.begin(), x.end(), [&](const Element& e) { return tw->in_base(e); })) {
            Vec y;
            for (const auto& e : x) y.push_back(tw->to_base(e));
            res.push_back(sR.encode(y));
          }
        }
        if (sorted_unique(res) != words_of(sR, restriction(b))) bad = "restriction differs from enumeration";
        else if (sorted_unique(tr) != words_of(sR, trace_code(b))) bad = "trace code differs from enumeration";
      }
      t.check(bad.empty(), [&] { return name + " B=" + code_text(b) + ": " + bad; });
    }
  }
  r.notes.push_back("Galois-invariant samples: " + std::to_string(invariant));
  return r;
}

// ---------------------------------------------------------------- bounds

SuiteResult suite_bounds(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  Gen gen(opt.seed);
  const int cases = pick(opt.cases, 500);
  std::map<std::string, long> misses;
  long invariant = 0;
  for (const auto& name : pick(opt, {"gr42", "gr43"})) {
    TowerPtr tw = fixture(name);
    const int m = tw->m();
    for (int i = 0; i < cases; ++i) {
      Code b = gen.mixed_code(tw, 5, 4);
      BoundsReport rep = bounds_report(b);
      std::string bad;
      for (const auto& c : rep.checks)
        if (!c.holds) {
          ++misses[c.name];
          if (bad.empty())
            bad = c.name + ": " + std::to_string(c.lhs) + " " + c.relation + " " + std::to_string(c.rhs) + " fails";
        }
      for (int mi : rep.level_set)
        if (m % mi != 0 && bad.empty()) bad = "level " + std::to_string(mi) + " does not divide m";
      if (is_galois_invariant(b)) {
        ++invariant;
        const bool collapse = rep.rank_restriction == rep.rank_code && rep.rank_code == rep.rank_trace &&
                              rep.rank_interior == rep.rank_code && rep.rank_closure == rep.rank_code &&
                              std::all_of(rep.level_set.begin(), rep.level_set.end(), [](int x) { return x == 1; });
        if (!collapse && bad.empty()) bad = "rank chain does not collapse for an invariant code";
      }
      t.check(bad.empty(), [&] { return name + " B=" + code_text(b) + ": " + bad; });
    }
  }
  for (const auto& [k, v] : misses) r.notes.push_back(k + " failed on " + std::to_string(v) + " codes");
  r.notes.push_back("Galois-invariant samples: " + std::to_string(invariant));
  return r;
}

// ---------------------------------------------------------------- factorization

SuiteResult suite_factorization(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  std::vector<std::pair<std::string, int>> cases;
  if (opt.fixtures.empty() && opt.ell < 0) {
    cases = {{"z4", 7}, {"z8", 7}, {"z9", 2}, {"z9", 13}, {"f2u2", 7}};
  } else {
    for (const auto& f : pick(opt, {"z4"})) cases.emplace_back(f, pick(opt.ell, 7));
  }
  for (const auto& [name, ell] : cases) {
    TowerPtr base = fixture(name);
    if (base->m() != 1) fail(ErrorKind::Mismatch, "factorization needs a fixture without extension");
    auto ctx = CyclicContext::make(base->top_ptr(), ell);
    const Ring& R = base->top();
    const auto& reps = ctx->cosets().reps;
    std::string bad;
    Poly prod = poly::constant(R.one());
    for (size_t i = 0; i < reps.size(); ++i) {
      const Poly& f = ctx->factors()[i];
      prod = poly::mul(prod, f);
      if (!poly::is_monic(f) || poly::degree(f) != static_cast<int>(ctx->cosets().cosets[i].size()))
        bad = "factor " + std::to_string(reps[i]) + " has the wrong shape";
      Poly fr;
      for (const auto& c : f) fr.push_back(R.residue_project(c).value);
      if (bad.empty() && !poly::is_irreducible(poly::trim(fr)))
        bad = "residue image of factor " + std::to_string(reps[i]) + " is reducible";
      const Tower& tw = *ctx->tower();
      Poly fs;
      for (const auto& c : f) fs.push_back(tw.embed(c));
      for (int a : ctx->cosets().cosets[i])
        if (bad.empty() && !poly::eval(fs, ctx->xi().pow(a)).is_zero())
          bad = "xi^" + std::to_string(a) + " is not a root of its factor";
    }
    if (bad.empty() && prod != poly::x_pow_minus_one(R, ell)) bad = "product of factors != x^l - 1";
    Poly total(ell, R.zero());
    for (size_t i = 0; bad.empty() && i < reps.size(); ++i) {
      const Poly& e = ctx->idempotents()[i];
      total = poly::add(total, e);
      if (poly::trim(poly::cyclic_mul(e, e, ell)) != poly::trim(e)) bad = "e_" + std::to_string(reps[i]) + " is not idempotent";
      for (size_t j = 0; bad.empty() && j < reps.size(); ++j) {
        Poly rem = poly::mod(e, ctx->factors()[j]);
        if (j != i && !poly::trim(poly::cyclic_mul(e, ctx->idempotents()[j], ell)).empty())
          bad = "e_" + std::to_string(reps[i]) + " e_" + std::to_string(reps[j]) + " != 0";
        else if (j == i && poly::trim(rem) != poly::constant(R.one()))
          bad = "e_" + std::to_string(reps[i]) + " is not 1 modulo its factor";
        else if (j != i && !poly::trim(rem).empty())
          bad = "e_" + std::to_string(reps[i]) + " is not 0 modulo another factor";
      }
    }
    if (bad.empty() && poly::trim(total) != poly::constant(R.one())) bad = "idempotents do not sum to 1";
    t.check(bad.empty(), [&] { return name + " l=" + std::to_string(ell) + ": " + bad; });
    r.notes.push_back(name + " l=" + std::to_string(ell) + ": " + std::to_string(reps.size()) + " factors");
  }
  return r;
}

// ---------------------------------------------------------------- bijection

SuiteResult suite_bijection(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const std::string name = pick(opt, {"z4"}).front();
  const int ell = pick(opt.ell, 7);
  TowerPtr base = fixture(name);
  if (base->m() != 1) fail(ErrorKind::Mismatch, "bijection needs a fixture without extension");
  const Ring& R = base->top();
  auto ctx = CyclicContext::make(base->top_ptr(), ell);
  BruteSpace sp(R, ell);
  std::vector<WordSet> ideals = brute_ideals(R, ell);
  std::set<WordSet> ideal_set(ideals.begin(), ideals.end());
  std::map<WordSet, MultiIndex> seen;
  auto show = [](const MultiIndex& mi) {
    std::string s = "(";
    for (size_t i = 0; i < mi.size(); ++i) s += (i ? "," : "") + std::to_string(mi[i]);
    return s + ")";
  };
  for (const auto& mi : ctx->all_multiindices()) {
    Code c = ctx->code_from_multiindex(mi);
    WordSet w = words_of(sp, c);
    std::string bad;
    if (!is_cyclic(c)) bad = "code is not cyclic";
    else if (!ideal_set.count(w)) bad = "code is not an enumerated ideal";
    else if (auto [it, fresh] = seen.emplace(w, mi); !fresh) bad = "same code as " + show(it->second);
    t.check(bad.empty(), [&] { return name + " l=" + std::to_string(ell) + " t=" + show(mi) + ": " + bad; });
  }
  t.check(seen.size() == ideals.size(), [&] {
    return std::to_string(ideals.size()) + " ideals enumerated but " + std::to_string(seen.size()) +
           " distinct multi-index codes";
  });
  r.notes.push_back(std::to_string(seen.size()) + " distinct codes confirmed against " +
                    std::to_string(ideals.size()) + " enumerated ideals");
  return r;
}

// ---------------------------------------------------------------- defining sets

SuiteResult suite_defining_sets(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const std::string name = pick(opt, {"z4"}).front();
  const int ell = pick(opt.ell, 7);
  TowerPtr base = fixture(name);
  auto ctx = CyclicContext::make(base->top_ptr(), ell);
  const auto& tw = ctx->tower();
  const int s = base->top().s();
  if (ell > 16) fail(ErrorKind::SizeGuardExceeded, "too many subsets");
  long as_written = 0, q_inv = 0;
  for (uint32_t mask = 0; mask < (1u << ell); ++mask) {
    DefiningSet a;
    for (int i = 0; i < ell; ++i)
      if (mask >> i & 1) a.push_back(i);
    std::string bad;
    for (int tt = 0; tt < s && bad.empty(); ++tt) {
      InvarianceReport rep = ctx->invariance_and_closure(a, tt);
      if (rep.galois_invariant != rep.q_invariant) bad = "invariance and q-invariance disagree at t=" + std::to_string(tt);
      else if (!rep.closure_matches) bad = "closure is not B(q-closure) at t=" + std::to_string(tt);
    }
    q_inv += is_q_invariant(a, ctx->cosets());
    Code b = ctx->eval_code(a, 0);
    if (bad.empty() && !a.empty() && !(ideal_code(tw, ctx->generator_polynomial(a), ell) == b))
      bad = "generator polynomial ideal != B(A)";
    Code d = dual(b);
    if (bad.empty() && !(d == ctx->eval_code(opposite(complement(a, ell), ell), 0)))
      bad = "dual of B(A) != B(-complement A)";
    DefiningSet literal;
    for (int x : complement(a, ell)) literal.push_back(ell - 1 - x);
    as_written += d == ctx->eval_code(normalize_set(literal, ell), 0);
    t.check(bad.empty(), [&] { return name + " l=" + std::to_string(ell) + " A=" + set_to_text(a) + ": " + bad; });
  }
  r.notes.push_back("q-invariant sets: " + std::to_string(q_inv));
  r.notes.push_back("dual equals B({l-1-a}) for " + std::to_string(as_written) + " of " +
                    std::to_string(1u << ell) + " sets");
  return r;
}

// ---------------------------------------------------------------- restricted

SuiteResult suite_restricted(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const std::string name = pick(opt, {"z4"}).front();
  const int ell = pick(opt.ell, 7);
  TowerPtr base = fixture(name);
  auto ctx = CyclicContext::make(base->top_ptr(), ell);
  const int s = base->top().s();
  const auto& table = ctx->cosets();
  const size_t nc = table.reps.size();
  if (nc > 16) fail(ErrorKind::SizeGuardExceeded, "too many cosets");
  long f1f2 = 0, f1f3 = 0, f2f3 = 0, delsarte_form = 0, shifted = 0, total = 0;
  const TowerPtr rt = ctx->tower()->base_tower();
  for (uint32_t mask = 0; mask < (1u << nc); ++mask) {
    DefiningSet a;
    for (size_t i = 0; i < nc; ++i)
      if (mask >> i & 1) a.insert(a.end(), table.cosets[i].begin(), table.cosets[i].end());
    a = normalize_set(a, ell);
    for (int tt = 0; tt <= s; ++tt) {
      RestrictedReport rep = ctx->restricted_code(a, tt);
      ++total;
      f1f2 += rep.trace_eq_restriction;
      f1f3 += rep.trace_eq_opposite;
      f2f3 += rep.restriction_eq_opposite;
      delsarte_form += dual(trace_code(ctx->eval_code(a, tt))) == rep.by_dual_restriction;
      const Element th = base->top().theta_pow(s - tt);
      Code layer = Code::from_matrix(rt, Mat::identity(rt->top_ptr(), ell).map(rt->top_ptr(), [&](const Element& e) { return e * th; }));
      shifted += sum(restriction(ctx->eval_code(opposite(complement(a, ell), ell), 0)), layer) == rep.by_dual_restriction;
      const bool ok = rep.trace_eq_restriction && rep.trace_eq_opposite && rep.restriction_eq_opposite;
      t.check(ok, [&] {
        return name + " l=" + std::to_string(ell) + " A=" + set_to_text(a) + " t=" + std::to_string(tt) +
               ": Tr(B_{s-t}(A))^perp=" + code_text(rep.by_trace_dual) + " Res(B_t(A)^perp)=" +
               code_text(rep.by_dual_restriction) + " Res(B_{s-t}(-complement A))=" + code_text(rep.by_opposite);
      });
    }
  }
  auto frac = [&](long v) { return std::to_string(v) + "/" + std::to_string(total); };
  r.notes.push_back("Tr(B_{s-t}(A))^perp = Res(B_t(A)^perp): " + frac(f1f2));
  r.notes.push_back("Tr(B_{s-t}(A))^perp = Res(B_{s-t}(-complement A)): " + frac(f1f3));
  r.notes.push_back("Res(B_t(A)^perp) = Res(B_{s-t}(-complement A)): " + frac(f2f3));
  r.notes.push_back("Tr(B_t(A))^perp = Res(B_t(A)^perp): " + frac(delsarte_form));
  r.notes.push_back("Res(B(-complement A)) + theta^{s-t} R^l = Res(B_t(A)^perp): " + frac(shifted));
  return r;
}

// ---------------------------------------------------------------- bch

SuiteResult suite_bch(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const std::string name = pick(opt, {"z4"}).front();
  const int ell = pick(opt.ell, 7);
  TowerPtr base = fixture(name);
  auto ctx = CyclicContext::make(base->top_ptr(), ell);
  const int s = base->top().s();
  std::set<DefiningSet> sets;
  for (int w = 1; w < ell; ++w) {
    if (std::gcd(w, ell) != 1) continue;
    for (int u = 0; u < ell; ++u)
      for (int v = 1; v <= ell; ++v) {
        DefiningSet a;
        for (int i = 0; i < v; ++i) a.push_back(static_cast<int>((static_cast<long>(w) * (u + i)) % ell));
        sets.insert(normalize_set(a, ell));
      }
  }
  BruteSpace sp(base->top(), ell);
  long vacuous = 0;
  for (const auto& a : sets)
    for (int tt = 0; tt < s; ++tt) {
      BchReport rep = ctx->bch_check(a, tt);
      std::string bad;
      const int brute = brute_min_weight(sp, words_of(sp, rep.code));
      if (rep.code.is_zero()) {
        ++vacuous;
        if (brute != -1) bad = "enumeration finds nonzero words in the zero code";
      } else {
        if (brute != *rep.min_weight) bad = "minimum weight disagrees with enumeration";
        else if (!rep.holds) bad = "d = " + std::to_string(brute) + " < " + std::to_string(rep.designed);
      }
      t.check(bad.empty(), [&] {
        return name + " l=" + std::to_string(ell) + " A=" + set_to_text(a) + " t=" + std::to_string(tt) + ": " + bad;
      });
    }
  r.notes.push_back("interval sets: " + std::to_string(sets.size()));
  r.notes.push_back("zero codes (vacuous): " + std::to_string(vacuous));
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"rsf", suite_rsf},
      {"dual", suite_dual},
      {"delsarte", suite_delsarte},
      {"closure", suite_closure},
      {"bounds", suite_bounds},
      {"factorization", suite_factorization},
      {"bijection", suite_bijection},
      {"defining-sets", suite_defining_sets},
      {"restricted", suite_restricted},
      {"bch", suite_bch},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : registry()) out.push_back(n);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, f] : registry()) {
    if (n != name) continue;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = f(opt);
    r.suite = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  fail(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace chainring
