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

#include "chainring/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chainring {

struct CyclicContext::Private {
  explicit Private() = default;
};

CyclicContext::CyclicContext(const Private&) {}

namespace {

constexpr int kMinWeightBits = 22;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

int CosetTable::index_of_rep(int a) const {
  auto it = std::find(reps.begin(), reps.end(), a);
  if (it == reps.end())
    fail(ErrorKind::UnknownRepresentative, std::to_string(a) + " is not a coset representative");
  return static_cast<int>(it - reps.begin());
}

CosetTable cyclotomic_cosets(int ell, uint64_t q) {
  if (ell < 1) fail(ErrorKind::LengthMismatch, "length must be positive");
  if (std::gcd(static_cast<uint64_t>(ell), q) != 1)
    fail(ErrorKind::NotCoprime, "length " + std::to_string(ell) + " is not coprime to q");
  CosetTable t;
  t.ell = ell;
  t.q = q;
  t.coset_index.assign(ell, -1);
  for (int a = 0; a < ell; ++a) {
    if (t.coset_index[a] >= 0) continue;
    std::vector<int> orbit;
    uint64_t x = static_cast<uint64_t>(a);
    do {
      orbit.push_back(static_cast<int>(x));
      t.coset_index[x] = static_cast<int>(t.reps.size());
      x = mulmod(x, q, ell);
    } while (x != static_cast<uint64_t>(a));
    std::sort(orbit.begin(), orbit.end());
    t.reps.push_back(a);
    t.cosets.push_back(std::move(orbit));
  }
  return t;
}

int multiplicative_order(uint64_t q, int ell) {
  if (std::gcd(static_cast<uint64_t>(ell), q) != 1) fail(ErrorKind::NotCoprime, "q is not a unit mod l");
  if (ell == 1) return 1;
  uint64_t x = q % ell;
  int m = 1;
  while (x != 1) {
    x = mulmod(x, q, ell);
    ++m;
  }
  return m;
}

DefiningSet normalize_set(std::vector<int> a, int ell) {
  for (int x : a)
    if (x < 0 || x >= ell) fail(ErrorKind::Mismatch, "set element " + std::to_string(x) + " out of range");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

DefiningSet q_closure(const DefiningSet& a, const CosetTable& table) {
  std::set<int> out;
  for (int x : normalize_set(a, table.ell))
    for (int y : table.cosets[table.coset_index[x]]) out.insert(y);
  return {out.begin(), out.end()};
}

DefiningSet opposite(const DefiningSet& a, int ell) {
  std::vector<int> out;
  for (int x : a) out.push_back((ell - x) % ell);
  return normalize_set(out, ell);
}

DefiningSet complement(const DefiningSet& a, int ell) {
  DefiningSet n = normalize_set(a, ell);
  std::vector<int> out;
  for (int x = 0; x < ell; ++x)
    if (!std::binary_search(n.begin(), n.end(), x)) out.push_back(x);
  return out;
}

DefiningSet multiples(const DefiningSet& a, int u, int ell) {
  std::vector<int> out;
  for (int x : a) out.push_back(static_cast<int>(((static_cast<long>(u) * x) % ell + ell) % ell));
  return normalize_set(out, ell);
}

bool is_q_invariant(const DefiningSet& a, const CosetTable& table) {
  return normalize_set(a, table.ell) == q_closure(a, table);
}

std::optional<Interval> find_interval(const DefiningSet& a0, int ell) {
  DefiningSet a = normalize_set(a0, ell);
  const int v = static_cast<int>(a.size());
  if (v == 0) return std::nullopt;
  for (int w = 1; w < ell || (ell == 1 && w == 1); ++w) {
    if (std::gcd(w, ell) != 1) continue;
    for (int u = 0; u < ell; ++u) {
      std::vector<int> cand;
      for (int i = 0; i < v; ++i) cand.push_back(static_cast<int>((static_cast<long>(w) * (u + i)) % ell));
      std::sort(cand.begin(), cand.end());
      if (std::adjacent_find(cand.begin(), cand.end()) != cand.end()) continue;
      if (cand == a) return Interval{w, u, v};
    }
    if (ell == 1) break;
  }
  return std::nullopt;
}

Vec poly_to_vec(const Ring& ring, const Poly& f, int ell) {
  Vec v = zero_vec(ring, ell);
  for (size_t i = 0; i < f.size(); ++i) v[i % ell] += f[i];
  return v;
}

Code ideal_code(const TowerPtr& tower, const Poly& f, int ell) {
  const Ring& ring = tower->top();
  Vec base = poly_to_vec(ring, f, ell);
  std::vector<Vec> rows;
  for (int k = 0; k < ell; ++k) {
    Vec r = zero_vec(ring, ell);
    for (int j = 0; j < ell; ++j) r[(j + k) % ell] = base[j];
    rows.push_back(std::move(r));
  }
  return Code::from_generators(tower, ell, rows);
}

CyclicContextPtr CyclicContext::make(const RingPtr& base, int ell) {
  auto ctx = std::make_shared<CyclicContext>(Private{});
  const uint64_t q = base->residue_size();
  ctx->table_ = cyclotomic_cosets(ell, q);
  const int m = multiplicative_order(q, ell);
  ctx->tower_ = Tower::extend(base, m);
  const Tower& tw = *ctx->tower_;
  const Ring& S = tw.top();
  ctx->xi_ = tw.primitive_root(ell);

  for (const auto& coset : ctx->table_.cosets) {
    Poly f = poly::constant(S.one());
    for (int j : coset) f = poly::mul(f, poly::x_minus(ctx->xi_.pow(j)));
    Poly over_r;
    for (const auto& c : f) {
      if (!tw.in_base(c)) fail(ErrorKind::Internal, "coset product has coefficients outside R");
      over_r.push_back(tw.to_base(c));
    }
    ctx->factors_.push_back(std::move(over_r));
  }

  const Ring& R = *base;
  const Ring& F = R.residue_field();
  auto to_residue = [&](const Poly& f) {
    Poly out;
    for (const auto& c : f) out.push_back(R.residue_project(c).value);
    return poly::trim(out);
  };
  const Poly xl_res = poly::x_pow_minus_one(F, ell);
  for (const auto& fa : ctx->factors_) {
    Poly fr = to_residue(fa);
    Poly cof = poly::divmod(xl_res, fr).first;
    auto [g, u, v] = poly::ext_gcd(fr, cof);
    if (poly::degree(g) != 0) fail(ErrorKind::Internal, "factors are not coprime");
    Poly eps = poly::mod(poly::mul(v, cof), xl_res);
    Poly e;
    for (int i = 0; i < ell; ++i)
      e.push_back(i < static_cast<int>(eps.size()) ? R.lift({eps[i]}) : R.zero());
    const Element three = R.from_int(3), two = R.from_int(2);
    for (int it = 0;; ++it) {
      if (it > R.s() + 2) fail(ErrorKind::Internal, "idempotent lifting did not converge");
      Poly e2 = poly::cyclic_mul(e, e, ell);
      Poly e3 = poly::cyclic_mul(e2, e, ell);
      Poly next(ell, R.zero());
      for (int i = 0; i < ell; ++i) next[i] = three * e2[i] - two * e3[i];
      if (next == e) break;
      e = std::move(next);
    }
    ctx->idempotents_.push_back(std::move(e));
  }
  return ctx;
}

Code CyclicContext::minimal_code(int a) const {
  int i = table_.index_of_rep(a);
  return ideal_code(tower_->base_tower(), idempotents_[i], ell());
}

std::vector<Code> CyclicContext::subcode_chain(int a) const {
  Code c = minimal_code(a);
  const auto& tw = c.tower();
  std::vector<Code> out;
  for (int t = 0; t <= base().s(); ++t) {
    Element th = base().theta_pow(t);
    out.push_back(Code::from_matrix(tw, c.rsf().map(tw->top_ptr(), [&](const Element& e) { return e * th; })));
  }
  return out;
}

Code CyclicContext::code_from_multiindex(const MultiIndex& t) const {
  if (t.size() != table_.reps.size()) fail(ErrorKind::Mismatch, "multi-index has the wrong number of entries");
  const int s = base().s();
  const auto& tw = tower_->base_tower();
  Mat gens(tw->top_ptr(), 0, ell());
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] > s) fail(ErrorKind::Mismatch, "multi-index entry out of range");
    if (t[i] == s) continue;
    Code c = minimal_code(table_.reps[i]);
    Element th = base().theta_pow(t[i]);
    for (int r = 0; r < c.rank(); ++r) gens.append_row(scale(c.rsf().row(r), th));
  }
  return Code::from_matrix(tw, gens);
}

std::vector<MultiIndex> CyclicContext::all_multiindices() const {
  const int s = base().s();
  const size_t n = table_.reps.size();
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  while (true) {
    out.push_back(cur);
    size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] <= s) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

Mat CyclicContext::eval_matrix(const DefiningSet& a0, int t) const {
  DefiningSet a = normalize_set(a0, ell());
  const Ring& S = tower_->top();
  if (t < 0 || t > S.s()) fail(ErrorKind::Mismatch, "t out of range");
  const Element th = S.theta_pow(t);
  Mat m(tower_->top_ptr(), 0, ell());
  for (int x : a) {
    Vec r;
    const Element step = xi_.pow(x);
    Element p = th;
    for (int j = 0; j < ell(); ++j) {
      r.push_back(p);
      p *= step;
    }
    m.append_row(r);
  }
  return m;
}

Code CyclicContext::eval_code(const DefiningSet& a, int t) const {
  return Code::from_matrix(tower_, eval_matrix(a, t));
}

Poly CyclicContext::generator_polynomial(const DefiningSet& a0) const {
  DefiningSet a = normalize_set(a0, ell());
  if (a.empty()) fail(ErrorKind::EmptyDefiningSet, "defining set is empty");
  const Ring& S = tower_->top();
  Poly g = poly::constant(S.one());
  for (int x : complement(a, ell())) g = poly::mul(g, poly::x_minus(xi_.pow((ell() - x) % ell())));
  return g;
}

InvarianceReport CyclicContext::invariance_and_closure(const DefiningSet& a, int t) const {
  InvarianceReport r;
  Code b = eval_code(a, t);
  r.galois_invariant = is_galois_invariant(b);
  r.q_invariant = is_q_invariant(a, table_);
  r.closure_matches = closure(b) == eval_code(q_closure(a, table_), t);
  return r;
}

RestrictedReport CyclicContext::restricted_code(const DefiningSet& a, int t) const {
  if (!is_q_invariant(a, table_)) fail(ErrorKind::NotQInvariant, "defining set is not q-invariant");
  const int s = base().s();
  if (t < 0 || t > s) fail(ErrorKind::Mismatch, "t out of range");
  Code f1 = dual(trace_code(eval_code(a, s - t)));
  Code f2 = restriction(dual(eval_code(a, t)));
  Code f3 = restriction(eval_code(opposite(complement(a, ell()), ell()), s - t));
  RestrictedReport r{f1, f2, f3, f1 == f2, f1 == f3, f2 == f3};
  return r;
}

Mat CyclicContext::restricted_generator(const MultiIndex& t) const {
  if (t.size() != table_.reps.size()) fail(ErrorKind::Mismatch, "multi-index has the wrong number of entries");
  const int s = base().s();
  Mat out(tower_->top_ptr(), 0, ell());
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] > s) fail(ErrorKind::Mismatch, "multi-index entry out of range");
    Mat w = eval_matrix(opposite(table_.cosets[i], ell()), s - t[i]);
    for (int r = 0; r < w.rows(); ++r) out.append_row(w.row(r));
  }
  return out;
}

Code CyclicContext::restricted_multiindex(const MultiIndex& t) const {
  return restriction(Code::from_matrix(tower_, restricted_generator(t)));
}

BchReport CyclicContext::bch_check(const DefiningSet& a, int t) const {
  auto iv = find_interval(a, ell());
  if (!iv) fail(ErrorKind::NotInterval, "defining set is not an interval");
  const int s = base().s();
  if (t < 0 || t > s) fail(ErrorKind::Mismatch, "t out of range");
  Code c = restriction(eval_code(opposite(complement(a, ell()), ell()), s - t));
  BchReport r{*iv, is_q_invariant(a, table_), c, std::nullopt, iv->v + 1, true};
  if (!c.is_zero()) {
    r.min_weight = min_weight(c);
    r.holds = *r.min_weight >= r.designed;
  }
  return r;
}

int min_weight(const Code& code) {
  if (code.is_zero()) fail(ErrorKind::ZeroCode, "the zero code has no minimum weight");
  require_within_guard(code.log2_cardinality(), "minimum weight");
  if (code.log2_cardinality() > kMinWeightBits + 1e-9)
    fail(ErrorKind::SizeGuardExceeded, "code too large for exact minimum weight");
  int best = code.length() + 1;
  code.for_each_codeword([&](const Vec& w) {
    int wt = 0;
    for (const auto& e : w) wt += !e.is_zero();
    if (wt > 0 && wt < best) best = wt;
  });
  return best;
}

bool is_cyclic(const Code& code) {
  const int l = code.length();
  for (int i = 0; i < code.rank(); ++i) {
    Vec r = code.rsf().row(i);
    Vec sh(r.size(), r[0]);
    for (int j = 0; j < l; ++j) sh[(j + 1) % l] = r[j];
    if (!code.contains(sh)) return false;
  }
  return true;
}

}  // namespace chainring
