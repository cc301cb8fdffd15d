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

#include "chainring/code.hpp"

#include <cmath>
#include <set>

namespace chainring {

namespace {

void check_compatible(const Code& a, const Code& b) {
  if (!a.tower()->same_as(*b.tower()) || a.length() != b.length())
    fail(ErrorKind::Mismatch, "codes live over different rings or have different lengths");
}

}  // namespace

Code::Code(TowerPtr tower, Mat rsf) : tower_(std::move(tower)), rsf_(std::move(rsf)) {
  type_ = rsf_type(rsf_);
}

Code Code::from_matrix(TowerPtr tower, const Mat& generators) {
  if (!generators.ring().same_as(tower->top()))
    fail(ErrorKind::RingMismatch, "generator matrix is not over the top ring");
  if (generators.cols() < 1) fail(ErrorKind::LengthMismatch, "code length must be positive");
  return Code(tower, chainring::rsf(generators));
}

Code Code::from_generators(TowerPtr tower, int length, const std::vector<Vec>& rows) {
  if (length < 1) fail(ErrorKind::LengthMismatch, "code length must be positive");
  Mat m(tower->top_ptr(), 0, length);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != length) fail(ErrorKind::LengthMismatch, "generator has wrong length");
    m.append_row(r);
  }
  return Code(tower, chainring::rsf(m));
}

Code Code::zero(TowerPtr tower, int length) {
  Mat m(tower->top_ptr(), 0, length);
  return Code(tower, m);
}

Code Code::full(TowerPtr tower, int length) {
  Mat m = Mat::identity(tower->top_ptr(), length);
  return Code(tower, m);
}

double Code::log2_cardinality() const {
  const int s = ring().s();
  long e = 0;
  for (int t = 0; t < s; ++t) e += static_cast<long>(type_[t]) * (s - t);
  return static_cast<double>(e) * std::log2(static_cast<double>(ring().residue_size()));
}

bool Code::contains(const Vec& word) const { return in_row_span(rsf_, word); }

bool Code::contains(const Code& sub) const {
  check_compatible(*this, sub);
  for (int i = 0; i < sub.rsf_.rows(); ++i)
    if (!contains(sub.rsf_.row(i))) return false;
  return true;
}

void Code::for_each_codeword(const std::function<void(const Vec&)>& fn) const {
  require_within_guard(log2_cardinality(), "codeword enumeration");
  const Ring& S = ring();
  const int s = S.s();
  const auto& gamma = S.teichmuller_set();
  const auto pd = pivot_data(rsf_);
  // one level per (row, theta power) pair
  std::vector<std::vector<Vec>> levels;
  for (int i = 0; i < rsf_.rows(); ++i) {
    Vec r = rsf_.row(i);
    for (int t = 0; t < s - pd[i].valuation; ++t) {
      std::vector<Vec> opts;
      const Element th = S.theta_pow(t);
      for (const auto& g : gamma) opts.push_back(scale(r, g * th));
      levels.push_back(std::move(opts));
    }
  }
  std::function<void(size_t, const Vec&)> rec = [&](size_t depth, const Vec& acc) {
    if (depth == levels.size()) {
      fn(acc);
      return;
    }
    for (const auto& v : levels[depth]) rec(depth + 1, add(acc, v));
  };
  rec(0, zero_vec(S, length()));
}

bool operator==(const Code& a, const Code& b) {
  return a.length() == b.length() && a.tower_->same_as(*b.tower_) && a.rsf_ == b.rsf_;
}

Code sum(const Code& a, const Code& b) {
  check_compatible(a, b);
  Mat m(a.tower()->top_ptr(), 0, a.length());
  for (int i = 0; i < a.rank(); ++i) m.append_row(a.rsf().row(i));
  for (int i = 0; i < b.rank(); ++i) m.append_row(b.rsf().row(i));
  return Code::from_matrix(a.tower(), m);
}

Code intersect(const Code& a, const Code& b) {
  check_compatible(a, b);
  return dual(sum(dual(a), dual(b)));
}

Code dual(const Code& b, Form form) {
  if (form == Form::hermitian) {
    const int m = b.tower()->m();
    if (m % 2 != 0)
      fail(ErrorKind::HermitianRequiresEvenDegree, "Hermitian form needs an even extension degree");
    return dual(apply_automorphism(b, m / 2), Form::euclidean);
  }
  return Code::from_matrix(b.tower(), kernel_dual(b.rsf()));
}

Code dual_phi_prime(const Code& b) {
  return dual(b, b.tower()->m() % 2 == 0 ? Form::hermitian : Form::euclidean);
}

Code apply_automorphism(const Code& b, int j) {
  const auto& tw = *b.tower();
  Mat img = b.rsf().map(tw.top_ptr(), [&](const Element& e) { return tw.frobenius(e, j); });
  return Code::from_matrix(b.tower(), img);
}

Code restriction(const Code& b) {
  const auto& tw = *b.tower();
  Code in = interior(b);
  Mat over_r = in.rsf().map(tw.base_ptr(), [&](const Element& e) {
    if (!tw.in_base(e)) fail(ErrorKind::Internal, "interior is not defined over the base ring");
    return tw.to_base(e);
  });
  return Code::from_matrix(tw.base_tower(), over_r);
}

Code restriction_via_coordinates(const Code& b) {
  const auto& tw = *b.tower();
  const int m = tw.m(), l = b.length();
  if (m == 1) return Code::from_matrix(tw.base_tower(), b.rsf());
  // R-generators y^j * b_i written in R-coordinates; column j*l + c holds
  // the y^j coordinate of entry c.
  Mat low(tw.base_ptr(), 0, l), high(tw.base_ptr(), 0, (m - 1) * l);
  for (int i = 0; i < b.rank(); ++i) {
    for (int j = 0; j < m; ++j) {
      Vec lo, hi((m - 1) * l, tw.base().zero());
      for (int c = 0; c < l; ++c) {
        auto coords = tw.coordinates(b.rsf().at(i, c) * tw.basis()[j]);
        lo.push_back(coords[0]);
        for (int k = 1; k < m; ++k) hi[(k - 1) * l + c] = coords[k];
      }
      low.append_row(lo);
      high.append_row(hi);
    }
  }
  Mat x = left_kernel(high);
  return Code::from_matrix(tw.base_tower(), x * low);
}

Code trace_code(const Code& b) {
  const auto& tw = *b.tower();
  const int l = b.length();
  Mat m(tw.base_ptr(), 0, l);
  for (int i = 0; i < b.rank(); ++i)
    for (const auto& a : tw.dual_basis()) {
      Vec r;
      for (int c = 0; c < l; ++c) r.push_back(tw.trace(a * b.rsf().at(i, c)));
      m.append_row(r);
    }
  return Code::from_matrix(tw.base_tower(), m);
}

Code extension(const Code& c, const TowerPtr& tower) {
  if (c.tower()->m() != 1 || !c.ring().same_as(tower->base()))
    fail(ErrorKind::Mismatch, "code is not over the base ring of the tower");
  Mat img = c.rsf().map(tower->top_ptr(), [&](const Element& e) { return tower->embed(e); });
  return Code::from_matrix(tower, img);
}

Code interior(const Code& b) {
  Code acc = b;
  for (int j = 1; j < b.tower()->m(); ++j) acc = intersect(acc, apply_automorphism(b, j));
  return acc;
}

Code closure(const Code& b) {
  Code acc = b;
  for (int j = 1; j < b.tower()->m(); ++j) acc = sum(acc, apply_automorphism(b, j));
  return acc;
}

bool is_galois_invariant(const Code& b) {
  const auto& tw = *b.tower();
  for (int i = 0; i < b.rank(); ++i)
    for (int c = 0; c < b.length(); ++c)
      if (!tw.in_base(b.rsf().at(i, c))) return false;
  return true;
}

bool is_sigma_fixed(const Code& b) { return apply_automorphism(b, 1) == b; }

DelsarteReport delsarte_check(const Code& b) {
  Code lhs = trace_code(dual_phi_prime(b));
  Code rhs = dual(restriction(b));
  bool eq = lhs == rhs;
  return {std::move(lhs), std::move(rhs), eq};
}

Code subcode_correspondence(const Code& b, const Subgroup& h) {
  if (h.m != b.tower()->m()) fail(ErrorKind::InvalidSubgroup, "subgroup of a different group");
  make_subgroup(h.m, h.d);
  Code acc = b;
  for (int j = h.d; j < h.m; j += h.d) acc = intersect(acc, apply_automorphism(b, j));
  return acc;
}

Code fix_via_fixed_subring(const Code& b, const Subgroup& h) {
  const auto& tw = *b.tower();
  FixedSubring t = tw.fixed_ring(h);
  std::set<uint64_t> members;
  for (const auto& e : t.elements) members.insert(tw.top().index_of(e));
  Mat gens(tw.top_ptr(), 0, b.length());
  Mat span = gens;
  b.for_each_codeword([&](const Vec& w) {
    for (const auto& e : w)
      if (!members.count(tw.top().index_of(e))) return;
    if (in_row_span(span, w)) return;
    gens.append_row(w);
    span = rsf(gens);
  });
  return Code::from_matrix(b.tower(), span);
}

Subgroup code_stabilizer(const Code& b, const Code& t) {
  if (!b.contains(t)) fail(ErrorKind::NotSubcode, "code is not a subcode");
  const int m = b.tower()->m();
  for (int d = 1; d < m; ++d)
    if (m % d == 0 && apply_automorphism(t, d) == t) return {m, d};
  return {m, m};
}

std::vector<int> level_set(const Code& b) {
  const auto& tw = *b.tower();
  std::vector<int> out;
  for (int i = 0; i < b.rank(); ++i) {
    Vec r = b.rsf().row(i);
    int period = tw.m();
    for (int d = 1; d < tw.m(); ++d) {
      bool fixed = true;
      for (const auto& e : r)
        if (!(tw.frobenius(e, d) == e)) {
          fixed = false;
          break;
        }
      if (fixed) {
        period = d;
        break;
      }
    }
    out.push_back(period);
  }
  return out;
}

bool BoundsReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return levels_divide_m;
}

const Inequality* BoundsReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

BoundsReport bounds_report(const Code& b) {
  const auto& tw = *b.tower();
  const long m = tw.m();
  const long l = b.length();
  BoundsReport r;
  r.level_set = level_set(b);
  Code bd = dual(b);
  r.dual_level_set = level_set(bd);
  for (int mi : r.level_set) r.levels_divide_m = r.levels_divide_m && m % mi == 0;
  for (int mi : r.dual_level_set) r.levels_divide_m = r.levels_divide_m && m % mi == 0;

  Code res = restriction(b);
  Code tr = trace_code(b);
  Code in = interior(b);
  Code cl = closure(b);
  Code res_dual = restriction(bd);
  r.rank_code = b.rank();
  r.rank_restriction = res.rank();
  r.rank_trace = tr.rank();
  r.rank_interior = in.rank();
  r.rank_closure = cl.rank();
  r.free_rank = b.free_rank();
  r.trace_free_rank = tr.free_rank();
  r.restriction_free_rank = res.free_rank();

  long level_sum = 0, dual_level_sum = 0;
  for (int mi : r.level_set) level_sum += mi;
  for (int mi : r.dual_level_set) dual_level_sum += mi;
  long rows_over_r = 0;
  for (int i = 0; i < b.rank(); ++i) {
    bool over = true;
    for (int c = 0; c < b.length(); ++c) over = over && tw.in_base(b.rsf().at(i, c));
    rows_over_r += over;
  }
  const long k0 = r.free_rank, kt = r.trace_free_rank, kr = r.restriction_free_rank;

  auto le = [&](std::string name, long a, long c) { r.checks.push_back({std::move(name), a, "<=", c, a <= c}); };
  auto ge = [&](std::string name, long a, long c) { r.checks.push_back({std::move(name), a, ">=", c, a >= c}); };
  auto eq = [&](std::string name, long a, long c) { r.checks.push_back({std::move(name), a, "==", c, a == c}); };

  le("rank_res_le_rank_code", r.rank_restriction, r.rank_code);
  le("rank_code_le_rank_trace", r.rank_code, r.rank_trace);
  le("rank_trace_le_m_rank_code", r.rank_trace, m * r.rank_code);
  eq("rank_res_eq_rank_interior", r.rank_restriction, r.rank_interior);
  eq("rank_trace_eq_rank_closure", r.rank_trace, r.rank_closure);
  le("rank_closure_le_level_sum", r.rank_closure, level_sum);
  le("level_sum_le_interior_bound", level_sum, m * r.rank_code - (m - 1) * r.rank_interior);
  ge("rank_res_ge_rows_over_base", r.rank_restriction, rows_over_r);
  ge("rank_res_ge_dual_level_bound", r.rank_restriction, l - dual_level_sum);
  ge("dual_level_bound_ge_dual_res_bound", l - dual_level_sum,
     m * k0 - (m - 1) * (l - res_dual.rank()));
  ge("dual_level_bound_ge_trace_free_bound", l - dual_level_sum, m * k0 - (m - 1) * kt);
  le("res_free_bound_le_trace_free", m * k0 - (m - 1) * kr, l - kt);
  le("trace_free_le_res_free_bound", l - kt, m * (l - k0) - (m - 1) * (l - kr));
  return r;
}

}  // namespace chainring
