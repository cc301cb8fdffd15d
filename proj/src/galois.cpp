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

#include "chainring/galois.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chainring {

struct Tower::Private {
  explicit Private() = default;
};

Tower::Tower(const Private&) {}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Element generator_of(const Ring& top) {
  if (top.degree_over_base() < 1 || !top.base()) return top.one();
  Digits d(top.num_digits(), 0);
  d[top.base()->num_digits()] = 1;
  return top.from_digits({d.data(), d.size()});
}

}  // namespace

Poly hensel_lift(const RingPtr& base, const Poly& hbar) {
  const int d = poly::degree(hbar);
  if (d < 1) fail(ErrorKind::DegreeMismatch, "cannot lift a constant polynomial");
  Poly h0;
  for (const auto& c : hbar) h0.push_back(base->lift({c}));
  if (base->s() == 1) return h0;
  RingPtr tmp = Ring::extension(base, h0);
  Element y = d == 1 ? tmp->embed_base(-h0[0]) : generator_of(*tmp);
  Element omega = tmp->teichmuller_lift(tmp->residue_project(y));
  const uint64_t Q = base->residue_size();
  Poly H = poly::constant(tmp->one());
  Element root = omega;
  for (int i = 0; i < d; ++i) {
    H = poly::mul(H, poly::x_minus(root));
    root = root.pow(Q);
  }
  return poly::to_base(*tmp, H);
}

Subgroup make_subgroup(int m, int d) {
  if (m < 1 || d < 1 || m % d != 0)
    fail(ErrorKind::InvalidSubgroup, std::to_string(d) + " does not divide " + std::to_string(m));
  return {m, d};
}

TowerPtr Tower::extend(const RingPtr& base, int m) {
  if (m < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
  RingPtr top = base;
  if (m > 1) {
    require_within_guard(base->log2_size() * m, "extension ring");
    Poly hbar = poly::smallest_irreducible(base->residue_field(), m);
    top = Ring::extension(base, hensel_lift(base, hbar));
  }
  auto t = std::make_shared<Tower>(Private{});
  t->base_ = base;
  t->top_ = top;
  t->m_ = m;
  t->init();
  if (m > 1) t->base_tower_ = extend(base, 1);
  return t;
}

TowerPtr Tower::over(const RingPtr& top) {
  if (!top->base_ptr() || top->degree_over_base() == 1) return extend(top, 1);
  auto t = std::make_shared<Tower>(Private{});
  t->base_ = top->base_ptr();
  t->top_ = top;
  t->m_ = top->degree_over_base();
  t->init();
  t->base_tower_ = extend(t->base_, 1);
  return t;
}

TowerPtr Tower::base_tower() const {
  return m_ == 1 ? shared_from_this() : base_tower_;
}

void Tower::init() {
  const Element y = m_ > 1 ? generator_of(*top_) : top_->one();
  Element yj = top_->one();
  for (int j = 0; j < m_; ++j) {
    basis_.push_back(yj);
    yj *= y;
  }
  sigma_.resize(m_);
  Element sy = y;
  for (int k = 0; k < m_; ++k) {
    Element p = top_->one();
    for (int j = 0; j < m_; ++j) {
      sigma_[k].push_back(p);
      p *= sy;
    }
    sy = frobenius_definitional(sy);
  }
  Mat inv;
  try {
    inv = mat_inverse(gram_matrix());
  } catch (const Error&) {
    fail(ErrorKind::Internal, "SingularGram: trace form is degenerate");
  }
  for (int i = 0; i < m_; ++i) {
    Element a = top_->zero();
    for (int j = 0; j < m_; ++j) a += embed(inv.at(i, j)) * basis_[j];
    dual_.push_back(a);
  }
}

Element Tower::embed(const Element& r) const {
  if (m_ == 1) {
    top_->check_same(r);
    return r;
  }
  return top_->embed_base(r);
}

bool Tower::in_base(const Element& a) const { return m_ == 1 ? true : top_->in_base(a); }

Element Tower::to_base(const Element& a) const {
  if (m_ == 1) {
    top_->check_same(a);
    return a;
  }
  return top_->to_base(a);
}

std::vector<Element> Tower::coordinates(const Element& a) const {
  top_->check_same(a);
  if (m_ == 1) return {a};
  const size_t bd = base_->num_digits();
  auto d = a.digits();
  std::vector<Element> out;
  for (int j = 0; j < m_; ++j) out.push_back(base_->from_digits(d.subspan(j * bd, bd)));
  return out;
}

Element Tower::from_coordinates(const std::vector<Element>& c) const {
  if (static_cast<int>(c.size()) != m_) fail(ErrorKind::DegreeMismatch, "expected m coordinates");
  if (m_ == 1) return embed(c[0]);
  Digits d;
  for (const auto& x : c) {
    base_->check_same(x);
    for (int64_t v : x.digits()) d.push_back(v);
  }
  return top_->from_digits({d.data(), d.size()});
}

Element Tower::frobenius(const Element& a, int k) const {
  top_->check_same(a);
  k %= m_;
  if (k < 0) k += m_;
  if (k == 0) return a;
  auto c = coordinates(a);
  Element r = top_->zero();
  for (int j = 0; j < m_; ++j) {
    if (c[j].is_zero()) continue;
    r += embed(c[j]) * sigma_[k][j];
  }
  return r;
}

Element Tower::frobenius_definitional(const Element& a) const {
  top_->check_same(a);
  const uint64_t qq = q();
  auto g = top_->theta_adic(a);
  Element r = top_->zero();
  for (int t = 0; t < top_->s(); ++t) {
    if (g[t].is_zero()) continue;
    r += g[t].pow(qq) * top_->theta_pow(t);
  }
  return r;
}

Element Tower::trace(const Element& a) const {
  Element acc = a;
  for (int k = 1; k < m_; ++k) acc += frobenius(a, k);
  return to_base(acc);
}

Mat Tower::gram_matrix() const {
  Mat g(base_, m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) g.at(i, j) = trace(basis_[i] * basis_[j]);
  return g;
}

Element Tower::residue_generator() const {
  const Ring& f = top_->residue_field();
  const uint64_t Q = f.residue_size();
  if (Q == 2) return f.one();
  require_within_guard(std::log2(static_cast<double>(Q)), "residue field generator search");
  const auto factors = prime_factors(Q - 1);
  for (uint64_t idx = 1; idx < Q; ++idx) {
    Element g = f.from_index(idx);
    bool gen = !g.is_zero();
    for (uint64_t r : factors)
      if (gen && g.pow((Q - 1) / r).is_one()) gen = false;
    if (gen) return g;
  }
  fail(ErrorKind::Internal, "residue field has no generator");
}

Element Tower::primitive_root(int ell) const {
  if (ell < 1) fail(ErrorKind::OrderUnavailable, "length must be positive");
  const uint64_t Q = top_->residue_size();
  if (std::gcd(static_cast<uint64_t>(ell), q()) != 1)
    fail(ErrorKind::NotCoprime, "length is not coprime to q");
  if ((Q - 1) % static_cast<uint64_t>(ell) != 0)
    fail(ErrorKind::OrderUnavailable, "no element of order " + std::to_string(ell) + " in S");
  Element g = residue_generator();
  return top_->teichmuller_lift({g.pow((Q - 1) / static_cast<uint64_t>(ell))});
}

FixedSubring Tower::fixed_ring(const Subgroup& h) const {
  if (h.m != m_) fail(ErrorKind::InvalidSubgroup, "subgroup belongs to a different extension degree");
  make_subgroup(h.m, h.d);
  uint64_t qd = 1;
  for (int i = 0; i < h.d; ++i) qd *= q();
  std::vector<Element> gamma;
  for (const auto& g : top_->teichmuller_set())
    if (g.pow(qd) == g) gamma.push_back(g);
  const int s = top_->s();
  require_within_guard(s * std::log2(static_cast<double>(gamma.size())), "fixed subring");
  FixedSubring out{h, {}};
  std::vector<size_t> idx(s, 0);
  while (true) {
    Element e = top_->zero();
    for (int t = 0; t < s; ++t) e += gamma[idx[t]] * top_->theta_pow(t);
    out.elements.push_back(e);
    int t = 0;
    while (t < s && ++idx[t] == gamma.size()) idx[t++] = 0;
    if (t == s) break;
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const Element& a, const Element& b) {
    return top_->index_of(a) < top_->index_of(b);
  });
  return out;
}

Subgroup Tower::stabilizer(const FixedSubring& t) const {
  for (int d = 1; d <= m_; ++d) {
    if (m_ % d) continue;
    bool fixes = std::all_of(t.elements.begin(), t.elements.end(),
                             [&](const Element& e) { return frobenius(e, d) == e; });
    if (fixes) return {m_, d};
  }
  return {m_, m_};
}

}  // namespace chainring
