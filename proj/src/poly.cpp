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

#include "chainring/poly.hpp"

#include <cmath>

namespace chainring::poly {

namespace {

const Ring* ring_of(const Poly& a, const Poly& b) {
  if (!a.empty()) return &a[0].ring();
  if (!b.empty()) return &b[0].ring();
  return nullptr;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_field(const Poly& f) {
  if (!f.empty() && f[0].ring().s() != 1)
    fail(ErrorKind::Internal, "operation requires coefficients in a field");
}

}  // namespace

Poly trim(Poly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (!f[i].is_zero()) return i;
  return -1;
}

bool is_monic(const Poly& f) {
  int d = degree(f);
  return d >= 0 && f[d].is_one();
}

Poly constant(const Element& c) { return trim(Poly{c}); }

Poly monomial(const Element& c, int deg) {
  Poly f(deg + 1, c.ring().zero());
  f[deg] = c;
  return trim(std::move(f));
}

Poly x_minus(const Element& root) { return Poly{-root, root.ring().one()}; }

Poly x_pow_minus_one(const Ring& ring, int ell) {
  Poly f(ell + 1, ring.zero());
  f[0] = ring.from_int(-1);
  f[ell] = ring.one();
  return trim(std::move(f));
}

Poly add(const Poly& a, const Poly& b) {
  const Ring* r = ring_of(a, b);
  if (!r) return {};
  Poly out(std::max(a.size(), b.size()), r->zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
  const Ring* r = ring_of(a, b);
  if (!r) return {};
  Poly out(std::max(a.size(), b.size()), r->zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, a[0].ring().zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(std::move(out));
}

Poly scale(const Poly& a, const Element& c) {
  Poly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  return trim(std::move(out));
}

Poly cyclic_reduce(const Poly& a, int ell) {
  if (a.empty()) return {};
  Poly out(ell, a[0].ring().zero());
  for (size_t i = 0; i < a.size(); ++i) out[i % ell] += a[i];
  return out;
}

Poly cyclic_mul(const Poly& a, const Poly& b, int ell) {
  const Ring* r = ring_of(a, b);
  if (!r) return {};
  Poly out(ell, r->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[(i + j) % ell] += a[i] * b[j];
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) fail(ErrorKind::Internal, "division by the zero polynomial");
  if (!b[db].is_unit()) fail(ErrorKind::NonUnit, "leading coefficient of divisor is not a unit");
  Poly r = trim(a);
  if (degree(r) < db) return {Poly{}, r};
  const Ring& ring = b[0].ring();
  const Element lc_inv = b[db].inv();
  Poly q(r.size() - db, ring.zero());
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k].is_zero()) continue;
    Element c = r[k] * lc_inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  return {trim(std::move(q)), trim(std::move(r))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return mod(mul(a, b), m); }

Poly pow_mod(const Poly& a, uint64_t e, const Poly& m) {
  Poly result = mod(constant(m[0].ring().one()), m);
  Poly base = mod(a, m);
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    e >>= 1;
    if (e) base = mul_mod(base, base, m);
  }
  return result;
}

Element eval(const Poly& f, const Element& x) {
  Element acc = x.ring().zero();
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

Poly embed(const Ring& top, const Poly& f) {
  Poly out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(top.embed_base(c));
  return out;
}

Poly to_base(const Ring& top, const Poly& f) {
  Poly out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(top.to_base(c));
  return out;
}

Poly make_monic(const Poly& f) {
  Poly g = trim(f);
  if (g.empty()) return g;
  return scale(g, g.back().inv());
}

Poly gcd(Poly a, Poly b) {
  require_field(a);
  require_field(b);
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  require_field(a);
  require_field(b);
  const Ring* ring = ring_of(a, b);
  if (!ring) return {Poly{}, Poly{}, Poly{}};
  Poly r0 = trim(a), r1 = trim(b);
  Poly s0 = constant(ring->one()), s1;
  Poly t0, t1 = constant(ring->one());
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  Element inv = r0.back().inv();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

bool is_irreducible(const Poly& f0) {
  require_field(f0);
  Poly f = make_monic(f0);
  const int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Ring& field = f[0].ring();
  const uint64_t Q = field.residue_size();
  const Poly x = monomial(field.one(), 1);
  // powers[k] = x^(Q^k) mod f
  std::vector<Poly> powers{mod(x, f)};
  for (int k = 1; k <= d; ++k) powers.push_back(pow_mod(powers.back(), Q, f));
  if (sub(powers[d], mod(x, f)).size() != 0) return false;
  for (int r : prime_factors(d)) {
    Poly g = gcd(f, sub(powers[d / r], x));
    if (degree(g) != 0) return false;
  }
  return true;
}

Poly smallest_irreducible(const Ring& field, int deg) {
  if (field.s() != 1) fail(ErrorKind::Internal, "smallest_irreducible needs a field");
  if (deg < 1) fail(ErrorKind::DegreeMismatch, "degree must be at least 1");
  const uint64_t Q = field.residue_size();
  require_within_guard(deg * std::log2(static_cast<double>(Q)), "irreducible search");
  uint64_t total = 1;
  for (int i = 0; i < deg; ++i) total *= Q;
  for (uint64_t n = 0; n < total; ++n) {
    Poly f(deg + 1, field.zero());
    uint64_t v = n;
    for (int j = 0; j < deg; ++j) {
      f[j] = field.from_index(v % Q);
      v /= Q;
    }
    f[deg] = field.one();
    if (is_irreducible(f)) return f;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

}  // namespace chainring::poly
