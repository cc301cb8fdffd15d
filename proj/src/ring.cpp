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

#include "chainring/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "chainring/galois.hpp"
#include "chainring/poly.hpp"

namespace chainring {

struct Ring::Private {
  explicit Private() = default;
};

Ring::Ring(const Private&) {}

namespace {

std::atomic<int> g_guard_bits{24};

int64_t checked_pow(int64_t b, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (int64_t{1} << 62) / b) fail(ErrorKind::Unsupported, "characteristic exceeds 64 bits");
    r *= b;
  }
  return r;
}

int64_t mod_inverse(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, a1 = a;
  while (a1 != 0) {
    int64_t q = g / a1;
    std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
    std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
  }
  if (g != 1) fail(ErrorKind::NonUnit, "element is not invertible");
  x %= m;
  return x < 0 ? x + m : x;
}

}  // namespace

int guard_bits() { return g_guard_bits.load(std::memory_order_relaxed); }
void set_guard_bits(int bits) { g_guard_bits.store(bits, std::memory_order_relaxed); }

void require_within_guard(double log2_count, std::string_view what) {
  if (log2_count > guard_bits() + 1e-9) {
    std::ostringstream os;
    os << what << " needs 2^" << log2_count << " elements, guard is 2^" << guard_bits();
    fail(ErrorKind::SizeGuardExceeded, os.str());
  }
}

bool is_prime(int64_t v) {
  if (v < 2) return false;
  for (int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::string_view family_name(Family f) {
  return f == Family::unramified ? "unramified" : "equal-characteristic";
}

Family parse_family(std::string_view name) {
  if (name == "unramified" || name == "galois") return Family::unramified;
  if (name == "equal-characteristic" || name == "equal_characteristic" || name == "eqchar")
    return Family::equal_characteristic;
  fail(ErrorKind::ParseError, "unknown ring family '" + std::string(name) + "'");
}

// Degree

int Degree::value() const {
  if (!value_) fail(ErrorKind::Internal, "degree of zero has no integer value");
  return *value_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (a.is_neg_inf() || b.is_neg_inf())
    return b.is_neg_inf() <=> a.is_neg_inf();
  return *a.value_ <=> *b.value_;
}

// Element

const Ring& Element::ring() const {
  if (!ring_) fail(ErrorKind::Internal, "uninitialized element");
  return *ring_;
}

bool Element::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](int64_t v) { return v == 0; });
}

bool Element::is_one() const { return *this == ring().one(); }
bool Element::is_unit() const { return ring().valuation(*this) == 0; }
int Element::valuation() const { return ring().valuation(*this); }
Degree Element::degree() const { return ring().degree(*this); }
Element Element::inv() const { return ring().inv_unit(*this); }

Element Element::pow(uint64_t e) const {
  Element result = ring().one();
  Element b = *this;
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

Element& Element::operator+=(const Element& o) {
  if (ring_ != o.ring_) ring().check_same(o);
  ring_->add_raw(d_.data(), o.d_.data(), d_.data());
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (ring_ != o.ring_) ring().check_same(o);
  ring_->sub_raw(d_.data(), o.d_.data(), d_.data());
  return *this;
}

Element& Element::operator*=(const Element& o) {
  *this = *this * o;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  if (a.ring_ != b.ring_) a.ring().check_same(b);
  Element r(a.ring_, Digits(a.d_.size(), 0));
  a.ring_->mul_raw(a.d_.data(), b.d_.data(), r.d_.data());
  return r;
}

Element operator-(const Element& a) {
  Element r(a.ring_, Digits(a.d_.size(), 0));
  a.ring().sub_raw(r.d_.data(), a.d_.data(), r.d_.data());
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (a.ring_ != b.ring_) {
    if (!a.ring_ || !b.ring_) return false;
    if (!a.ring_->same_as(*b.ring_)) return false;
  }
  return a.d_ == b.d_;
}

// Ring construction

RingPtr Ring::make(Family family, int64_t p, int n, int s,
                   std::optional<std::vector<int64_t>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || s < 1) fail(ErrorKind::DegreeMismatch, "n and s must be at least 1");

  auto make_prime = [&](int ss) {
    auto r = std::make_shared<Ring>(Private{});
    r->family_ = family;
    r->p_ = p;
    r->s_ = ss;
    r->ps_ = checked_pow(p, ss);
    r->q_ = static_cast<uint64_t>(p);
    if (family == Family::unramified) {
      r->prime_digits_ = 1;
      r->radix_ = r->ps_;
    } else {
      r->prime_digits_ = static_cast<size_t>(ss);
      r->radix_ = p;
    }
    r->digits_ = r->prime_digits_;
    r->prime_modulus_ = {0, 1};
    return r;
  };

  auto prime = make_prime(s);
  if (s > 1) prime->residue_ = make_prime(1);
  const int64_t coeff_mod = family == Family::unramified ? prime->ps_ : p;

  std::vector<int64_t> given;
  if (modulus) {
    if (static_cast<int>(modulus->size()) != n + 1)
      fail(ErrorKind::DegreeMismatch, "modulus must have degree n");
    for (int64_t c : *modulus) given.push_back(((c % coeff_mod) + coeff_mod) % coeff_mod);
    if (given.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
  }

  if (n == 1) {
    if (modulus) prime->prime_modulus_ = given;
    return prime;
  }

  std::vector<Element> h;
  if (modulus) {
    for (int64_t c : given) h.push_back(prime->from_int(c));
  } else {
    Poly hbar = poly::smallest_irreducible(prime->residue_field(), n);
    if (family == Family::unramified) {
      h = hensel_lift(prime, hbar);
    } else {
      for (const auto& c : hbar) h.push_back(prime->lift({c}));
    }
  }
  auto ext = extension(prime, h);
  auto* mut = const_cast<Ring*>(ext.get());
  mut->prime_modulus_.clear();
  for (const auto& c : h) mut->prime_modulus_.push_back(c.digits()[0]);
  return ext;
}

RingPtr Ring::extension(const RingPtr& base, const std::vector<Element>& modulus) {
  const int d = static_cast<int>(modulus.size()) - 1;
  if (d < 1) fail(ErrorKind::DegreeMismatch, "extension modulus must have degree at least 1");
  for (const auto& c : modulus) base->check_same(c);
  if (!modulus.back().is_one()) fail(ErrorKind::DegreeMismatch, "extension modulus must be monic");

  Poly hbar;
  for (const auto& c : modulus) hbar.push_back(base->residue_project(c).value);
  if (!poly::is_irreducible(hbar))
    fail(ErrorKind::ReducibleModulus, "residue image of the modulus is reducible");

  auto r = std::make_shared<Ring>(Private{});
  r->family_ = base->family_;
  r->p_ = base->p_;
  r->s_ = base->s_;
  r->n_total_ = base->n_total_ * d;
  r->level_ = base->level_ + 1;
  r->deg_ = d;
  r->base_ = base;
  r->modulus_ = modulus;
  for (int j = 0; j < d; ++j)
    for (int64_t v : modulus[j].digits()) r->modulus_flat_.push_back(v);
  r->digits_ = base->digits_ * d;
  r->prime_digits_ = base->prime_digits_;
  r->radix_ = base->radix_;
  r->ps_ = base->ps_;
  uint64_t q = 1;
  for (int i = 0; i < d; ++i) {
    if (q > (uint64_t{1} << 62) / base->q_) fail(ErrorKind::Unsupported, "residue field too large");
    q *= base->q_;
  }
  r->q_ = q;
  if (base->s_ > 1) r->residue_ = extension(base->residue_field_ptr(), hbar);
  return r;
}

RingPtr Ring::residue_field_ptr() const {
  return residue_ ? residue_ : shared_from_this();
}

double Ring::log2_size() const {
  return static_cast<double>(digits_) * std::log2(static_cast<double>(radix_));
}

uint64_t Ring::size() const {
  require_within_guard(log2_size(), name());
  uint64_t r = 1;
  for (size_t i = 0; i < digits_; ++i) r *= static_cast<uint64_t>(radix_);
  return r;
}

uint64_t Ring::unit_count() const {
  uint64_t r = q_ - 1;
  for (int i = 1; i < s_; ++i) r *= q_;
  return r;
}

std::string Ring::name() const {
  std::ostringstream os;
  const uint64_t q = q_;
  if (family_ == Family::unramified) {
    if (s_ == 1)
      os << "F" << q;
    else if (n_total_ == 1)
      os << "Z" << ps_;
    else
      os << "GR(" << ps_ << "," << n_total_ << ")";
  } else {
    os << "F" << q;
    if (s_ > 1) os << "[u]/(u^" << s_ << ")";
  }
  return os.str();
}

// Element constructors

Element Ring::zero() const { return Element(this, Digits(digits_, 0)); }
Element Ring::one() const { return from_int(1); }

Element Ring::from_int(int64_t v) const {
  Digits d(digits_, 0);
  if (family_ == Family::unramified) {
    d[0] = ((v % ps_) + ps_) % ps_;
  } else {
    d[0] = ((v % p_) + p_) % p_;
  }
  return Element(this, std::move(d));
}

Element Ring::from_digits(std::span<const int64_t> digits) const {
  if (digits.size() != digits_) fail(ErrorKind::DegreeMismatch, "wrong number of coefficients");
  Digits d(digits_, 0);
  for (size_t i = 0; i < digits_; ++i) d[i] = ((digits[i] % radix_) + radix_) % radix_;
  return Element(this, std::move(d));
}

Element Ring::from_index(uint64_t index) const {
  Digits d(digits_, 0);
  for (size_t i = 0; i < digits_; ++i) {
    d[i] = static_cast<int64_t>(index % static_cast<uint64_t>(radix_));
    index /= static_cast<uint64_t>(radix_);
  }
  return Element(this, std::move(d));
}

uint64_t Ring::index_of(const Element& a) const {
  check_same(a);
  uint64_t idx = 0;
  for (size_t i = digits_; i-- > 0;) idx = idx * static_cast<uint64_t>(radix_) + a.d_[i];
  return idx;
}

Element Ring::theta() const { return theta_pow(1); }

Element Ring::theta_pow(int t) const {
  if (t >= s_) return zero();
  if (t < 0) fail(ErrorKind::Internal, "negative power of theta");
  if (family_ == Family::unramified) return from_int(checked_pow(p_, t));
  Digits d(digits_, 0);
  d[t] = 1;
  return Element(this, std::move(d));
}

Element Ring::embed_base(const Element& b) const {
  if (!base_) fail(ErrorKind::NotInBase, "ring has no base");
  base_->check_same(b);
  Digits d(digits_, 0);
  std::copy(b.d_.begin(), b.d_.end(), d.begin());
  return Element(this, std::move(d));
}

bool Ring::in_base(const Element& a) const {
  check_same(a);
  if (!base_) return true;
  for (size_t i = base_->digits_; i < digits_; ++i)
    if (a.d_[i] != 0) return false;
  return true;
}

Element Ring::to_base(const Element& a) const {
  if (!base_) fail(ErrorKind::NotInBase, "ring has no base");
  if (!in_base(a)) fail(ErrorKind::NotInBase, "element does not lie in the base ring");
  Digits d(a.d_.begin(), a.d_.begin() + base_->digits_);
  return Element(base_.get(), std::move(d));
}

// Chain ring structure

int Ring::prime_valuation(const int64_t* pd) const {
  if (family_ == Family::unramified) {
    int64_t v = pd[0];
    if (v == 0) return s_;
    int k = 0;
    while (v % p_ == 0) {
      v /= p_;
      ++k;
    }
    return k;
  }
  for (int j = 0; j < s_; ++j)
    if (pd[j] != 0) return j;
  return s_;
}

int Ring::valuation(const Element& a) const {
  check_same(a);
  int v = s_;
  for (size_t i = 0; i < digits_; i += prime_digits_) v = std::min(v, prime_valuation(&a.d_[i]));
  return v;
}

Element Ring::div_theta_pow(const Element& a, int t) const {
  check_same(a);
  if (t == 0) return a;
  Digits d(digits_, 0);
  if (family_ == Family::unramified) {
    const int64_t pt = checked_pow(p_, t);
    for (size_t i = 0; i < digits_; ++i) {
      if (a.d_[i] % pt != 0) fail(ErrorKind::Internal, "division by theta^t is not exact");
      d[i] = a.d_[i] / pt;
    }
  } else {
    for (size_t b = 0; b < digits_; b += prime_digits_) {
      for (int j = 0; j < t; ++j)
        if (a.d_[b + j] != 0) fail(ErrorKind::Internal, "division by theta^t is not exact");
      for (int j = 0; j + t < s_; ++j) d[b + j] = a.d_[b + j + t];
    }
  }
  return Element(this, std::move(d));
}

Element Ring::unit_part(const Element& a) const {
  int v = valuation(a);
  if (v >= s_) fail(ErrorKind::NonUnit, "zero has no unit part");
  return div_theta_pow(a, v);
}

ResidueElement Ring::residue_project(const Element& a) const {
  check_same(a);
  const Ring& f = residue_field();
  if (&f == this) return {a};
  Digits d(f.digits_, 0);
  for (size_t b = 0, k = 0; b < digits_; b += prime_digits_, ++k)
    d[k] = family_ == Family::unramified ? a.d_[b] % p_ : a.d_[b];
  return {Element(&f, std::move(d))};
}

Element Ring::lift(const ResidueElement& r) const {
  const Ring& f = residue_field();
  f.check_same(r.value);
  if (&f == this) return r.value;
  Digits d(digits_, 0);
  for (size_t b = 0, k = 0; b < digits_; b += prime_digits_, ++k) d[b] = r.value.d_[k];
  return Element(this, std::move(d));
}

Element Ring::teichmuller_lift(const ResidueElement& r) const {
  Element x = lift(r);
  for (int i = 0; i <= s_ + 1; ++i) {
    Element y = x.pow(q_);
    if (y == x) return x;
    x = std::move(y);
  }
  fail(ErrorKind::Internal, "Teichmuller iteration did not converge");
}

const std::vector<Element>& Ring::teichmuller_set() const {
  std::call_once(teich_once_, [this] {
    require_within_guard(std::log2(static_cast<double>(q_)), "Teichmuller set");
    const Ring& f = residue_field();
    teich_.reserve(q_);
    for (uint64_t i = 0; i < q_; ++i) teich_.push_back(teichmuller_lift({f.from_index(i)}));
  });
  return teich_;
}

bool Ring::is_teichmuller(const Element& a) const { return a.pow(q_) == a; }

std::vector<Element> Ring::theta_adic(const Element& a) const {
  check_same(a);
  const auto& teich = teichmuller_set();
  const Ring& f = residue_field();
  std::vector<Element> out;
  out.reserve(s_);
  Element rest = a;
  for (int t = 0; t < s_; ++t) {
    const Element& g = teich[f.index_of(residue_project(rest).value)];
    out.push_back(g);
    rest -= g;
    if (t + 1 < s_) rest = div_theta_pow(rest, 1);
  }
  return out;
}

Element Ring::from_theta_adic(std::span<const Element> coords) const {
  if (static_cast<int>(coords.size()) != s_)
    fail(ErrorKind::DegreeMismatch, "expected s theta-adic coordinates");
  Element r = zero();
  for (int t = 0; t < s_; ++t) {
    check_same(coords[t]);
    if (!is_teichmuller(coords[t]))
      fail(ErrorKind::NotTeichmuller, "coordinate is not in the Teichmuller set");
    r += coords[t] * theta_pow(t);
  }
  return r;
}

Degree Ring::degree(const Element& a) const {
  auto c = theta_adic(a);
  for (int t = s_ - 1; t >= 0; --t)
    if (!c[t].is_zero()) return Degree(t);
  return Degree::neg_inf();
}

Element Ring::reduce_mod_theta_pow(const Element& a, int t) const {
  check_same(a);
  if (t <= 0) return zero();
  if (t >= s_) return a;
  const auto& teich = teichmuller_set();
  const Ring& f = residue_field();
  Element r = zero();
  Element rest = a;
  for (int i = 0; i < t; ++i) {
    const Element& g = teich[f.index_of(residue_project(rest).value)];
    r += g * theta_pow(i);
    rest -= g;
    rest = div_theta_pow(rest, 1);
  }
  return r;
}

bool Ring::same_as(const Ring& other) const {
  if (this == &other) return true;
  if (family_ != other.family_ || p_ != other.p_ || s_ != other.s_ || level_ != other.level_ ||
      deg_ != other.deg_ || modulus_flat_ != other.modulus_flat_)
    return false;
  if (!base_) return true;
  return base_->same_as(*other.base_);
}

void Ring::check_same(const Element& a) const {
  if (a.ring_ == this) return;
  if (!a.ring_ || !same_as(*a.ring_))
    fail(ErrorKind::RingMismatch, "element belongs to a different ring");
}

Element Ring::inv_unit(const Element& a) const {
  check_same(a);
  if (valuation(a) != 0) fail(ErrorKind::NonUnit, "element is not a unit");
  if (level_ == 0 && family_ == Family::unramified) {
    Digits d(1, mod_inverse(a.d_[0], ps_));
    return Element(this, std::move(d));
  }
  const Ring& f = residue_field();
  Element r = residue_project(a).value;
  Element rinv = q_ == 2 ? f.one() : (f.level_ == 0 ? Element(&f, Digits(1, mod_inverse(r.d_[0], p_)))
                                                     : r.pow(q_ - 2));
  Element b = lift({rinv});
  const Element two = from_int(2);
  for (int i = 0; i <= s_ + 1; ++i) {
    Element ab = a * b;
    if (ab.is_one()) return b;
    b = b * (two - ab);
  }
  fail(ErrorKind::Internal, "inverse iteration did not converge");
}

// Raw arithmetic

void Ring::add_raw(const int64_t* a, const int64_t* b, int64_t* out) const {
  for (size_t i = 0; i < digits_; ++i) {
    int64_t v = a[i] + b[i];
    out[i] = v >= radix_ ? v - radix_ : v;
  }
}

void Ring::sub_raw(const int64_t* a, const int64_t* b, int64_t* out) const {
  for (size_t i = 0; i < digits_; ++i) {
    int64_t v = a[i] - b[i];
    out[i] = v < 0 ? v + radix_ : v;
  }
}

void Ring::mul_raw(const int64_t* a, const int64_t* b, int64_t* out) const {
  if (level_ == 0) {
    if (family_ == Family::unramified) {
      out[0] = static_cast<int64_t>((static_cast<__int128>(a[0]) * b[0]) % ps_);
      return;
    }
    int64_t acc[64] = {};
    int64_t tmp[64];
    const int s = s_;
    if (s > 64) fail(ErrorKind::Unsupported, "nilpotency index too large");
    for (int i = 0; i < s; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j < s; ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p_;
    }
    for (int i = 0; i < s; ++i) tmp[i] = acc[i];
    for (int i = 0; i < s; ++i) out[i] = tmp[i];
    return;
  }
  // Schoolbook product over the base followed by reduction by the monic modulus.
  const Ring& B = *base_;
  const size_t bd = B.digits_;
  const int d = deg_;
  boost::container::small_vector<int64_t, 64> prod((2 * d - 1) * bd, 0);
  boost::container::small_vector<int64_t, 16> t(bd, 0);
  for (int i = 0; i < d; ++i) {
    const int64_t* ai = a + i * bd;
    bool zero = std::all_of(ai, ai + bd, [](int64_t v) { return v == 0; });
    if (zero) continue;
    for (int j = 0; j < d; ++j) {
      B.mul_raw(ai, b + j * bd, t.data());
      int64_t* dst = prod.data() + (i + j) * bd;
      B.add_raw(dst, t.data(), dst);
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    const int64_t* c = prod.data() + k * bd;
    bool zero = std::all_of(c, c + bd, [](int64_t v) { return v == 0; });
    if (zero) continue;
    boost::container::small_vector<int64_t, 16> ck(c, c + bd);
    for (int j = 0; j < d; ++j) {
      B.mul_raw(ck.data(), modulus_flat_.data() + j * bd, t.data());
      int64_t* dst = prod.data() + (k - d + j) * bd;
      B.sub_raw(dst, t.data(), dst);
    }
  }
  std::copy(prod.begin(), prod.begin() + d * bd, out);
}

}  // namespace chainring
