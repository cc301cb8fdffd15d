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

// Exact arithmetic in finite chain rings.
//
// Two families are supported:
//   - unramified Galois rings GR(p^s, n) = Z_{p^s}[x]/(f), theta = p;
//   - equal-characteristic rings F_{p^n}[u]/(u^s), theta = u.
//
// A ring is a tower of monic quotients over a "prime" chain ring P, which
// is Z_{p^s} or F_p[u]/(u^s). Elements store their coefficients over P in a
// flat digit array: one digit in [0, p^s) per P-coefficient for the
// unramified family, s digits in [0, p) (the u-expansion) per P-coefficient
// for the equal-characteristic family.
//
// Rings are immutable and shared through RingPtr. Elements keep a raw
// pointer to their ring; the ring must outlive every element built from it.

#ifndef CHAINRING_RING_HPP
#define CHAINRING_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "chainring/error.hpp"

namespace chainring {

enum class Family { unramified, equal_characteristic };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

class Ring;
class Element;
using RingPtr = std::shared_ptr<const Ring>;
using Digits = boost::container::small_vector<int64_t, 8>;

/// Degree of an element in its theta-adic expansion. deg(0) is the
/// sentinel minus infinity; it compares below every integer degree and
/// supports no arithmetic.
class Degree {
 public:
  static Degree neg_inf() { return Degree(); }
  explicit Degree(int value) : value_(value) {}

  bool is_neg_inf() const { return !value_.has_value(); }
  int value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);
  friend bool operator<(const Degree& a, int b) { return a.is_neg_inf() || *a.value_ < b; }

 private:
  Degree() = default;
  std::optional<int> value_;
};

class Element {
 public:
  Element() = default;
  Element(const Ring* ring, Digits digits) : ring_(ring), d_(std::move(digits)) {}

  const Ring& ring() const;
  const Ring* ring_ptr() const { return ring_; }
  std::span<const int64_t> digits() const { return {d_.data(), d_.size()}; }
  bool valid() const { return ring_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  int valuation() const;
  Degree degree() const;
  Element inv() const;
  Element pow(uint64_t e) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

  friend bool operator==(const Element& a, const Element& b);
  /// Total order on digits, used for deterministic containers only.
  friend bool operator<(const Element& a, const Element& b) { return a.d_ < b.d_; }

 private:
  friend class Ring;
  const Ring* ring_ = nullptr;
  Digits d_;
};

/// Image of an element in the residue field R / theta R. The value lives
/// in the residue ring (same tower shape, nilpotency index 1).
struct ResidueElement {
  Element value;
  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
};

/// Upper bound, in bits, on ring and code sizes for enumeration-based
/// operations. Defaults to 24.
int guard_bits();
void set_guard_bits(int bits);
/// Throws SizeGuardExceeded when 2^log2_count exceeds the guard.
void require_within_guard(double log2_count, std::string_view what);

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  struct Private;
  Ring(const Private&);

  /// Builds a chain ring of the given family. Without a modulus the
  /// lexicographically smallest irreducible of degree n over F_p is used,
  /// Hensel lifted for the unramified family.
  static RingPtr make(Family family, int64_t p, int n, int s,
                      std::optional<std::vector<int64_t>> modulus = std::nullopt);

  /// base[y]/(modulus) for a monic modulus whose residue image is
  /// irreducible. Coefficients are elements of base, constant term first.
  static RingPtr extension(const RingPtr& base, const std::vector<Element>& modulus);

  Family family() const { return family_; }
  int64_t p() const { return p_; }
  int s() const { return s_; }
  int residue_degree() const { return n_total_; }
  uint64_t residue_size() const { return q_; }
  int level() const { return level_; }
  const Ring* base() const { return base_.get(); }
  const RingPtr& base_ptr() const { return base_; }
  int degree_over_base() const { return deg_; }
  const std::vector<Element>& modulus() const { return modulus_; }
  /// Integer modulus as given to make() (level 0 and 1 rings only).
  const std::vector<int64_t>& prime_modulus() const { return prime_modulus_; }

  size_t num_digits() const { return digits_; }
  int64_t radix() const { return radix_; }
  double log2_size() const;
  /// |R| = q^s; throws SizeGuardExceeded above the enumeration guard.
  uint64_t size() const;
  uint64_t unit_count() const;
  std::string name() const;

  Element zero() const;
  Element one() const;
  Element from_int(int64_t v) const;
  Element from_digits(std::span<const int64_t> digits) const;
  Element from_index(uint64_t index) const;
  uint64_t index_of(const Element& a) const;
  Element theta() const;
  Element theta_pow(int t) const;

  /// Constant embedding of a base-ring element.
  Element embed_base(const Element& b) const;
  bool in_base(const Element& a) const;
  Element to_base(const Element& a) const;

  int valuation(const Element& a) const;
  Degree degree(const Element& a) const;
  std::vector<Element> theta_adic(const Element& a) const;
  Element from_theta_adic(std::span<const Element> coords) const;
  /// Gamma(R) ordered by the canonical index of the residue element.
  const std::vector<Element>& teichmuller_set() const;
  bool is_teichmuller(const Element& a) const;
  Element teichmuller_lift(const ResidueElement& r) const;
  ResidueElement residue_project(const Element& a) const;
  /// Coefficientwise lift of a residue element (not Teichmuller in general).
  Element lift(const ResidueElement& r) const;
  const Ring& residue_field() const { return residue_ ? *residue_ : *this; }
  RingPtr residue_field_ptr() const;

  /// Some w with theta^t * w = a; requires valuation(a) >= t.
  Element div_theta_pow(const Element& a, int t) const;
  /// The representative of a modulo theta^t with degree < t.
  Element reduce_mod_theta_pow(const Element& a, int t) const;
  /// The unit u with a = theta^{valuation(a)} * u; requires a != 0.
  Element unit_part(const Element& a) const;

  /// Structural equality (same family, p, s and moduli).
  bool same_as(const Ring& other) const;
  void check_same(const Element& a) const;

  // raw digit arithmetic on arrays of num_digits()
  void add_raw(const int64_t* a, const int64_t* b, int64_t* out) const;
  void sub_raw(const int64_t* a, const int64_t* b, int64_t* out) const;
  void mul_raw(const int64_t* a, const int64_t* b, int64_t* out) const;

 private:
  int prime_valuation(const int64_t* pd) const;
  Element inv_unit(const Element& a) const;
  friend class Element;

  Family family_{};
  int64_t p_ = 0;
  int s_ = 0;
  int n_total_ = 1;
  int level_ = 0;
  int deg_ = 1;
  RingPtr base_;
  RingPtr residue_;
  std::vector<Element> modulus_;
  std::vector<int64_t> modulus_flat_;  // non-leading coefficients, base digits each
  std::vector<int64_t> prime_modulus_;
  size_t digits_ = 1;
  size_t prime_digits_ = 1;  // digits per P-coefficient
  int64_t radix_ = 2;
  int64_t ps_ = 2;  // p^s
  uint64_t q_ = 2;

  mutable std::once_flag teich_once_;
  mutable std::vector<Element> teich_;
};

bool is_prime(int64_t v);

}  // namespace chainring

#endif  // CHAINRING_RING_HPP
