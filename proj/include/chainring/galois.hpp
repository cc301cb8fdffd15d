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

// Unramified Galois extensions S|R of degree m, the Frobenius generator of
// Gal(S|R), trace, trace-dual bases and the subring correspondence.

#ifndef CHAINRING_GALOIS_HPP
#define CHAINRING_GALOIS_HPP

#include <memory>
#include <vector>

#include "chainring/matrix.hpp"
#include "chainring/poly.hpp"
#include "chainring/ring.hpp"

namespace chainring {

/// Monic basic irreducible H over base with residue image hbar whose roots
/// are Teichmuller elements.
Poly hensel_lift(const RingPtr& base, const Poly& hbar);

/// The subgroup generated by sigma^d, for d dividing m.
struct Subgroup {
  int m;
  int d;
  int order() const { return m / d; }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup make_subgroup(int m, int d);

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Elements of S fixed by a subgroup, sorted by element index.
struct FixedSubring {
  Subgroup group;
  std::vector<Element> elements;
};

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  struct Private;
  Tower(const Private&);

  /// S = R[y]/(h), h the Hensel lift of the smallest irreducible of degree
  /// m over the residue field of R. For m = 1, S is R itself.
  static TowerPtr extend(const RingPtr& base, int m);
  /// S over its own base ring.
  static TowerPtr over(const RingPtr& top);
  static TowerPtr trivial(const RingPtr& ring) { return extend(ring, 1); }

  const RingPtr& base_ptr() const { return base_; }
  const RingPtr& top_ptr() const { return top_; }
  const Ring& base() const { return *base_; }
  const Ring& top() const { return *top_; }
  int m() const { return m_; }
  /// Residue size of R; sigma acts as x -> x^q on Gamma(S).
  uint64_t q() const { return base_->residue_size(); }
  /// The trivial tower R|R, used for codes over the base ring.
  TowerPtr base_tower() const;
  bool same_as(const Tower& o) const { return m_ == o.m_ && top_->same_as(*o.top_); }

  Element embed(const Element& r) const;
  bool in_base(const Element& a) const;
  Element to_base(const Element& a) const;
  /// Coordinates of a over R in the basis 1, y, ..., y^{m-1}.
  std::vector<Element> coordinates(const Element& a) const;
  Element from_coordinates(const std::vector<Element>& c) const;

  /// sigma^k(a), computed from the cached R-linear table.
  Element frobenius(const Element& a, int k = 1) const;
  /// sigma(a) = sum gamma_t(a)^q theta^t, straight from the definition.
  Element frobenius_definitional(const Element& a) const;
  Element trace(const Element& a) const;

  const std::vector<Element>& basis() const { return basis_; }
  const std::vector<Element>& dual_basis() const { return dual_; }
  Mat gram_matrix() const;

  Element teichmuller_lift(const ResidueElement& r) const { return top_->teichmuller_lift(r); }
  /// Smallest-index multiplicative generator of the residue field of S.
  Element residue_generator() const;
  Element primitive_root(int ell) const;

  FixedSubring fixed_ring(const Subgroup& h) const;
  /// Smallest d | m with sigma^d fixing every element of t.
  Subgroup stabilizer(const FixedSubring& t) const;

 private:
  void init();

  RingPtr base_;
  RingPtr top_;
  int m_ = 1;
  std::vector<Element> basis_;
  std::vector<Element> dual_;
  // sigma_[k][j] = sigma^k(y^j)
  std::vector<std::vector<Element>> sigma_;
  TowerPtr base_tower_;
};

}  // namespace chainring

#endif  // CHAINRING_GALOIS_HPP
