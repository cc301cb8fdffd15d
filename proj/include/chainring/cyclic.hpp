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

// Cyclic codes of length l over R with gcd(l, q) = 1.

#ifndef CHAINRING_CYCLIC_HPP
#define CHAINRING_CYCLIC_HPP

#include <memory>
#include <optional>
#include <vector>

#include "chainring/code.hpp"
#include "chainring/poly.hpp"

namespace chainring {

/// Sorted subset of {0, ..., l-1}.
using DefiningSet = std::vector<int>;
/// t_a for each coset representative, in representative order.
using MultiIndex = std::vector<int>;

struct CosetTable {
  int ell = 0;
  uint64_t q = 0;
  std::vector<int> reps;                 // smallest element of each coset, ascending
  std::vector<std::vector<int>> cosets;  // cosets[i] is the orbit of reps[i], sorted
  std::vector<int> coset_index;          // element -> index into reps

  /// Index of a representative; throws UnknownRepresentative.
  int index_of_rep(int a) const;
  const std::vector<int>& coset(int a) const { return cosets[index_of_rep(a)]; }
};

CosetTable cyclotomic_cosets(int ell, uint64_t q);
/// Least m >= 1 with q^m = 1 mod l.
int multiplicative_order(uint64_t q, int ell);

// Defining-set calculus.
DefiningSet normalize_set(std::vector<int> a, int ell);
DefiningSet q_closure(const DefiningSet& a, const CosetTable& table);
DefiningSet opposite(const DefiningSet& a, int ell);
DefiningSet complement(const DefiningSet& a, int ell);
DefiningSet multiples(const DefiningSet& a, int u, int ell);
bool is_q_invariant(const DefiningSet& a, const CosetTable& table);

struct Interval {
  int w;
  int u;
  int v;
};

/// First (w, u) in lexicographic order with A = {w u, w(u+1), ..., w(u+v-1)} mod l.
std::optional<Interval> find_interval(const DefiningSet& a, int ell);

class CyclicContext;
using CyclicContextPtr = std::shared_ptr<const CyclicContext>;

struct InvarianceReport {
  bool galois_invariant;
  bool q_invariant;
  bool closure_matches;  // closure(B_t(A)) = B_t(q-closure of A)
};

struct RestrictedReport {
  Code by_trace_dual;         // Tr(B_{s-t}(A))^perp
  Code by_dual_restriction;   // Res(B_t(A)^perp)
  Code by_opposite;           // Res(B_{s-t}(-complement A))
  bool trace_eq_restriction;
  bool trace_eq_opposite;
  bool restriction_eq_opposite;
};

struct BchReport {
  Interval interval;
  bool q_invariant;
  Code code;  // Res(B_{s-t}(-complement A))
  std::optional<int> min_weight;  // empty for the zero code
  int designed;                   // v + 1
  bool holds;
};

class CyclicContext {
 public:
  struct Private;
  CyclicContext(const Private&);

  static CyclicContextPtr make(const RingPtr& base, int ell);

  const Ring& base() const { return tower_->base(); }
  const TowerPtr& tower() const { return tower_; }
  int ell() const { return table_.ell; }
  const CosetTable& cosets() const { return table_; }
  const Element& xi() const { return xi_; }
  /// Lambda_a over R, parallel to cosets().reps.
  const std::vector<Poly>& factors() const { return factors_; }
  /// e_a in R[x]/(x^l - 1) with l slots, parallel to cosets().reps.
  const std::vector<Poly>& idempotents() const { return idempotents_; }

  Code minimal_code(int a) const;
  /// C_a, theta C_a, ..., theta^s C_a = 0.
  std::vector<Code> subcode_chain(int a) const;
  Code code_from_multiindex(const MultiIndex& t) const;
  /// All multi-indices in lexicographic order.
  std::vector<MultiIndex> all_multiindices() const;

  /// Generator rows theta^t (xi^{ja})_j for a in A.
  Mat eval_matrix(const DefiningSet& a, int t) const;
  Code eval_code(const DefiningSet& a, int t) const;
  Poly generator_polynomial(const DefiningSet& a) const;

  InvarianceReport invariance_and_closure(const DefiningSet& a, int t) const;
  RestrictedReport restricted_code(const DefiningSet& a, int t) const;
  /// Stacked theta^{s-t_a} W(-Z_a), a generator matrix of the dual side.
  Mat restricted_generator(const MultiIndex& t) const;
  Code restricted_multiindex(const MultiIndex& t) const;
  BchReport bch_check(const DefiningSet& a, int t) const;

 private:
  TowerPtr tower_;
  CosetTable table_;
  Element xi_;
  std::vector<Poly> factors_;
  std::vector<Poly> idempotents_;
};

/// Exact minimum Hamming weight by enumeration (|code| <= 2^22).
int min_weight(const Code& code);
bool is_cyclic(const Code& code);
/// Length-l vector of polynomial coefficients, padded with zeros.
Vec poly_to_vec(const Ring& ring, const Poly& f, int ell);
/// R-span (or S-span) of the l cyclic shifts of f.
Code ideal_code(const TowerPtr& tower, const Poly& f, int ell);

}  // namespace chainring

#endif  // CHAINRING_CYCLIC_HPP
