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

// Linear codes over the top ring of a tower, kept in row standard form.
// Codes over the base ring R live over the trivial tower R|R.

#ifndef CHAINRING_CODE_HPP
#define CHAINRING_CODE_HPP

#include <functional>
#include <string>
#include <vector>

#include "chainring/galois.hpp"
#include "chainring/matrix.hpp"

namespace chainring {

enum class Form { euclidean, hermitian };

class Code {
 public:
  Code() = default;
  static Code from_generators(TowerPtr tower, int length, const std::vector<Vec>& rows);
  static Code from_matrix(TowerPtr tower, const Mat& generators);
  static Code zero(TowerPtr tower, int length);
  static Code full(TowerPtr tower, int length);

  const TowerPtr& tower() const { return tower_; }
  const Ring& ring() const { return tower_->top(); }
  int length() const { return rsf_.cols(); }
  const Mat& rsf() const { return rsf_; }
  /// (k_0, ..., k_{s-1}).
  const std::vector<int>& type() const { return type_; }
  int rank() const { return rsf_.rows(); }
  int free_rank() const { return type_.empty() ? 0 : type_[0]; }
  /// log2 |B| = log2(q^m) * sum_t k_t (s - t).
  double log2_cardinality() const;
  bool is_zero() const { return rsf_.rows() == 0; }

  bool contains(const Vec& word) const;
  bool contains(const Code& sub) const;
  /// Visits every codeword once; guarded by the enumeration limit.
  void for_each_codeword(const std::function<void(const Vec&)>& fn) const;

  friend bool operator==(const Code& a, const Code& b);

 private:
  Code(TowerPtr tower, Mat rsf);
  TowerPtr tower_;
  Mat rsf_;
  std::vector<int> type_;
};

Code sum(const Code& a, const Code& b);
Code intersect(const Code& a, const Code& b);
Code dual(const Code& b, Form form = Form::euclidean);
/// Hermitian dual for even m, Euclidean dual otherwise.
Code dual_phi_prime(const Code& b);
Code apply_automorphism(const Code& b, int j);

Code restriction(const Code& b);
/// B intersected with R^l by R-linear algebra on R^{m l}.
Code restriction_via_coordinates(const Code& b);
Code trace_code(const Code& b);
Code extension(const Code& c, const TowerPtr& tower);

Code interior(const Code& b);
Code closure(const Code& b);

/// Every RSF entry lies in R.
bool is_galois_invariant(const Code& b);
/// sigma(B) = B.
bool is_sigma_fixed(const Code& b);

struct DelsarteReport {
  Code lhs;  // trace code of the phi' dual
  Code rhs;  // Euclidean dual of the restriction
  bool equal;
};

DelsarteReport delsarte_check(const Code& b);

/// Intersection of sigma^i(B) over sigma^i in H.
Code subcode_correspondence(const Code& b, const Subgroup& h);
/// The same code built as the S-span of B intersected with T^l for the
/// subring T fixed by H, found by codeword enumeration.
Code fix_via_fixed_subring(const Code& b, const Subgroup& h);
/// Smallest d | m with sigma^d(T) = T; T must lie in B.
Subgroup code_stabilizer(const Code& b, const Code& t);

/// Least sigma-period of each RSF row.
std::vector<int> level_set(const Code& b);

struct Inequality {
  std::string name;
  long lhs;
  std::string relation;  // "<=", ">=", "=="
  long rhs;
  bool holds;
};

struct BoundsReport {
  std::vector<int> level_set;
  std::vector<int> dual_level_set;
  int rank_code = 0;
  int rank_restriction = 0;
  int rank_trace = 0;
  int rank_interior = 0;
  int rank_closure = 0;
  int free_rank = 0;
  int trace_free_rank = 0;
  int restriction_free_rank = 0;
  bool levels_divide_m = true;
  std::vector<Inequality> checks;

  bool all_hold() const;
  const Inequality* find(const std::string& name) const;
};

BoundsReport bounds_report(const Code& b);

}  // namespace chainring

#endif  // CHAINRING_CODE_HPP
