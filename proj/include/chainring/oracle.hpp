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

// Brute-force reference computations by exhaustive enumeration of R^l.
// Nothing here uses row reduction; sets of words are compared as sorted
// lists of packed indices.

#ifndef CHAINRING_ORACLE_HPP
#define CHAINRING_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "chainring/matrix.hpp"

namespace chainring {

using WordSet = std::vector<uint64_t>;  // sorted packed indices

/// The additive group R^l with words packed digit by digit.
class BruteSpace {
 public:
  BruteSpace(const Ring& ring, int length);

  const Ring& ring() const { return *ring_; }
  int length() const { return length_; }
  uint64_t size() const { return size_; }
  double log2_size() const;

  uint64_t encode(const Vec& v) const;
  Vec decode(uint64_t w) const;
  uint64_t add(uint64_t a, uint64_t b) const;

  /// Additive subgroup generated by the given words.
  WordSet closure(const std::vector<uint64_t>& gens) const;
  /// R-span of the rows: the additive closure of (digit unit) * row.
  WordSet span(const std::vector<Vec>& rows) const;
  /// {x : sum_j x_j * conj(r_j) = 0 for every row r}.
  WordSet orthogonal(const std::vector<Vec>& rows,
                     const std::function<Element(const Element&)>& conj = nullptr) const;
  /// Every word of the set, as vectors.
  std::vector<Vec> words(const WordSet& set) const;

 private:
  const Ring* ring_;
  int length_;
  int digits_;   // total digits per word
  int64_t radix_;
  int lane_bits_ = 0;  // > 0 when radix is a power of two
  uint64_t high_mask_ = 0;
  uint64_t size_ = 1;
};

/// Minimum nonzero Hamming weight of the words; -1 for {0}.
int brute_min_weight(const BruteSpace& space, const WordSet& set);

/// All ideals of R[x]/(x^l - 1) for a ring R with trivial tower, found by
/// closing the principal ideals under sums.
std::vector<WordSet> brute_ideals(const Ring& ring, int ell);

}  // namespace chainring

#endif  // CHAINRING_ORACLE_HPP
