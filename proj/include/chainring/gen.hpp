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

// Seeded random generators for property checks.

#ifndef CHAINRING_GEN_HPP
#define CHAINRING_GEN_HPP

#include <cstdint>
#include <random>

#include "chainring/code.hpp"

namespace chainring {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

  Element element(const Ring& ring);
  Element unit(const Ring& ring);
  /// theta^v times a unit, v uniform in [0, s]; zero when v = s.
  Element layered(const Ring& ring);
  Vec vec(const Ring& ring, int len);

  /// k x l matrix mixing layered entries, zero entries and rows that are
  /// combinations of earlier rows.
  Mat matrix(const RingPtr& ring, int k, int l);
  /// Permutation times unit lower times unit-diagonal upper triangular.
  Mat invertible(const RingPtr& ring, int k);

  /// Code of length in [1, max_len] from up to max_rows generators.
  Code code(const TowerPtr& tower, int max_len, int max_rows);
  /// Extension of a random code over the base ring.
  Code invariant_code(const TowerPtr& tower, int max_len, int max_rows);
  /// Random, invariant, or invariant plus a small random part.
  Code mixed_code(const TowerPtr& tower, int max_len, int max_rows);

 private:
  std::mt19937_64 rng_;
};

}  // namespace chainring

#endif  // CHAINRING_GEN_HPP
