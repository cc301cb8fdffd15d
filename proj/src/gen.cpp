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

#include "chainring/gen.hpp"

#include <algorithm>
#include <numeric>

namespace chainring {

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Element Gen::element(const Ring& ring) {
  Digits d(ring.num_digits());
  std::uniform_int_distribution<int64_t> dist(0, ring.radix() - 1);
  for (auto& x : d) x = dist(rng_);
  return ring.from_digits({d.data(), d.size()});
}

Element Gen::unit(const Ring& ring) {
  for (;;) {
    Element e = element(ring);
    if (e.is_unit()) return e;
  }
}

Element Gen::layered(const Ring& ring) {
  int v = uniform(0, ring.s());
  if (v == ring.s()) return ring.zero();
  return ring.theta_pow(v) * unit(ring);
}

Vec Gen::vec(const Ring& ring, int len) {
  Vec v;
  for (int i = 0; i < len; ++i) v.push_back(element(ring));
  return v;
}

Mat Gen::matrix(const RingPtr& ring, int k, int l) {
  Mat a(ring, k, l);
  for (int i = 0; i < k; ++i) {
    if (i > 0 && chance(1, 5)) {
      Vec r = zero_vec(*ring, l);
      for (int h = 0; h < i; ++h) r = add(r, scale(a.row(h), layered(*ring)));
      for (int j = 0; j < l; ++j) a.at(i, j) = r[j];
      continue;
    }
    for (int j = 0; j < l; ++j)
      a.at(i, j) = chance(1, 8) ? ring->zero() : chance(1, 2) ? element(*ring) : layered(*ring);
  }
  return a;
}

Mat Gen::invertible(const RingPtr& ring, int k) {
  Mat lower = Mat::identity(ring, k), upper = Mat::identity(ring, k), perm(ring, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (j < i) lower.at(i, j) = element(*ring);
      if (j > i) upper.at(i, j) = element(*ring);
    }
  for (int i = 0; i < k; ++i) upper.at(i, i) = unit(*ring);
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng_);
  for (int i = 0; i < k; ++i) perm.at(i, p[i]) = ring->one();
  return perm * lower * upper;
}

Code Gen::code(const TowerPtr& tower, int max_len, int max_rows) {
  int l = uniform(1, max_len);
  int k = uniform(1, max_rows);
  return Code::from_matrix(tower, matrix(tower->top_ptr(), k, l));
}

Code Gen::invariant_code(const TowerPtr& tower, int max_len, int max_rows) {
  int l = uniform(1, max_len);
  int k = uniform(1, max_rows);
  Code c = Code::from_matrix(tower->base_tower(), matrix(tower->base_ptr(), k, l));
  return extension(c, tower);
}

Code Gen::mixed_code(const TowerPtr& tower, int max_len, int max_rows) {
  switch (uniform(0, 3)) {
    case 0:
    case 1: {
      int l = uniform(std::min(2, max_len), max_len);
      int k = uniform(1, std::max(1, std::min(max_rows, l - 1)));
      return Code::from_matrix(tower, matrix(tower->top_ptr(), k, l));
    }
    case 2:
      return invariant_code(tower, max_len, max_rows);
    default: {
      Code c = invariant_code(tower, max_len, max_rows);
      Mat extra = matrix(tower->top_ptr(), 1, c.length());
      const Element th = tower->top().theta_pow(uniform(0, tower->top().s() - 1));
      return sum(c, Code::from_matrix(tower, extra.map(tower->top_ptr(), [&](const Element& e) { return e * th; })));
    }
  }
}

}  // namespace chainring
