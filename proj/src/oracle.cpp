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

#include "chainring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace chainring {

BruteSpace::BruteSpace(const Ring& ring, int length)
    : ring_(&ring), length_(length), digits_(length * static_cast<int>(ring.num_digits())),
      radix_(ring.radix()) {
  require_within_guard(log2_size(), "exhaustive word space");
  if (log2_size() > 62) fail(ErrorKind::SizeGuardExceeded, "word space too large");
  for (int k = 0; k < digits_; ++k) size_ *= static_cast<uint64_t>(radix_);
  if ((radix_ & (radix_ - 1)) == 0) {
    while ((int64_t{1} << lane_bits_) < radix_) ++lane_bits_;
    for (int k = 0; k < digits_; ++k) high_mask_ |= uint64_t{1} << (k * lane_bits_ + lane_bits_ - 1);
  }
}

double BruteSpace::log2_size() const { return digits_ * std::log2(static_cast<double>(radix_)); }

uint64_t BruteSpace::encode(const Vec& v) const {
  if (static_cast<int>(v.size()) != length_) fail(ErrorKind::LengthMismatch, "word has the wrong length");
  uint64_t w = 0, pw = 1;
  for (const auto& e : v)
    for (int64_t d : e.digits()) {
      w += static_cast<uint64_t>(d) * pw;
      pw *= static_cast<uint64_t>(radix_);
    }
  return w;
}

Vec BruteSpace::decode(uint64_t w) const {
  const size_t nd = ring_->num_digits();
  Vec out;
  out.reserve(length_);
  Digits d(nd);
  for (int j = 0; j < length_; ++j) {
    for (size_t k = 0; k < nd; ++k) {
      d[k] = static_cast<int64_t>(w % static_cast<uint64_t>(radix_));
      w /= static_cast<uint64_t>(radix_);
    }
    out.push_back(ring_->from_digits({d.data(), d.size()}));
  }
  return out;
}

uint64_t BruteSpace::add(uint64_t a, uint64_t b) const {
  if (lane_bits_ > 0) {
    const uint64_t low = ~high_mask_;
    return ((a & low) + (b & low)) ^ ((a ^ b) & high_mask_);
  }
  const uint64_t r = static_cast<uint64_t>(radix_);
  uint64_t out = 0, pw = 1;
  for (int k = 0; k < digits_; ++k) {
    out += ((a % r + b % r) % r) * pw;
    a /= r;
    b /= r;
    pw *= r;
  }
  return out;
}

WordSet BruteSpace::closure(const std::vector<uint64_t>& gens) const {
  std::vector<uint8_t> seen(size_, 0);
  WordSet members{0};
  seen[0] = 1;
  for (uint64_t g : gens) {
    if (seen[g]) continue;
    const size_t base = members.size();
    for (uint64_t c = g; !seen[c]; c = add(c, g)) {
      for (size_t i = 0; i < base; ++i) {
        uint64_t y = add(members[i], c);
        if (!seen[y]) {
          seen[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  if (members.size() * 16 < size_) {
    std::sort(members.begin(), members.end());
    return members;
  }
  WordSet out;
  out.reserve(members.size());
  for (uint64_t w = 0; w < size_; ++w)
    if (seen[w]) out.push_back(w);
  return out;
}

WordSet BruteSpace::span(const std::vector<Vec>& rows) const {
  const size_t nd = ring_->num_digits();
  std::vector<Element> units;
  for (size_t k = 0; k < nd; ++k) {
    Digits d(nd, 0);
    d[k] = 1;
    units.push_back(ring_->from_digits({d.data(), d.size()}));
  }
  std::vector<uint64_t> gens;
  for (const auto& r : rows)
    for (const auto& u : units) gens.push_back(encode(scale(r, u)));
  return closure(gens);
}

WordSet BruteSpace::orthogonal(const std::vector<Vec>& rows,
                               const std::function<Element(const Element&)>& conj) const {
  std::vector<Vec> cr = rows;
  if (conj)
    for (auto& r : cr)
      for (auto& e : r) e = conj(e);
  WordSet out;
  for (uint64_t w = 0; w < size_; ++w) {
    Vec x = decode(w);
    bool ok = true;
    for (const auto& r : cr) {
      Element acc = ring_->zero();
      for (int j = 0; j < length_; ++j) acc += x[j] * r[j];
      if (!acc.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<Vec> BruteSpace::words(const WordSet& set) const {
  std::vector<Vec> out;
  out.reserve(set.size());
  for (uint64_t w : set) out.push_back(decode(w));
  return out;
}

int brute_min_weight(const BruteSpace& space, const WordSet& set) {
  const size_t nd = space.ring().num_digits();
  const uint64_t r = static_cast<uint64_t>(space.ring().radix());
  int best = -1;
  for (uint64_t w : set) {
    if (w == 0) continue;
    int wt = 0;
    for (int j = 0; j < space.length(); ++j) {
      bool nz = false;
      for (size_t k = 0; k < nd; ++k) {
        nz |= (w % r) != 0;
        w /= r;
      }
      wt += nz;
    }
    if (best < 0 || wt < best) best = wt;
  }
  return best;
}

std::vector<WordSet> brute_ideals(const Ring& ring, int ell) {
  BruteSpace space(ring, ell);
  const size_t nd = ring.num_digits();
  std::vector<Element> units;
  for (size_t k = 0; k < nd; ++k) {
    Digits d(nd, 0);
    d[k] = 1;
    units.push_back(ring.from_digits({d.data(), d.size()}));
  }
  // additive generators of the ideal generated by v
  auto ideal_gens = [&](const Vec& v) {
    std::vector<uint64_t> g;
    Vec sh = v;
    for (int i = 0; i < ell; ++i) {
      for (const auto& u : units) g.push_back(space.encode(scale(sh, u)));
      std::rotate(sh.rbegin(), sh.rbegin() + 1, sh.rend());
    }
    return g;
  };

  std::map<WordSet, std::vector<uint64_t>> found;
  for (uint64_t w = 0; w < space.size(); ++w) {
    auto g = ideal_gens(space.decode(w));
    WordSet s = space.closure(g);
    found.emplace(std::move(s), std::move(g));
  }

  std::vector<std::pair<WordSet, std::vector<uint64_t>>> list(found.begin(), found.end());
  for (bool grew = true; grew;) {
    grew = false;
    const size_t n = list.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        std::vector<uint64_t> g = list[i].second;
        g.insert(g.end(), list[j].second.begin(), list[j].second.end());
        WordSet s = space.closure(g);
        if (found.emplace(s, g).second) {
          list.emplace_back(std::move(s), std::move(g));
          grew = true;
        }
      }
  }
  std::vector<WordSet> out;
  for (auto& [s, g] : found) out.push_back(s);
  return out;
}

}  // namespace chainring
