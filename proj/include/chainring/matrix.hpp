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

// Dense matrices over a chain ring and the row standard form.
//
// Row and column indices are zero-based throughout the library.

#ifndef CHAINRING_MATRIX_HPP
#define CHAINRING_MATRIX_HPP

#include <functional>
#include <string>
#include <vector>

#include "chainring/ring.hpp"

namespace chainring {

using Vec = std::vector<Element>;

class Mat {
 public:
  Mat() = default;
  Mat(RingPtr ring, int rows, int cols);
  static Mat identity(RingPtr ring, int n);
  static Mat from_rows(RingPtr ring, int cols, const std::vector<Vec>& rows);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Element& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Element& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Vec row(int i) const;
  std::vector<Vec> row_list() const;
  void append_row(const Vec& r);

  Mat transpose() const;
  /// Entrywise image under f; the result lives over target.
  Mat map(RingPtr target, const std::function<Element(const Element&)>& f) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  RingPtr ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Element> data_;
};

Vec zero_vec(const Ring& ring, int n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Element& c);
Element dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
/// x * A for a row vector x of length A.rows().
Vec vec_mat(const Vec& x, const Mat& a);

struct PivotData {
  int valuation;  // s for the zero row
  int column;     // leftmost column of minimal valuation, 0 for the zero row
};

std::vector<PivotData> pivot_data(const Mat& a);

struct RsfCheck {
  bool ok = true;
  std::string violation;  // empty when ok
  int row = -1;
  int col = -1;
};

RsfCheck is_rsf(const Mat& a);

struct Pivot {
  int row;
  int column;
  int valuation;
};

struct RsfReport {
  Mat rsf;
  /// T with T * input = rsf (rows of T combine input rows).
  Mat transform;
  std::vector<Pivot> pivots;
};

RsfReport row_standard_form(const Mat& a, bool track_transform = false);
/// Shortcut returning the canonical matrix only.
Mat rsf(const Mat& a);

/// Reduces v against an RSF matrix; the residual is zero iff v is in the row span.
Vec reduce_by_rsf(const Mat& rsf, Vec v);
bool in_row_span(const Mat& rsf, const Vec& v);

/// Rows spanning {x : x * A = 0}.
Mat left_kernel(const Mat& a);

Mat mat_inverse(const Mat& a);

/// Generator matrix (in RSF) of the Euclidean dual of the row span of an
/// RSF matrix G.
Mat kernel_dual(const Mat& g);

/// (k_0, ..., k_{s-1}) from the pivot valuations of an RSF matrix.
std::vector<int> rsf_type(const Mat& rsf);

}  // namespace chainring

#endif  // CHAINRING_MATRIX_HPP
