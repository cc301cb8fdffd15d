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

#include "chainring/matrix.hpp"

#include <sstream>
#include <tuple>

namespace chainring {

Mat::Mat(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  data_.assign(static_cast<size_t>(rows) * cols, ring_->zero());
}

Mat Mat::identity(RingPtr ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring->one();
  return m;
}

Mat Mat::from_rows(RingPtr ring, int cols, const std::vector<Vec>& rows) {
  Mat m(ring, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec Mat::row(int i) const {
  auto b = data_.begin() + static_cast<ptrdiff_t>(i) * cols_;
  return Vec(b, b + cols_);
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void Mat::append_row(const Vec& r) {
  if (static_cast<int>(r.size()) != cols_) fail(ErrorKind::LengthMismatch, "row has wrong length");
  for (const auto& e : r) ring_->check_same(e);
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::map(RingPtr target, const std::function<Element(const Element&)>& f) const {
  Mat out(target, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::LengthMismatch, "matrix shapes do not match");
  Mat c(a.ring_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Element& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec zero_vec(const Ring& ring, int n) { return Vec(n, ring.zero()); }

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "vector lengths differ");
  Vec out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "vector lengths differ");
  Vec out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Vec& a, const Element& c) {
  Vec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  return out;
}

Element dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "vector lengths differ");
  if (a.empty()) fail(ErrorKind::Internal, "dot product of empty vectors");
  Element acc = a[0] * b[0];
  for (size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_mat(const Vec& x, const Mat& a) {
  if (static_cast<int>(x.size()) != a.rows()) fail(ErrorKind::LengthMismatch, "vector length");
  Vec out = zero_vec(a.ring(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < a.cols(); ++j) out[j] += x[i] * a.at(i, j);
  }
  return out;
}

namespace {

PivotData row_pivot(const Ring& ring, const Element* row, int active) {
  PivotData pd{ring.s(), 0};
  for (int j = 0; j < active; ++j) {
    int v = ring.valuation(row[j]);
    if (v < pd.valuation) {
      pd = {v, j};
      if (v == 0) break;
    }
  }
  return pd;
}

// row -= w * pivot, over all columns
void axpy_sub(Vec& row, const Element& w, const Vec& pivot) {
  for (size_t j = 0; j < row.size(); ++j)
    if (!pivot[j].is_zero()) row[j] -= w * pivot[j];
}

struct Elimination {
  std::vector<Vec> pivot_rows;
  std::vector<Pivot> pivots;
  std::vector<Vec> zero_rows;
};

// Hermite-style elimination choosing pivots among the first `active`
// columns. Rows that vanish on the active columns are dropped, or collected
// in zero_rows when keep_zero is set.
Elimination eliminate(const Ring& ring, std::vector<Vec> rows, int active, bool reduce_above,
                      bool keep_zero) {
  const int s = ring.s();
  const size_t k = rows.size();
  std::vector<char> state(k, 0);  // 0 open, 1 processed, 2 vanished
  std::vector<size_t> order;
  Elimination out;
  while (true) {
    int best = -1;
    PivotData bp{s, 0};
    for (size_t r = 0; r < k; ++r) {
      if (state[r]) continue;
      PivotData pd = row_pivot(ring, rows[r].data(), active);
      if (pd.valuation == s) {
        state[r] = 2;
        if (keep_zero) out.zero_rows.push_back(rows[r]);
        continue;
      }
      if (best < 0 || std::tie(pd.valuation, pd.column) < std::tie(bp.valuation, bp.column)) {
        best = static_cast<int>(r);
        bp = pd;
      }
    }
    if (best < 0) break;
    Vec& prow = rows[best];
    const int v = bp.valuation, c = bp.column;
    Element u = ring.unit_part(prow[c]);
    if (!u.is_one()) prow = scale(prow, u.inv());
    for (size_t r = 0; r < k; ++r) {
      if (state[r] || static_cast<int>(r) == best) continue;
      const Element& e = rows[r][c];
      if (e.is_zero()) continue;
      Element w = ring.div_theta_pow(e, v);
      axpy_sub(rows[r], w, prow);
    }
    if (reduce_above && v > 0) {
      for (size_t idx : order) {
        const Element e = rows[idx][c];
        if (e.is_zero()) continue;
        Element red = ring.reduce_mod_theta_pow(e, v);
        if (red == e) continue;
        Element w = ring.div_theta_pow(e - red, v);
        axpy_sub(rows[idx], w, prow);
      }
    } else if (reduce_above) {
      for (size_t idx : order) {
        const Element e = rows[idx][c];
        if (e.is_zero()) continue;
        axpy_sub(rows[idx], e, prow);
      }
    }
    state[best] = 1;
    order.push_back(static_cast<size_t>(best));
    out.pivots.push_back({static_cast<int>(order.size()) - 1, c, v});
  }
  for (size_t idx : order) out.pivot_rows.push_back(std::move(rows[idx]));
  return out;
}

}  // namespace

std::vector<PivotData> pivot_data(const Mat& a) {
  std::vector<PivotData> out;
  out.reserve(a.rows());
  for (int i = 0; i < a.rows(); ++i) out.push_back(row_pivot(a.ring(), &a.at(i, 0), a.cols()));
  return out;
}

RsfCheck is_rsf(const Mat& a) {
  const int s = a.ring().s();
  auto pd = pivot_data(a);
  auto bad = [](std::string what, int r, int c) { return RsfCheck{false, std::move(what), r, c}; };
  for (int i = 0; i < a.rows(); ++i) {
    if (pd[i].valuation == s) return bad("zero row", i, 0);
    if (i > 0 && std::tie(pd[i].valuation, pd[i].column) <=
                     std::tie(pd[i - 1].valuation, pd[i - 1].column))
      return bad("valuation function not increasing", i, pd[i].column);
    if (!(a.at(i, pd[i].column) == a.ring().theta_pow(pd[i].valuation)))
      return bad("pivot is not a power of theta", i, pd[i].column);
  }
  for (int i = 0; i < a.rows(); ++i) {
    const int c = pd[i].column;
    for (int t = 0; t < a.rows(); ++t) {
      if (t == i) continue;
      const Element& e = a.at(t, c);
      if (t > i && !e.is_zero()) return bad("nonzero entry below pivot", t, c);
      if (t < i && !(e.degree() < pd[i].valuation))
        return bad("entry above pivot not reduced", t, c);
    }
  }
  return {};
}

RsfReport row_standard_form(const Mat& a, bool track_transform) {
  const Ring& ring = a.ring();
  const int k = a.rows(), l = a.cols();
  std::vector<Vec> rows = a.row_list();
  if (track_transform) {
    for (int i = 0; i < k; ++i) {
      rows[i].resize(l + k, ring.zero());
      rows[i][l + i] = ring.one();
    }
  }
  Elimination e = eliminate(ring, std::move(rows), l, true, false);
  RsfReport rep;
  rep.rsf = Mat(a.ring_ptr(), 0, l);
  rep.transform = Mat(a.ring_ptr(), 0, k);
  for (auto& r : e.pivot_rows) {
    if (track_transform) {
      rep.transform.append_row(Vec(r.begin() + l, r.end()));
      r.resize(l);
    }
    rep.rsf.append_row(r);
  }
  rep.pivots = std::move(e.pivots);
  return rep;
}

Mat rsf(const Mat& a) { return row_standard_form(a, false).rsf; }

Vec reduce_by_rsf(const Mat& g, Vec v) {
  const Ring& ring = g.ring();
  if (static_cast<int>(v.size()) != g.cols()) fail(ErrorKind::LengthMismatch, "word length");
  for (int i = 0; i < g.rows(); ++i) {
    PivotData pd = row_pivot(ring, &g.at(i, 0), g.cols());
    const Element& e = v[pd.column];
    if (e.is_zero()) continue;
    if (ring.valuation(e) < pd.valuation) return v;
    Element w = ring.div_theta_pow(e, pd.valuation);
    for (int j = 0; j < g.cols(); ++j) v[j] -= w * g.at(i, j);
  }
  return v;
}

bool in_row_span(const Mat& g, const Vec& v) { return is_zero(reduce_by_rsf(g, v)); }

Mat left_kernel(const Mat& a) {
  const Ring& ring = a.ring();
  const int k = a.rows(), n = a.cols(), s = ring.s();
  std::vector<Vec> rows = a.row_list();
  for (int i = 0; i < k; ++i) {
    rows[i].resize(n + k, ring.zero());
    rows[i][n + i] = ring.one();
  }
  Elimination e = eliminate(ring, std::move(rows), n, false, true);
  Mat out(a.ring_ptr(), 0, k);
  for (size_t i = 0; i < e.pivot_rows.size(); ++i) {
    Vec t(e.pivot_rows[i].begin() + n, e.pivot_rows[i].end());
    t = scale(t, ring.theta_pow(s - e.pivots[i].valuation));
    if (!is_zero(t)) out.append_row(t);
  }
  for (const auto& z : e.zero_rows) out.append_row(Vec(z.begin() + n, z.end()));
  return out;
}

Mat mat_inverse(const Mat& a) {
  const Ring& ring = a.ring();
  const int n = a.rows();
  if (a.cols() != n) fail(ErrorKind::LengthMismatch, "matrix is not square");
  std::vector<Vec> rows = a.row_list();
  for (int i = 0; i < n; ++i) {
    rows[i].resize(2 * n, ring.zero());
    rows[i][n + i] = ring.one();
  }
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int r = c; r < n; ++r)
      if (rows[r][c].is_unit()) {
        pr = r;
        break;
      }
    if (pr < 0) fail(ErrorKind::NonUnitDeterminant, "determinant is not a unit");
    std::swap(rows[c], rows[pr]);
    rows[c] = scale(rows[c], rows[c][c].inv());
    for (int r = 0; r < n; ++r) {
      if (r == c || rows[r][c].is_zero()) continue;
      Element w = rows[r][c];
      axpy_sub(rows[r], w, rows[c]);
    }
  }
  Mat inv(a.ring_ptr(), 0, n);
  for (auto& r : rows) inv.append_row(Vec(r.begin() + n, r.end()));
  return inv;
}

std::vector<int> rsf_type(const Mat& g) {
  std::vector<int> type(g.ring().s(), 0);
  for (const auto& pd : pivot_data(g))
    if (pd.valuation < g.ring().s()) ++type[pd.valuation];
  return type;
}

Mat kernel_dual(const Mat& g) {
  RsfCheck chk = is_rsf(g);
  if (!chk.ok) fail(ErrorKind::NotRsfInput, "kernel_dual input is not in row standard form: " + chk.violation);
  Mat h = rsf(left_kernel(g.transpose()));
  const int s = g.ring().s();
  auto tg = rsf_type(g), th = rsf_type(h);
  long total = 0;
  for (int t = 0; t < s; ++t) total += static_cast<long>(tg[t] + th[t]) * (s - t);
  if (total != static_cast<long>(g.cols()) * s) {
    std::ostringstream os;
    os << "dual cardinality check failed (" << total << " vs " << g.cols() * s << ")";
    fail(ErrorKind::Internal, os.str());
  }
  return h;
}

}  // namespace chainring
