// Copyright 2026 The Orbitale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitale/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace orbitale {

Mat::Mat(FieldPtr f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, LocalElem::zero(f)) {}

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = LocalElem::one(f);
  return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<LocalElem>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      fail(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::row_vector(FieldPtr f, const std::vector<LocalElem>& v) {
  return from_rows(std::move(f), {v});
}

Mat Mat::col_vector(FieldPtr f, const std::vector<LocalElem>& v) {
  Mat m(f, static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

Mat Mat::diag(FieldPtr f, const std::vector<LocalElem>& v) {
  int n = static_cast<int>(v.size());
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = v[i];
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    fail(ErrorCode::kInvalidArgument, "matrix size mismatch in +");
  }
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat r = *this;
  for (LocalElem& x : r.a_) x = -x;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::kInvalidArgument, "matrix size mismatch in *");
  Mat r(field_ ? field_ : o.field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      LocalElem s = LocalElem::zero(r.field_);
      for (int k = 0; k < cols_; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

Mat Mat::scaled(const LocalElem& c) const {
  Mat r = *this;
  for (LocalElem& x : r.a_) x = x * c;
  return r;
}

Mat Mat::shift(int k) const {
  Mat r = *this;
  for (LocalElem& x : r.a_) x = x.shift(k);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::tau() const {
  Mat r = *this;
  for (LocalElem& x : r.a_) x = x.tau();
  return r;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) {
    fail(ErrorCode::kInvalidArgument, "block out of range");
  }
  Mat r(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    fail(ErrorCode::kInvalidArgument, "set_block out of range");
  }
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::with_field(FieldPtr f) const {
  Mat r = *this;
  r.field_ = f;
  for (LocalElem& x : r.a_) x = x.with_field(f);
  return r;
}

int Mat::val_lower_bound() const {
  int v = LocalElem::kExact;
  for (const LocalElem& x : a_) v = std::min(v, x.val_lower_bound());
  return v;
}

bool Mat::is_zero_within_precision() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const LocalElem& x) { return x.is_zero_within_precision(); });
}

bool Mat::agrees_with(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i].agrees_with(o.a_[i])) return false;
  }
  return true;
}

bool Mat::is_integral() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const LocalElem& x) { return x.is_integral(); });
}

bool Mat::in_base() const {
  return std::all_of(a_.begin(), a_.end(), [](const LocalElem& x) { return x.in_base(); });
}

void Mat::split(Mat* a0, Mat* a1) const {
  // x = u + j v  =>  u = (x + tau x)/2, v = (x - tau x)/(2j).
  LocalElem half = LocalElem::from_int(field_, 2).inv();
  LocalElem inv2j = (LocalElem::from_int(field_, 2) * LocalElem::j(field_)).inv();
  *a0 = Mat(field_, rows_, cols_);
  *a1 = Mat(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) {
    LocalElem t = a_[i].tau();
    a0->a_[i] = (a_[i] + t) * half;
    a1->a_[i] = (a_[i] - t) * inv2j;
  }
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<std::vector<std::string>> Mat::render() const {
  std::vector<std::vector<std::string>> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).render());
  return out;
}

Mat power(const Mat& a, int e) {
  Mat r = Mat::identity(a.field(), a.rows());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Index of the certified-nonzero entry of least valuation among rows
// [from, rows) of column c; -1 if none.  `unknown` reports whether some
// entry was zero only to finite precision.
int pick_pivot(const Mat& a, int c, int from, bool* unknown) {
  int best = -1;
  *unknown = false;
  for (int i = from; i < a.rows(); ++i) {
    const LocalElem& x = a(i, c);
    if (x.is_certified_nonzero()) {
      if (best < 0 || x.valuation() < a(best, c).valuation()) best = i;
    } else if (!x.is_exact_zero()) {
      *unknown = true;
    }
  }
  if (best >= 0 && *unknown) {
    // A zero-to-precision entry below the pivot valuation could be the
    // true pivot.
    int v = a(best, c).valuation();
    for (int i = from; i < a.rows(); ++i) {
      const LocalElem& x = a(i, c);
      if (!x.is_certified_nonzero() && !x.is_exact_zero() && x.precision() <= v) {
        fail(ErrorCode::kPrecisionExhausted, "pivot not certified");
      }
    }
  }
  return best;
}

void swap_rows(Mat& a, int i, int k) {
  if (i == k) return;
  for (int j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(Mat& a, int i, int k) {
  if (i == k) return;
  for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
}

}  // namespace

LocalElem det(const Mat& a) {
  int n = a.rows();
  if (n != a.cols()) fail(ErrorCode::kInvalidArgument, "det of non-square matrix");
  if (n == 0) return LocalElem::one(a.field());
  if (n > 4) return det_elimination(a);
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  LocalElem s = LocalElem::zero(a.field());
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        if (p[i] > p[k]) ++inv;
    LocalElem t = LocalElem::one(a.field());
    for (int i = 0; i < n && !t.is_exact_zero(); ++i) t *= a(i, p[i]);
    s = (inv % 2) ? s - t : s + t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

LocalElem det_elimination(const Mat& a0) {
  Mat a = a0;
  int n = a.rows();
  if (n != a.cols()) fail(ErrorCode::kInvalidArgument, "det of non-square matrix");
  LocalElem d = LocalElem::one(a.field());
  for (int c = 0; c < n; ++c) {
    bool unknown = false;
    int p = pick_pivot(a, c, c, &unknown);
    if (p < 0) {
      if (unknown) fail(ErrorCode::kPrecisionExhausted, "determinant not certified");
      return LocalElem::zero(a.field());
    }
    if (p != c) {
      swap_rows(a, p, c);
      d = -d;
    }
    LocalElem piv = a(c, c);
    d *= piv;
    LocalElem pinv = piv.inv();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_exact_zero()) continue;
      LocalElem m = a(i, c) * pinv;
      for (int j = c; j < n; ++j) a(i, j) -= m * a(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& a) {
  int n = a.rows();
  if (n != a.cols()) fail(ErrorCode::kInvalidArgument, "inverse of non-square matrix");
  return solve_unique(a, Mat::identity(a.field(), n));
}

Mat solve_unique(const Mat& a0, const Mat& b0) {
  int e = a0.rows(), u = a0.cols(), k = b0.cols();
  if (b0.rows() != e) fail(ErrorCode::kInvalidArgument, "solve: row mismatch");
  Mat a = a0, b = b0;
  for (int c = 0; c < u; ++c) {
    bool unknown = false;
    int p = pick_pivot(a, c, c, &unknown);
    if (p < 0) {
      if (unknown) fail(ErrorCode::kPrecisionExhausted, "solve: pivot not certified");
      fail(ErrorCode::kLinearSolveSingular, "solution is not unique");
    }
    swap_rows(a, p, c);
    swap_rows(b, p, c);
    LocalElem pinv = a(c, c).inv();
    for (int j = c; j < u; ++j) a(c, j) *= pinv;
    for (int j = 0; j < k; ++j) b(c, j) *= pinv;
    a(c, c) = LocalElem::one(a.field());
    for (int i = 0; i < e; ++i) {
      if (i == c || a(i, c).is_exact_zero()) continue;
      LocalElem m = a(i, c);
      for (int j = c; j < u; ++j) a(i, j) -= m * a(c, j);
      for (int j = 0; j < k; ++j) b(i, j) -= m * b(c, j);
      a(i, c) = LocalElem::zero(a.field());
    }
  }
  for (int i = u; i < e; ++i) {
    for (int j = 0; j < k; ++j) {
      if (b(i, j).is_certified_nonzero()) {
        fail(ErrorCode::kLinearSolveSingular, "inconsistent linear system");
      }
    }
  }
  return b.block(0, 0, u, k);
}

int rank(const Mat& a0) {
  Mat a = a0;
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    bool unknown = false;
    int p = pick_pivot(a, c, row, &unknown);
    if (p < 0) {
      if (unknown) fail(ErrorCode::kPrecisionExhausted, "rank not certified");
      continue;
    }
    swap_rows(a, p, row);
    LocalElem pinv = a(row, c).inv();
    for (int i = row + 1; i < a.rows(); ++i) {
      if (a(i, c).is_exact_zero()) continue;
      LocalElem m = a(i, c) * pinv;
      for (int j = c; j < a.cols(); ++j) a(i, j) -= m * a(row, j);
      a(i, c) = LocalElem::zero(a.field());
    }
    ++row;
  }
  return row;
}

Smith smith_form(const Mat& a0) {
  Mat w = a0;
  int n = w.rows(), m = w.cols();
  FieldPtr f = w.field();
  Smith s{Mat::identity(f, n), Mat::identity(f, m), {}, 0};
  for (int k = 0; k < std::min(n, m); ++k) {
    int bi = -1, bj = -1, bv = 0;
    int unknown_bound = LocalElem::kExact;
    for (int i = k; i < n; ++i) {
      for (int j = k; j < m; ++j) {
        const LocalElem& x = w(i, j);
        if (x.is_certified_nonzero()) {
          if (bi < 0 || x.valuation() < bv) {
            bi = i;
            bj = j;
            bv = x.valuation();
          }
        } else if (!x.is_exact_zero()) {
          unknown_bound = std::min(unknown_bound, x.precision());
        }
      }
    }
    if (bi < 0) {
      if (unknown_bound != LocalElem::kExact) {
        fail(ErrorCode::kPrecisionExhausted, "Smith form: pivot not certified");
      }
      break;
    }
    if (unknown_bound <= bv) {
      fail(ErrorCode::kPrecisionExhausted, "Smith form: pivot not certified");
    }
    swap_rows(w, bi, k);
    swap_rows(s.P, bi, k);
    swap_cols(w, bj, k);
    swap_cols(s.Qm, bj, k);
    // Scale row k so the pivot becomes exactly pi^bv.
    LocalElem unit_inv = (w(k, k).shift(-bv)).inv();
    for (int j = 0; j < m; ++j) w(k, j) *= unit_inv;
    for (int j = 0; j < n; ++j) s.P(k, j) *= unit_inv;
    w(k, k) = LocalElem::pi_power(f, bv);
    for (int i = k + 1; i < n; ++i) {
      if (w(i, k).is_exact_zero()) continue;
      LocalElem c = w(i, k).shift(-bv);
      for (int j = k; j < m; ++j) w(i, j) -= c * w(k, j);
      for (int j = 0; j < n; ++j) s.P(i, j) -= c * s.P(k, j);
      w(i, k) = LocalElem::zero(f);
    }
    for (int j = k + 1; j < m; ++j) {
      if (w(k, j).is_exact_zero()) continue;
      LocalElem c = w(k, j).shift(-bv);
      for (int i = 0; i < m; ++i) s.Qm(i, j) -= c * s.Qm(i, k);
      w(k, j) = LocalElem::zero(f);
    }
    s.d.push_back(bv);
    ++s.rank;
  }
  return s;
}

Mat lattice_basis(const Mat& gens) {
  int n = gens.rows();
  std::vector<Mat> cols;
  for (int j = 0; j < gens.cols(); ++j) cols.push_back(gens.col(j));
  std::vector<std::pair<int, Mat>> basis;
  for (int i = n - 1; i >= 0 && !cols.empty(); --i) {
    int best = -1, bv = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
      const LocalElem& x = cols[c](i, 0);
      if (x.is_certified_nonzero() && (best < 0 || x.valuation() < bv)) {
        best = static_cast<int>(c);
        bv = x.valuation();
      }
    }
    if (best < 0) continue;
    Mat piv = cols[best];
    cols.erase(cols.begin() + best);
    LocalElem pinv = piv(i, 0).inv();
    for (Mat& c : cols) {
      const LocalElem& x = c(i, 0);
      if (x.is_exact_zero()) continue;
      if (x.val_lower_bound() < bv) {
        fail(ErrorCode::kPrecisionExhausted, "lattice basis: pivot not certified");
      }
      LocalElem mlt = x * pinv;
      for (int r = 0; r < n; ++r) c(r, 0) -= mlt * piv(r, 0);
      c(i, 0) = LocalElem::zero(gens.field());
    }
    basis.emplace_back(i, piv);
  }
  for (const Mat& c : cols) {
    if (!c.is_zero_within_precision()) {
      fail(ErrorCode::kPrecisionExhausted, "lattice basis: residual generator");
    }
  }
  std::sort(basis.begin(), basis.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Mat out(gens.field(), n, static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) out.set_block(0, static_cast<int>(c), basis[c].second);
  return out;
}

}  // namespace orbitale
