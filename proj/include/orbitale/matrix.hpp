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

#ifndef ORBITALE_MATRIX_HPP_
#define ORBITALE_MATRIX_HPP_

#include <string>
#include <vector>

#include "orbitale/field.hpp"

namespace orbitale {

// Dense matrix over k with truncated entries.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, int rows, int cols);
  static Mat identity(FieldPtr f, int n);
  static Mat from_rows(FieldPtr f, const std::vector<std::vector<LocalElem>>& rows);
  static Mat row_vector(FieldPtr f, const std::vector<LocalElem>& v);
  static Mat col_vector(FieldPtr f, const std::vector<LocalElem>& v);
  static Mat diag(FieldPtr f, const std::vector<LocalElem>& v);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  LocalElem& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const LocalElem& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const LocalElem& c) const;
  Mat shift(int k) const;
  Mat transpose() const;
  Mat tau() const;
  Mat conj_transpose() const { return transpose().tau(); }
  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& b);
  Mat row(int i) const { return block(i, 0, 1, cols_); }
  Mat col(int j) const { return block(0, j, rows_, 1); }
  Mat with_field(FieldPtr f) const;

  // Minimum certified lower bound of entry valuations.
  int val_lower_bound() const;
  bool is_zero_within_precision() const;
  bool agrees_with(const Mat& o) const;
  bool is_integral() const;
  bool in_base() const;
  // Split A = A0 + j*A1 with A0, A1 over k'.
  void split(Mat* a0, Mat* a1) const;
  bool operator==(const Mat& o) const;

  std::vector<std::vector<std::string>> render() const;

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LocalElem> a_;
};

Mat power(const Mat& a, int e);

// Determinant: Leibniz expansion for n <= 4 (division free, keeps exact
// entries exact), pivoted elimination otherwise.
LocalElem det(const Mat& a);
LocalElem det_elimination(const Mat& a);
Mat inverse(const Mat& a);

// Unique solution X of A X = B for A with full column rank; extra rows
// must be consistent.  Raises LinearSolveSingular otherwise.
Mat solve_unique(const Mat& a, const Mat& b);

// Kernel dimension over k, certified.
int rank(const Mat& a);

// P A Qm = diag(pi^d_0, ..., pi^d_{n-1}) over the integers of k (or k'
// when A is over k'); P and Qm are unimodular.
struct Smith {
  Mat P;
  Mat Qm;
  std::vector<int> d;
  int rank = 0;
};
Smith smith_form(const Mat& a);

// Basis (as columns) of the integral lattice spanned by the columns of
// `gens`.  Multipliers are ratios of entries, so generators over k' give
// the o'-span.
Mat lattice_basis(const Mat& gens);

}  // namespace orbitale

#endif  // ORBITALE_MATRIX_HPP_
