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

#include "orbitale/matspace.hpp"

#include <algorithm>

namespace orbitale {

const char* side_name(Side s) { return s == Side::kFJ ? "fj" : "bessel"; }

Side parse_side(const std::string& s) {
  if (s == "fj") return Side::kFJ;
  if (s == "bessel") return Side::kBessel;
  fail(ErrorCode::kParse, "side must be \"fj\" or \"bessel\", got \"" + s + "\"");
}

namespace {

void check_shape(Side side, int n, int m, int r) {
  if (m < 0 || r < 0 || n != central_size(side, m) + 2 * r) {
    fail(ErrorCode::kInvalidArgument,
         "inconsistent sizes n=" + std::to_string(n) + " m=" + std::to_string(m) +
             " r=" + std::to_string(r) + " for side " + side_name(side));
  }
}

void require_dims(const Mat& a, int rows, int cols, const char* what) {
  if (a.rows() != rows || a.cols() != cols) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " must be " + std::to_string(rows) + "x" +
             std::to_string(cols));
  }
}

LocalElem dot(const Mat& row, const Mat& col) {
  LocalElem s = LocalElem::zero(row.field());
  for (int i = 0; i < row.cols(); ++i) s += row(0, i) * col(i, 0);
  return s;
}

// Row operation row_i -= c * row_k on a.
void row_axpy(Mat& a, int i, int k, const LocalElem& c) {
  for (int j = 0; j < a.cols(); ++j) {
    if (!a(k, j).is_exact_zero()) a(i, j) -= c * a(k, j);
  }
}

// Column operation col_j -= c * col_k on a.
void col_axpy(Mat& a, int j, int k, const LocalElem& c) {
  for (int i = 0; i < a.rows(); ++i) {
    if (!a(i, k).is_exact_zero()) a(i, j) -= c * a(i, k);
  }
}

const LocalElem& certified_pivot(const LocalElem& p, const char* what) {
  if (p.is_certified_nonzero()) return p;
  if (p.is_exact_zero()) fail(ErrorCode::kNotPreRegular, what);
  fail(ErrorCode::kPrecisionExhausted, std::string(what) + " (not certified)");
}

}  // namespace

void SymOrbitDatum::validate() const {
  check_shape(side, n, m, r);
  require_dims(zeta, n, n, "zeta");
  if (!(zeta * zeta.tau()).agrees_with(Mat::identity(zeta.field(), n))) {
    fail(ErrorCode::kInvalidArgument, "zeta does not satisfy zeta*zeta^tau = 1");
  }
  if (side == Side::kFJ) {
    require_dims(x, 1, m, "x");
    require_dims(y, m, 1, "y");
    if (!x.in_base() || !y.in_base()) {
      fail(ErrorCode::kInvalidArgument, "x and y must have entries in k'");
    }
  }
}

Mat UniOrbitDatum::z_star() const { return inverse(beta) * z.conj_transpose(); }

Mat UniOrbitDatum::central_form() const {
  if (side == Side::kFJ) return beta;
  FieldPtr f = zeta.field();
  Mat c(f, m + 1, m + 1);
  c.set_block(0, 0, beta);
  c(m, m) = beta0.field() ? beta0 : LocalElem::one(f);
  return c;
}

Mat UniOrbitDatum::full_form() const {
  FieldPtr f = zeta.field();
  Mat full(f, n, n);
  for (int i = 0; i < r; ++i) {
    full(i, n - 1 - i) = LocalElem::one(f);
    full(n - 1 - i, i) = LocalElem::one(f);
  }
  full.set_block(r, r, central_form());
  return full;
}

void UniOrbitDatum::validate() const {
  check_shape(side, n, m, r);
  require_dims(zeta, n, n, "zeta");
  require_dims(beta, m, m, "beta");
  if (!beta.conj_transpose().agrees_with(beta)) {
    fail(ErrorCode::kInvalidArgument, "beta is not hermitian");
  }
  if (side == Side::kFJ) require_dims(z, 1, m, "z");
  Mat full = full_form();
  if (!(zeta.conj_transpose() * full * zeta).agrees_with(full)) {
    fail(ErrorCode::kInvalidArgument, "zeta is not unitary for the given form");
  }
}

bool OrbitInvariants::same_as(const OrbitInvariants& o) const {
  auto eq = [](const std::vector<LocalElem>& u, const std::vector<LocalElem>& v) {
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i)
      if (!u[i].agrees_with(v[i])) return false;
    return true;
  };
  return side == o.side && n == o.n && m == o.m && r == o.r && eq(t, o.t) &&
         eq(a, o.a) && eq(b, o.b) && delta.agrees_with(o.delta) &&
         delta_val == o.delta_val && T_val == o.T_val &&
         transfer_sign == o.transfer_sign && regular == o.regular;
}

std::vector<LocalElem> minors_s(const Mat& zeta, int r) {
  int n = zeta.rows();
  if (n != zeta.cols() || 2 * r > n) {
    fail(ErrorCode::kInvalidArgument, "minors_s: bad size");
  }
  std::vector<LocalElem> s;
  for (int i = 1; i <= r; ++i) s.push_back(det(zeta.block(n - i, 0, i, i)));
  return s;
}

NormalForm normal_form(const Mat& zeta, int central, int r, Space space) {
  int n = zeta.rows();
  if (n != zeta.cols() || n != central + 2 * r) {
    fail(ErrorCode::kInvalidArgument, "normal_form: bad size");
  }
  FieldPtr f = zeta.field();
  Mat z = zeta;
  Mat left = Mat::identity(f, n);   // accumulates u_left^{-1}
  Mat right = Mat::identity(f, n);  // accumulates the right factor

  // Outer stages: pivot at (n-1-k, k).
  for (int k = 0; k < r; ++k) {
    int pr = n - 1 - k;
    LocalElem pinv = certified_pivot(z(pr, k), "corner minor vanishes").inv();
    for (int i = 0; i < pr; ++i) {
      if (z(i, k).is_exact_zero()) continue;
      LocalElem c = z(i, k) * pinv;
      row_axpy(z, i, pr, c);
      row_axpy(left, i, pr, c);
      z(i, k) = LocalElem::zero(f);
    }
    for (int j = k + 1; j < n; ++j) {
      if (z(pr, j).is_exact_zero()) continue;
      LocalElem c = z(pr, j) * pinv;
      col_axpy(z, j, k, c);
      col_axpy(right, j, k, c);
      z(pr, j) = LocalElem::zero(f);
    }
  }

  // Clear the blocks beside the central block.
  if (central > 0 && r > 0) {
    Mat c = z.block(r, r, central, central);
    Mat ci;
    try {
      ci = inverse(c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kLinearSolveSingular) {
        fail(ErrorCode::kNotPreRegular, "central block is singular");
      }
      throw;
    }
    Mat y = z.block(0, r, r, central) * ci;
    Mat zt = z.block(0, 0, r, n) - y * z.block(r, 0, central, n);
    Mat lt = left.block(0, 0, r, n) - y * left.block(r, 0, central, n);
    z.set_block(0, 0, zt);
    left.set_block(0, 0, lt);
    z.set_block(0, r, Mat(f, r, central));
    Mat x = ci * z.block(r, n - r, central, r);
    Mat zl = z.block(0, n - r, n, r) - z.block(0, r, n, central) * x;
    Mat rl = right.block(0, n - r, n, r) - right.block(0, r, n, central) * x;
    z.set_block(0, n - r, zl);
    right.set_block(0, n - r, rl);
    z.set_block(r, n - r, Mat(f, central, r));
  }

  // Top-right r x r block to anti-diagonal form.
  for (int k = 0; k < r; ++k) {
    int pr = r - 1 - k, pc = n - r + k;
    LocalElem pinv = certified_pivot(z(pr, pc), "top-right block is degenerate").inv();
    for (int i = 0; i < pr; ++i) {
      if (z(i, pc).is_exact_zero()) continue;
      LocalElem c = z(i, pc) * pinv;
      row_axpy(z, i, pr, c);
      row_axpy(left, i, pr, c);
      z(i, pc) = LocalElem::zero(f);
    }
    for (int j = pc + 1; j < n; ++j) {
      if (z(pr, j).is_exact_zero()) continue;
      LocalElem c = z(pr, j) * pinv;
      col_axpy(z, j, pc, c);
      col_axpy(right, j, pc, c);
      z(pr, j) = LocalElem::zero(f);
    }
  }

  // Everything outside the normal-form pattern must now vanish.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool anti = (i < r || i >= n - r) && j == n - 1 - i;
      bool mid = i >= r && i < n - r && j >= r && j < n - r;
      if (anti || mid) continue;
      if (z(i, j).is_certified_nonzero()) {
        fail(ErrorCode::kInternal, "normal form elimination left a nonzero entry");
      }
      z(i, j) = LocalElem::zero(f);
    }
  }

  NormalForm out;
  for (int k = 0; k < r; ++k) out.t.push_back(z(k, n - 1 - k));
  out.pr = z.block(r, r, central, central);
  out.nf = z;
  out.u_left = inverse(left);
  if (space == Space::kSymmetric) {
    out.u_right = right.tau();
    out.twist_consistent = out.u_right.agrees_with(out.u_left);
  } else {
    out.u_right = right;
  }
  return out;
}

NormalForm normal_form(const Mat& zeta, int n, int m, int r, Side side, Space space) {
  check_shape(side, n, m, r);
  return normal_form(zeta, central_size(side, m), r, space);
}

Mat assemble_normal_form(const std::vector<LocalElem>& t, const Mat& pr) {
  FieldPtr f = pr.field();
  int r = static_cast<int>(t.size()), c = pr.rows(), n = c + 2 * r;
  Mat z(f, n, n);
  for (int k = 0; k < r; ++k) {
    z(k, n - 1 - k) = t[k];
    z(n - 1 - k, k) = t[k].tau().inv();
  }
  z.set_block(r, r, pr);
  return z;
}

std::vector<LocalElem> char_coefficients(const Mat& a) {
  int n = a.rows();
  std::vector<LocalElem> out;
  for (int i = 1; i <= n; ++i) {
    LocalElem s = LocalElem::zero(a.field());
    std::vector<int> pick(static_cast<size_t>(n), 0);
    std::fill(pick.end() - i, pick.end(), 1);
    do {
      std::vector<int> idx;
      for (int k = 0; k < n; ++k)
        if (pick[k]) idx.push_back(k);
      Mat sub(a.field(), i, i);
      for (int p = 0; p < i; ++p)
        for (int q = 0; q < i; ++q) sub(p, q) = a(idx[p], idx[q]);
      s += det(sub);
    } while (std::next_permutation(pick.begin(), pick.end()));
    out.push_back(s);
  }
  return out;
}

LocalElem discriminant_proxy(const Mat& a) {
  int n = a.rows();
  FieldPtr f = a.field();
  if (n <= 1) return LocalElem::one(f);
  std::vector<LocalElem> ac = char_coefficients(a);
  // f(t) coefficients from t^n down to t^0.
  std::vector<LocalElem> fc{LocalElem::one(f)};
  for (int i = 1; i <= n; ++i) fc.push_back(i % 2 ? -ac[i - 1] : ac[i - 1]);
  std::vector<LocalElem> dc;
  for (int i = 0; i < n; ++i) dc.push_back(fc[i] * LocalElem::from_int(f, n - i));
  int sz = 2 * n - 1;
  Mat syl(f, sz, sz);
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) syl(r, r + k) = fc[k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) syl(n - 1 + r, r + k) = dc[k];
  return det(syl);
}

namespace {

void note_irregular(OrbitInvariants& inv, const std::string& why) {
  inv.regular = false;
  if (inv.reason.empty()) inv.reason = why;
}

bool certified_nonzero_or_throw(const LocalElem& x) {
  if (x.is_certified_nonzero()) return true;
  if (x.is_exact_zero()) return false;
  fail(ErrorCode::kPrecisionExhausted, "cannot certify a regularity determinant");
}

}  // namespace

OrbitInvariants central_invariants_fj(const Mat& xi, const Mat& x, const Mat& y) {
  FieldPtr f = xi.field();
  int m = xi.rows();
  OrbitInvariants inv;
  inv.side = Side::kFJ;
  inv.m = m;
  inv.a = char_coefficients(xi);
  std::vector<Mat> rows{x};
  for (int k = 1; k <= std::max(0, 2 * m - 2); ++k) rows.push_back(rows.back() * xi);
  Mat kx(f, m, m), ky(f, m, m), dm(f, m, m);
  Mat col = y;
  for (int i = 0; i < m; ++i) {
    kx.set_block(i, 0, rows[i]);
    ky.set_block(0, i, col);
    col = xi * col;
    inv.b.push_back(dot(rows[i], y));
  }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) dm(i, k) = dot(rows[i + k], y);
  inv.T = det(kx);
  inv.delta = det(dm);
  inv.regular = true;
  if (!certified_nonzero_or_throw(inv.T)) note_irregular(inv, "x is not cyclic");
  if (!certified_nonzero_or_throw(det(ky))) note_irregular(inv, "y is not cyclic");
  if (!certified_nonzero_or_throw(inv.delta)) note_irregular(inv, "Delta vanishes");
  if (!certified_nonzero_or_throw(discriminant_proxy(xi))) {
    note_irregular(inv, "xi is not regular semisimple");
  }
  if (inv.regular) {
    inv.T_val = inv.T.valuation();
    inv.delta_val = inv.delta.valuation();
    inv.parity = ((inv.delta_val % 2) + 2) % 2;
  }
  return inv;
}

OrbitInvariants central_invariants_bessel(const Mat& xi) {
  FieldPtr f = xi.field();
  int c = xi.rows(), m = c - 1;
  OrbitInvariants inv;
  inv.side = Side::kBessel;
  inv.m = m;
  inv.a = char_coefficients(xi);
  Mat e = Mat(f, c, 1);
  e(m, 0) = LocalElem::one(f);
  Mat et = e.transpose();
  std::vector<Mat> rows{et};
  for (int k = 1; k <= 2 * m; ++k) rows.push_back(rows.back() * xi);
  Mat kx(f, c, c), ky(f, c, c), dm(f, c, c);
  Mat col = e;
  for (int i = 0; i < c; ++i) {
    // Columns ordered w_0, w_1, ..., w_m.
    kx(i, 0) = rows[i](0, m);
    for (int k = 0; k < m; ++k) kx(i, k + 1) = rows[i](0, k);
    ky.set_block(0, i, col);
    col = xi * col;
  }
  for (int i = 1; i <= m; ++i) inv.b.push_back(rows[i](0, m));
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < c; ++k) dm(i, k) = rows[i + k](0, m);
  inv.T = det(kx);
  inv.delta = det(dm);
  inv.regular = true;
  if (!certified_nonzero_or_throw(inv.T)) note_irregular(inv, "w_0 is not cyclic");
  if (!certified_nonzero_or_throw(det(ky))) note_irregular(inv, "w_0 is not cyclic");
  if (!certified_nonzero_or_throw(inv.delta)) note_irregular(inv, "Delta vanishes");
  if (!certified_nonzero_or_throw(discriminant_proxy(xi))) {
    note_irregular(inv, "xi is not regular semisimple");
  }
  if (inv.regular) {
    inv.T_val = inv.T.valuation();
    inv.delta_val = inv.delta.valuation();
    inv.parity = ((inv.delta_val % 2) + 2) % 2;
  }
  return inv;
}

int transfer_sign(Side side, int m, int T_val, const std::vector<LocalElem>& t) {
  int e = T_val;
  bool with_t = (side == Side::kFJ) ? (m % 2 == 0) : (m % 2 == 1);
  if (with_t) {
    for (const LocalElem& ti : t) e += ti.valuation();
  }
  return (e % 2 == 0) ? 1 : -1;
}

namespace {

OrbitInvariants finish(OrbitInvariants inv, const NormalForm& nf, Side side, int n,
                       int m, int r, bool allow_irregular) {
  inv.side = side;
  inv.n = n;
  inv.m = m;
  inv.r = r;
  inv.t = nf.t;
  if (inv.regular) inv.transfer_sign = transfer_sign(side, m, inv.T_val, inv.t);
  if (!inv.regular && !allow_irregular) fail(ErrorCode::kNotRegular, inv.reason);
  return inv;
}

}  // namespace

OrbitInvariants invariants(const SymOrbitDatum& d, bool allow_irregular) {
  d.validate();
  NormalForm nf = normal_form(d.zeta, d.n, d.m, d.r, d.side, Space::kSymmetric);
  OrbitInvariants inv = d.side == Side::kFJ ? central_invariants_fj(nf.pr, d.x, d.y)
                                            : central_invariants_bessel(nf.pr);
  return finish(std::move(inv), nf, d.side, d.n, d.m, d.r, allow_irregular);
}

OrbitInvariants invariants(const UniOrbitDatum& d, bool allow_irregular) {
  d.validate();
  NormalForm nf = normal_form(d.zeta, d.n, d.m, d.r, d.side, Space::kUnitary);
  OrbitInvariants inv = d.side == Side::kFJ
                            ? central_invariants_fj(nf.pr, d.z, d.z_star())
                            : central_invariants_bessel(nf.pr);
  return finish(std::move(inv), nf, d.side, d.n, d.m, d.r, allow_irregular);
}

Membership membership(const Mat& zeta, const Mat& beta_full) {
  Membership mb;
  int n = zeta.rows();
  FieldPtr f = zeta.field();
  mb.in_S = (zeta * zeta.tau()).agrees_with(Mat::identity(f, n));
  mb.in_S_integral = mb.in_S && zeta.is_integral();
  if (!beta_full.empty()) {
    mb.in_U = (zeta.conj_transpose() * beta_full * zeta).agrees_with(beta_full);
    if (mb.in_U && zeta.is_integral()) {
      LocalElem d = det(zeta);
      mb.in_U_integral = d.is_certified_nonzero() && d.valuation() == 0;
    }
  }
  return mb;
}

bool in_unipotent(const Mat& u, int central, int r) {
  int n = u.rows();
  auto block_of = [&](int i) {
    if (i < r) return i;
    if (i < r + central) return r;
    return i - central + 1;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const LocalElem& x = u(i, j);
      int bi = block_of(i), bj = block_of(j);
      if (bi > bj && !x.is_zero_within_precision()) return false;
      if (bi == bj) {
        bool want_one = i == j;
        if (want_one ? !x.agrees_with(LocalElem::one(u.field()))
                     : !x.is_zero_within_precision()) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace orbitale
