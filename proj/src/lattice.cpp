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

#include "orbitale/lattice.hpp"

#include "orbitale/matspace.hpp"

namespace orbitale {

namespace {

// F_q coordinates of (+) o/pi^{d_i}: index off[i] + width * k + c for the
// basis element c-th scalar times pi^k e_i, where the scalars are 1 (and
// j when width = 2).
struct Layout {
  std::vector<int> d;
  int width = 1;
  std::vector<int> off;
  int dim = 0;

  Layout(std::vector<int> d_, int width_) : d(std::move(d_)), width(width_) {
    for (int di : d) {
      off.push_back(dim);
      dim += width * di;
    }
  }
};

LocalElem scalar(const FieldPtr& f, int c) {
  return c == 0 ? LocalElem::one(f) : LocalElem::j(f);
}

// The operator with matrix A on z-coordinates, as an F_q matrix.
FqMat to_fq(const Mat& a, const Layout& lay) {
  FieldPtr f = a.field();
  int n = a.rows();
  FqMat out(f->q(), lay.dim, lay.dim);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // A must map pi^{d_j} e_j into pi^{d_i} o.
      for (int l = 0; l < lay.d[i]; ++l) {
        Digit dg = a(i, j).digit_at(l - lay.d[j]);
        if (dg.u || dg.v) {
          fail(ErrorCode::kInternal, "operator does not preserve the lattice");
        }
      }
    }
    for (int k = 0; k < lay.d[j]; ++k) {
      for (int c = 0; c < lay.width; ++c) {
        int col = lay.off[j] + lay.width * k + c;
        for (int i = 0; i < n; ++i) {
          LocalElem x = (a(i, j) * scalar(f, c)).shift(k);
          if (x.is_certified_nonzero() && x.valuation() < 0) {
            fail(ErrorCode::kInternal, "operator is not integral");
          }
          for (int l = 0; l < lay.d[i]; ++l) {
            Digit dg = x.digit_at(l);
            int row = lay.off[i] + lay.width * l;
            out(row, col) = dg.u;
            if (lay.width == 2) {
              out(row + 1, col) = dg.v;
            } else if (dg.v) {
              fail(ErrorCode::kInternal, "operator is not defined over o'");
            }
          }
        }
      }
    }
  }
  return out;
}

// F_q form (x, y) -> residue of the pi^{-1} coefficient of x^t H tau(y).
FqMat pairing_to_fq(const Mat& h, const Layout& lay) {
  FieldPtr f = h.field();
  int n = h.rows();
  FqMat out(f->q(), lay.dim, lay.dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < lay.d[i]; ++k) {
        for (int l = 0; l < lay.d[j]; ++l) {
          for (int c1 = 0; c1 < lay.width; ++c1) {
            for (int c2 = 0; c2 < lay.width; ++c2) {
              LocalElem x = (scalar(f, c1) * h(i, j) * scalar(f, c2).tau()).shift(k + l);
              out(lay.off[i] + lay.width * k + c1, lay.off[j] + lay.width * l + c2) =
                  x.digit_at(-1).u;
            }
          }
        }
      }
    }
  }
  return out;
}

Mat column_power(const Mat& c, int k) {
  Mat v(c.field(), c.rows(), 1);
  v(0, 0) = LocalElem::one(c.field());
  for (int i = 0; i < k; ++i) v = c * v;
  return v;
}

Mat base_part(const Mat& a, const char* what) {
  Mat a0, a1;
  a.split(&a0, &a1);
  if (!a1.is_zero_within_precision()) fail(ErrorCode::kDescentFails, what);
  return a0;
}

}  // namespace

Mat FiniteOAlgebra::mult(const Mat& u) const {
  Mat out(field, n, n);
  Mat pw = Mat::identity(field, n);
  for (int i = 0; i < n; ++i) {
    if (!u(i, 0).is_exact_zero()) out = out + pw.scaled(u(i, 0));
    pw = pw * C;
  }
  return out;
}

FiniteOAlgebra build_algebra(const FieldPtr& f, const std::vector<LocalElem>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) fail(ErrorCode::kInvalidArgument, "empty coefficient list");
  for (const auto& x : a) {
    if (!x.is_integral()) fail(ErrorCode::kInvalidArgument, "coefficients must be integral");
  }
  if (!a[n - 1].is_unit()) fail(ErrorCode::kInvalidArgument, "a_n must be a unit");
  // tau(a_k) = tau(a_n) a_{n-k} and a_n tau(a_n) = 1.
  LocalElem an_tau = a[n - 1].tau();
  if (!(a[n - 1] * an_tau).agrees_with(LocalElem::one(f))) {
    fail(ErrorCode::kNotThetaStable, "a_n * tau(a_n) != 1");
  }
  for (int k = 1; k < n; ++k) {
    if (!a[k - 1].tau().agrees_with(an_tau * a[n - k - 1])) {
      fail(ErrorCode::kNotThetaStable,
           "tau(a_" + std::to_string(k) + ") != tau(a_n) a_" + std::to_string(n - k));
    }
  }

  FiniteOAlgebra alg;
  alg.field = f;
  alg.n = n;
  alg.a = a;
  alg.C = Mat(f, n, n);
  for (int i = 0; i + 1 < n; ++i) alg.C(i + 1, i) = LocalElem::one(f);
  // t^n = sum_k (-1)^{k+1} a_k t^{n-k}.
  for (int k = 1; k <= n; ++k) alg.C(n - k, n - 1) = k % 2 == 1 ? a[k - 1] : -a[k - 1];
  alg.C_inv = inverse(alg.C);

  alg.theta = Mat(f, n, n);
  for (int i = 0; i < n; ++i) alg.theta.set_block(0, i, column_power(alg.C_inv, i));
  Mat id = Mat::identity(f, n);
  if (!(alg.theta * alg.theta.tau()).agrees_with(id) ||
      !(alg.theta * alg.C.tau()).agrees_with(alg.C_inv * alg.theta)) {
    fail(ErrorCode::kNotThetaStable, "theta is not a ring involution");
  }

  // Fixed points are the image of 1 + theta on the o-basis {t^i, j t^i},
  // spanned over o' in coordinates (u0, u1) with u = u0 + j u1.
  Mat gens(f, n, 2 * n);
  LocalElem jj = LocalElem::j(f);
  for (int i = 0; i < n; ++i) {
    Mat th = alg.theta.col(i);
    gens.set_block(0, 2 * i, id.col(i) + th);
    gens.set_block(0, 2 * i + 1, (id.col(i) - th).scaled(jj));
  }
  Mat g0, g1;
  gens.split(&g0, &g1);
  Mat stacked(f, 2 * n, 2 * n);
  stacked.set_block(0, 0, g0);
  stacked.set_block(n, 0, g1);
  Mat basis = lattice_basis(stacked);
  if (basis.cols() != n) {
    fail(ErrorCode::kPrecisionExhausted, "o'-form does not have rank n");
  }
  // Make each pivot a power of pi.
  for (int c = 0; c < n; ++c) {
    int r = 2 * n - 1;
    while (r > 0 && !basis(r, c).is_certified_nonzero()) --r;
    const LocalElem& x = basis(r, c);
    LocalElem u = x.shift(-x.valuation()).inv();
    for (int i = 0; i < 2 * n; ++i) basis(i, c) = basis(i, c) * u;
  }
  alg.form = basis.block(0, 0, n, n) + basis.block(n, 0, n, n).scaled(jj);
  LocalElem de = det(alg.form);
  if (!de.is_unit() || !(alg.theta * alg.form.tau()).agrees_with(alg.form)) {
    fail(ErrorCode::kPrecisionExhausted, "o'-form basis not certified");
  }
  return alg;
}

GramData build_gram(const FiniteOAlgebra& alg, const std::vector<LocalElem>& b) {
  FieldPtr f = alg.field;
  int n = alg.n;
  if (static_cast<int>(b.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "b must have n entries");
  }
  for (const auto& x : b) {
    if (!x.is_integral()) fail(ErrorCode::kInvalidArgument, "b must be integral");
  }
  GramData g;
  g.b = b;
  Mat brow = Mat::row_vector(f, b);
  for (int i = 0; i < n; ++i) {
    LocalElem bt = (brow * alg.theta.col(i))(0, 0);
    if (!bt.agrees_with(b[i].tau())) {
      fail(ErrorCode::kDescentFails, "b(theta(t^" + std::to_string(i) + ")) != tau(b_" +
                                         std::to_string(i) + ")");
    }
  }
  std::vector<Mat> pw;
  for (int k = 0; k <= 2 * n - 2; ++k) pw.push_back(column_power(alg.C, k));
  g.D = Mat(f, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.D(i, j) = (brow * pw[i + j])(0, 0);
  }
  g.gram = base_part(alg.form.transpose() * g.D * alg.form, "Gram matrix is not over o'");
  g.snf = smith_form(g.gram);
  if (g.snf.rank < n) fail(ErrorCode::kDegenerateGram, "Delta_{a,b} = 0");
  g.d = 0;
  for (int x : g.snf.d) g.d += x;
  return g;
}

FinModule quotient_M(const FiniteOAlgebra& alg, const GramData& g) {
  FieldPtr f = alg.field;
  int n = alg.n;
  Layout lay(g.snf.d, 1);
  Mat P = base_part(g.snf.P, "Smith transform is not over o'");
  Mat Pinv = inverse(P);
  Mat Einv = inverse(alg.form);
  std::vector<FqMat> ops;
  for (int k = 0; k < n; ++k) {
    Mat m = base_part(Einv * alg.mult(alg.form.col(k)) * alg.form,
                      "R_a is not closed under multiplication");
    ops.push_back(to_fq(P * m.transpose() * Pinv, lay));
  }
  FqMat pi = to_fq(Mat::identity(f, n).shift(1), lay);
  FinModule q(f->q(), lay.dim, pi, std::move(ops));
  q.set_pairing(pairing_to_fq(Pinv.transpose() * inverse(g.gram) * Pinv, lay));
  return q;
}

FinModule quotient_N(const FiniteOAlgebra& alg, const GramData& g) {
  FieldPtr f = alg.field;
  int n = alg.n;
  Smith s = smith_form(g.D);
  Layout lay(s.d, 2);
  Mat Pinv = inverse(s.P);
  std::vector<FqMat> ops;
  ops.push_back(to_fq(s.P * alg.C.transpose() * Pinv, lay));
  ops.push_back(to_fq(Mat::identity(f, n).scaled(LocalElem::j(f)), lay));
  FqMat pi = to_fq(Mat::identity(f, n).shift(1), lay);
  FinModule q(f->q(), lay.dim, pi, std::move(ops));
  Mat h = Pinv.transpose() * alg.theta * inverse(g.D.tau()) * Pinv.tau();
  q.set_pairing(pairing_to_fq(h, lay));
  return q;
}

uint64_t count_M(const FiniteOAlgebra& alg, const GramData& g, int i, uint64_t cap) {
  if (i < 0 || i > g.d) fail(ErrorCode::kInvalidArgument, "colength out of range");
  FinModule q = quotient_M(alg, g);
  uint64_t c = 0;
  for (const auto& s : enumerate_stable_submodules(q, cap)) {
    if (q.dim() - s.dim() == i) ++c;
  }
  return c;
}

uint64_t count_N(const FiniteOAlgebra& alg, const GramData& g, uint64_t cap) {
  if (g.d % 2 != 0) return 0;
  FinModule q = quotient_N(alg, g);
  uint64_t c = 0;
  for (const auto& s : enumerate_stable_submodules(q, cap)) {
    if (s.dim() * 2 == q.dim() && dual_submodule(q, s) == s) ++c;
  }
  return c;
}

LatticeCounts count_lattices(const FiniteOAlgebra& alg, const GramData& g, uint64_t cap) {
  LatticeCounts out;
  out.d = g.d;
  out.M.assign(g.d + 1, 0);
  FinModule q = quotient_M(alg, g);
  for (const auto& s : enumerate_stable_submodules(q, cap)) ++out.M[q.dim() - s.dim()];
  for (int i = 0; i <= g.d; ++i) {
    out.alt_sum += (i % 2 == 0 ? 1 : -1) * static_cast<int64_t>(out.M[i]);
  }
  out.N = count_N(alg, g, cap);
  out.identity_holds = out.alt_sum == static_cast<int64_t>(out.N);
  return out;
}

void lattice_input(const OrbitInvariants& inv, std::vector<LocalElem>* a,
                   std::vector<LocalElem>* b) {
  if (inv.side != Side::kFJ) {
    fail(ErrorCode::kInvalidArgument, "lattice counts use Fourier-Jacobi invariants");
  }
  *a = inv.a;
  *b = inv.b;
}

}  // namespace orbitale
