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

#include "orbitale/matching.hpp"

namespace orbitale {

namespace {

// Unknown g(i, k) lives at column i * m + k.
int var(int m, int i, int k) { return i * m + k; }

// Rows for A g - g A^t = 0.
void add_commutator_rows(const Mat& a, int m, Mat& sys, int& row) {
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q, ++row) {
      for (int k = 0; k < m; ++k) {
        sys(row, var(m, k, q)) += a(p, k);
        sys(row, var(m, p, k)) -= a(q, k);
      }
    }
  }
}

// Rows for u g = v^t (u a row, v a column) and g u^t = v.
void add_vector_rows(const Mat& u, const Mat& v, int m, Mat& sys, Mat& rhs, int& row) {
  for (int q = 0; q < m; ++q, ++row) {
    for (int k = 0; k < m; ++k) sys(row, var(m, k, q)) = u(0, k);
    rhs(row, 0) = v(q, 0);
  }
  for (int p = 0; p < m; ++p, ++row) {
    for (int k = 0; k < m; ++k) sys(row, var(m, p, k)) = u(0, k);
    rhs(row, 0) = v(p, 0);
  }
}

Mat unvec(const Mat& sol, int m) {
  Mat g(sol.field(), m, m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) g(i, k) = sol(var(m, i, k), 0);
  }
  return g;
}

Mat solve_system(const Mat& a, const Mat& u, const Mat& v) {
  FieldPtr f = a.field();
  int m = a.rows();
  Mat sys(f, m * m + 2 * m, m * m);
  Mat rhs(f, m * m + 2 * m, 1);
  int row = 0;
  add_commutator_rows(a, m, sys, row);
  add_vector_rows(u, v, m, sys, rhs, row);
  return unvec(solve_unique(sys, rhs), m);
}

Mat embed_bessel(const Mat& g) {
  int m = g.rows();
  Mat big = Mat::identity(g.field(), m + 1);
  big.set_block(0, 0, g);
  return big;
}

void require_regular(const OrbitInvariants& inv) {
  if (!inv.regular) fail(ErrorCode::kNotRegular, "datum is not regular: " + inv.reason);
}

}  // namespace

Mat solve_fj_system(const Mat& xi, const Mat& x, const Mat& y) {
  if (xi.rows() == 0) return Mat(xi.field(), 0, 0);
  return solve_system(xi, x, y);
}

Mat solve_bessel_system(const Mat& xi) {
  int m = xi.rows() - 1;
  if (m == 0) return Mat(xi.field(), 0, 0);
  // g^{-1} b = c^t and c g = b^t for b the last column and c the last row.
  return solve_system(xi.block(0, 0, m, m), xi.block(m, 0, 1, m), xi.block(0, m, m, 1));
}

int herm_class_of(const Mat& beta) {
  if (beta.rows() == 0) return 1;
  if (!beta.conj_transpose().agrees_with(beta)) {
    fail(ErrorCode::kInvalidArgument, "beta is not hermitian");
  }
  LocalElem d = det(beta);
  if (d.is_exact_zero()) fail(ErrorCode::kInvalidArgument, "beta is degenerate");
  if (!d.is_certified_nonzero()) {
    fail(ErrorCode::kPrecisionExhausted, "det beta is not certified nonzero");
  }
  // (-1)^{m(m-1)/2} is a unit, and eta is trivial on units.
  return d.eta();
}

int parity_class(const SymOrbitDatum& d) {
  OrbitInvariants inv = invariants(d);
  return inv.delta_val % 2 == 0 ? 1 : -1;
}

std::vector<LocalElem> hilbert90_candidates(const FieldPtr& f) {
  uint16_t half = static_cast<uint16_t>((f->q() + 1) / 2);
  std::vector<LocalElem> out;
  out.push_back(LocalElem::from_digit(f, {half, 0}));
  out.push_back(LocalElem::j(f));
  for (uint32_t c = 1; c < f->q(); ++c) {
    out.push_back(LocalElem::from_digit(f, {half, static_cast<uint16_t>(c)}));
  }
  out.push_back(LocalElem::from_digit(f, {half, 0}) + LocalElem::j(f) * LocalElem::pi_power(f, 1));
  return out;
}

Mat hilbert90(const Mat& s) {
  FieldPtr f = s.field();
  int m = s.rows();
  if (m == 0) return Mat(f, 0, 0);
  Mat id = Mat::identity(f, m);
  if (!(s * s.tau()).agrees_with(id)) {
    fail(ErrorCode::kInvalidArgument, "hilbert90 needs s * s^tau = 1");
  }
  Mat best;
  int best_val = 0;
  for (const LocalElem& lambda : hilbert90_candidates(f)) {
    Mat g = s.scaled(lambda) + id.scaled(lambda.tau());
    LocalElem d = det(g);
    if (!d.is_certified_nonzero()) continue;
    int v = d.valuation();
    if (best.empty() || v < best_val) {
      best = g;
      best_val = v;
    }
  }
  if (best.empty()) fail(ErrorCode::kDegenerate, "every Hilbert 90 candidate is singular");
  if (!(best * inverse(best.tau())).agrees_with(s)) {
    fail(ErrorCode::kPrecisionExhausted, "Hilbert 90 identity not certified");
  }
  return best;
}

SymToUni match_sym_to_uni(const SymOrbitDatum& d) {
  OrbitInvariants inv = invariants(d, true);
  require_regular(inv);
  FieldPtr f = d.zeta.field();
  NormalForm nf = normal_form(d.zeta, d.n, d.m, d.r, d.side, Space::kSymmetric);
  const Mat& xi = nf.pr;

  SymToUni out;
  out.cert.direction = MatchDirection::kSymToUni;
  Mat g;
  bool ok = true;
  if (d.side == Side::kFJ) {
    g = solve_fj_system(xi, d.x, d.y);
    if (d.m > 0) {
      Mat gi = inverse(g);
      ok = (gi * xi * g).agrees_with(xi.transpose()) && (d.x * g).agrees_with(d.y.transpose()) &&
           (gi * d.y).agrees_with(d.x.transpose());
    }
  } else {
    g = solve_bessel_system(xi);
    if (d.m > 0) {
      Mat big = embed_bessel(g);
      ok = (inverse(big) * xi * big).agrees_with(xi.transpose());
    }
  }
  out.cert.g = g;

  UniOrbitDatum& u = out.uni;
  u.side = d.side;
  u.n = d.n;
  u.m = d.m;
  u.r = d.r;
  u.beta = d.m > 0 ? inverse(g) : Mat(f, 0, 0);
  u.beta0 = LocalElem::one(f);
  u.zeta = nf.nf;
  if (u.side == Side::kFJ) u.z = d.x;

  ok = ok && u.beta.conj_transpose().agrees_with(u.beta);
  Mat full = u.full_form();
  ok = ok && (u.zeta.conj_transpose() * full * u.zeta).agrees_with(full);
  out.cert.verified = ok;
  out.cls.beta = u.beta;
  out.cls.epsilon = herm_class_of(u.beta);
  return out;
}

UniToSym match_uni_to_sym(const UniOrbitDatum& d) {
  OrbitInvariants inv = invariants(d, true);
  require_regular(inv);
  FieldPtr f = d.zeta.field();
  NormalForm nf = normal_form(d.zeta, d.n, d.m, d.r, d.side, Space::kUnitary);
  const Mat& xi = nf.pr;

  UniToSym out;
  out.cert.direction = MatchDirection::kUniToSym;
  SymOrbitDatum& s = out.sym;
  s.side = d.side;
  s.n = d.n;
  s.m = d.m;
  s.r = d.r;

  bool ok = true;
  Mat xi_sym;
  if (d.m == 0) {
    out.cert.g = Mat(f, 0, 0);
    xi_sym = xi;
    if (d.side == Side::kFJ) {
      s.x = Mat(f, 1, 0);
      s.y = Mat(f, 0, 1);
    }
  } else if (d.side == Side::kFJ) {
    Mat zs = d.z_star();
    Mat gamma = solve_fj_system(xi, d.z, zs);
    Mat h = hilbert90(gamma * d.beta.tau());
    Mat hi = inverse(h);
    xi_sym = hi * xi * h;
    s.x = d.z * h;
    s.y = hi * zs;
    ok = s.x.in_base() && s.y.in_base();
    out.cert.g = h;
  } else {
    Mat gamma = solve_bessel_system(xi);
    LocalElem b0 = d.beta0.field() ? d.beta0 : LocalElem::one(f);
    Mat h = hilbert90((gamma * d.beta.tau()).scaled(b0.inv()));
    Mat big = embed_bessel(h);
    xi_sym = inverse(big) * xi * big;
    out.cert.g = h;
  }
  s.zeta = assemble_normal_form(nf.t, xi_sym);
  ok = ok && (s.zeta * s.zeta.tau()).agrees_with(Mat::identity(f, s.n));
  out.cert.verified = ok;
  if (!ok) fail(ErrorCode::kPrecisionExhausted, "matched symmetric datum not certified");
  return out;
}

}  // namespace orbitale
