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

// Symmetric-space and unitary orbit data: normal forms, invariants,
// membership and transfer signs.

#ifndef ORBITALE_MATSPACE_HPP_
#define ORBITALE_MATSPACE_HPP_

#include <string>
#include <vector>

#include "orbitale/matrix.hpp"

namespace orbitale {

enum class Side { kFJ, kBessel };
enum class Space { kSymmetric, kUnitary };

const char* side_name(Side s);
Side parse_side(const std::string& s);

// Size of the central block: m (FJ) or m + 1 (Bessel).
inline int central_size(Side side, int m) { return side == Side::kFJ ? m : m + 1; }

// Basis order v_1..v_r, w_1..w_m[, w_0], v^_r..v^_1.
struct SymOrbitDatum {
  Side side = Side::kFJ;
  int n = 0, m = 0, r = 0;
  Mat zeta;  // n x n, zeta * zeta^tau = 1
  Mat x;     // 1 x m over k' (FJ only)
  Mat y;     // m x 1 over k' (FJ only)

  void validate() const;
};

struct UniOrbitDatum {
  Side side = Side::kFJ;
  int n = 0, m = 0, r = 0;
  Mat beta;  // m x m hermitian form on W
  LocalElem beta0;  // Bessel only: value of the form on w_0
  Mat zeta;  // n x n, unitary for full_form()
  Mat z;     // 1 x m (FJ only)

  Mat z_star() const;  // beta^{-1} * transpose(z)^tau
  Mat central_form() const;
  Mat full_form() const;
  void validate() const;
};

struct OrbitInvariants {
  Side side = Side::kFJ;
  int n = 0, m = 0, r = 0;
  std::vector<LocalElem> t;  // t_1..t_r
  std::vector<LocalElem> a;  // a_1..a_m (FJ), a_1..a_{m+1} (Bessel)
  std::vector<LocalElem> b;  // b_0..b_{m-1} (FJ), b_1..b_m (Bessel)
  LocalElem delta;
  LocalElem T;
  int delta_val = 0;
  int T_val = 0;
  int parity = 0;
  int transfer_sign = 1;
  bool regular = false;
  std::string reason;  // why not regular

  // t, a, b and delta agree entrywise; T agrees in valuation.
  bool same_as(const OrbitInvariants& o) const;
};

// s_i = det(zeta restricted to the first i columns and the last i rows).
std::vector<LocalElem> minors_s(const Mat& zeta, int r);

struct NormalForm {
  std::vector<LocalElem> t;
  Mat pr;
  Mat u_left;
  Mat u_right;
  Mat nf;
  // Symmetric space: the twisted right factor equals the left factor.
  bool twist_consistent = true;
};

// u_left^{-1} zeta u_right^{tau} = nf (symmetric space) or
// u_left^{-1} zeta u_right = nf (unitary); u_left, u_right block upper
// unitriangular for the blocks 1^r, central, 1^r.
NormalForm normal_form(const Mat& zeta, int central, int r, Space space);
NormalForm normal_form(const Mat& zeta, int n, int m, int r, Side side, Space space);

// Assembles the normal-form shape from t_1..t_r and a central block.
Mat assemble_normal_form(const std::vector<LocalElem>& t, const Mat& pr);

// Characteristic coefficients: det(X - A) = X^n - a_1 X^{n-1} + ... .
std::vector<LocalElem> char_coefficients(const Mat& a);
// Nonzero iff the characteristic polynomial is separable.
LocalElem discriminant_proxy(const Mat& a);

// Invariants of the central data.  FJ: [xi, x, y]; Bessel: xi.
OrbitInvariants central_invariants_fj(const Mat& xi, const Mat& x, const Mat& y);
OrbitInvariants central_invariants_bessel(const Mat& xi);

// Raises NotPreRegular / NotRegular unless allow_irregular is set, in
// which case regular = false and reason is filled for the Krylov and
// discriminant conditions.
OrbitInvariants invariants(const SymOrbitDatum& d, bool allow_irregular = false);
OrbitInvariants invariants(const UniOrbitDatum& d, bool allow_irregular = false);

int transfer_sign(Side side, int m, int T_val, const std::vector<LocalElem>& t);

struct Membership {
  bool in_S = false;
  bool in_S_integral = false;
  bool in_U = false;
  bool in_U_integral = false;
};
// beta_full may be empty, in which case the unitary flags stay false.
Membership membership(const Mat& zeta, const Mat& beta_full);

// Block upper unitriangular group for the blocks 1^r, central, 1^r.
bool in_unipotent(const Mat& u, int central, int r);

}  // namespace orbitale

#endif  // ORBITALE_MATSPACE_HPP_
