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

// Orbit matching between the symmetric space and unitary groups.

#ifndef ORBITALE_MATCHING_HPP_
#define ORBITALE_MATCHING_HPP_

#include "orbitale/matspace.hpp"

namespace orbitale {

struct HermClass {
  Mat beta;
  int epsilon = 1;
};

enum class MatchDirection { kSymToUni, kUniToSym };

struct MatchCertificate {
  Mat g;
  MatchDirection direction = MatchDirection::kSymToUni;
  bool verified = false;
};

// eta((-1)^{m(m-1)/2} det beta); beta must be hermitian and invertible.
int herm_class_of(const Mat& beta);
// +1 iff val(Delta) is even.
int parity_class(const SymOrbitDatum& d);

// g with g * (g^tau)^{-1} = s, built as g = lambda s + lambda^tau for the
// first lambda in a fixed list giving an invertible g (unit determinant
// preferred).
Mat hilbert90(const Mat& s);
// The candidate list, in search order.
std::vector<LocalElem> hilbert90_candidates(const FieldPtr& f);

struct SymToUni {
  HermClass cls;
  UniOrbitDatum uni;
  MatchCertificate cert;
};
SymToUni match_sym_to_uni(const SymOrbitDatum& d);

struct UniToSym {
  SymOrbitDatum sym;
  MatchCertificate cert;
};
UniToSym match_uni_to_sym(const UniOrbitDatum& d);

// The central linear systems, exposed for tests.  FJ: g with
// g^{-1} xi g = xi^t, x g = y^t, g^{-1} y = x^t.
Mat solve_fj_system(const Mat& xi, const Mat& x, const Mat& y);
// Bessel: g (m x m) with diag(g,1)^{-1} xi diag(g,1) = xi^t.
Mat solve_bessel_system(const Mat& xi);

}  // namespace orbitale

#endif  // ORBITALE_MATCHING_HPP_
