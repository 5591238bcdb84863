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

// The algebra R_a = o[t, t^{-1}]/(f), its theta-fixed o'-form, the Gram
// map of the functional t^i -> b_i, and lattice counts between R_a and
// its dual.

#ifndef ORBITALE_LATTICE_HPP_
#define ORBITALE_LATTICE_HPP_

#include <cstdint>
#include <vector>

#include "orbitale/finmodule.hpp"
#include "orbitale/matrix.hpp"

namespace orbitale {

struct OrbitInvariants;

struct FiniteOAlgebra {
  FieldPtr field;
  int n = 0;
  std::vector<LocalElem> a;  // a_1..a_n
  Mat C;      // multiplication by t on 1, t, ..., t^{n-1}
  Mat C_inv;  // multiplication by t^{-1}
  Mat theta;  // theta(u) = theta * tau(u) in monomial coordinates
  Mat form;   // columns: an o'-basis of the theta-fixed subring

  // Multiplication matrix of the element with monomial coordinates u.
  Mat mult(const Mat& u) const;
};

// Raises InvalidArgument unless every a_i is integral and a_n is a unit,
// NotThetaStable when theta does not preserve the ideal (f).
FiniteOAlgebra build_algebra(const FieldPtr& f, const std::vector<LocalElem>& a);

struct GramData {
  std::vector<LocalElem> b;  // b_0..b_{n-1}
  Mat D;     // b(t^{i+j}) on the monomial basis
  Mat gram;  // b(e_k e_l) on the o'-form basis
  Smith snf;
  int d = 0;  // sum of the elementary divisors = val det
};

// Raises DescentFails when b(theta u) != tau(b(u)) on the basis,
// DegenerateGram when det D = 0.
GramData build_gram(const FiniteOAlgebra& alg, const std::vector<LocalElem>& b);

// R_a^dual / R_a over o' with the R_a-action and the pairing b(uv).
FinModule quotient_M(const FiniteOAlgebra& alg, const GramData& g);
// The same quotient for R_{a,o} over o, with t, j and the hermitian
// pairing b(u theta(v)).
FinModule quotient_N(const FiniteOAlgebra& alg, const GramData& g);

// |M_{i,a,b}|: stable submodules of colength i in quotient_M.
uint64_t count_M(const FiniteOAlgebra& alg, const GramData& g, int i,
                 uint64_t cap = kDefaultModuleCap);
// |N_{a,b}|: self-dual stable submodules of quotient_N.
uint64_t count_N(const FiniteOAlgebra& alg, const GramData& g,
                 uint64_t cap = kDefaultModuleCap);

struct LatticeCounts {
  int d = 0;
  std::vector<uint64_t> M;  // |M_0|, ..., |M_d|
  int64_t alt_sum = 0;
  uint64_t N = 0;
  bool identity_holds = false;
};
LatticeCounts count_lattices(const FiniteOAlgebra& alg, const GramData& g,
                             uint64_t cap = kDefaultModuleCap);

// (a, b) of a regular FJ orbit with r = 0, as inputs to build_algebra and
// build_gram.
void lattice_input(const OrbitInvariants& inv, std::vector<LocalElem>* a,
                   std::vector<LocalElem>* b);

}  // namespace orbitale

#endif  // ORBITALE_LATTICE_HPP_
