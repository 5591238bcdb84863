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

// Brute-force orbital integrals as signed lattice counts, and the
// fundamental lemma check that ties them to the lattice counts.

#ifndef ORBITALE_ORBITAL_HPP_
#define ORBITALE_ORBITAL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbitale/lattice.hpp"
#include "orbitale/matching.hpp"
#include "orbitale/matspace.hpp"

namespace orbitale {

// A full-rank lattice g * o^n (or o'^n) with g in column Hermite form:
// upper triangular, diagonal pi^{e_i}, entry (i, j) an exact polynomial
// with digits below e_i.
struct HermiteLattice {
  Mat g;
  std::vector<int> e;
  std::string key;

  // leng(L : V) for V the standard lattice.
  int colength() const;
};

HermiteLattice hermite_lattice(const Mat& gens);

struct EnumBounds {
  int B = 0;           // search pi^B V <= L <= pi^{-B} V
  int window_lo = 0;   // expected colength range on the symmetric side
  int window_hi = 0;
  bool stable = false; // count(B) == count(B + 1)
};

struct OrbitalResult {
  Space space = Space::kSymmetric;
  int64_t value = 0;
  std::map<int, uint64_t> by_colength;
  EnumBounds bounds;
  bool window_ok = true;
  uint64_t visited = 0;
  std::string note;
};

struct OrbitalOptions {
  int extra_bound = 0;
  uint64_t max_lattices = uint64_t{1} << 20;
};

// Signed count over GL_n(k')/GL_n(o') for FJ data with r = 0.
OrbitalResult orbital_sym_fj(const SymOrbitDatum& d, const OrbitalOptions& opt = {});
// Self-dual o-lattices L with zeta L <= L and z* in L.
OrbitalResult orbital_uni_fj(const UniOrbitDatum& d, const OrbitalOptions& opt = {});
// Bessel data with r = 0: integration over GL_m(k') (resp. U_m(k')).
OrbitalResult orbital_sym_bessel_r0(const SymOrbitDatum& d, const OrbitalOptions& opt = {});
OrbitalResult orbital_uni_bessel_r0(const UniOrbitDatum& d, const OrbitalOptions& opt = {});

struct FlReport {
  SymOrbitDatum datum;
  OrbitInvariants inv;
  int parity = 1;
  SymToUni match;
  OrbitalResult sym;
  OrbitalResult uni;
  bool have_counts = false;  // FJ only
  LatticeCounts counts;
  int transfer = 1;
  bool fl_holds = false;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  OrbitalOptions orbital;
  uint64_t module_cap = uint64_t{1} << 24;
};

// Runs both oracles on the datum and its match, and for FJ data the
// lattice counts, then checks
//   sym == transfer * uni   (val Delta even),   sym == 0   (odd),
// together with sym == (-1)^{val T} * alt_sum(M) and uni == |N|.
FlReport verify_fl(const SymOrbitDatum& d, const VerifyOptions& opt = {});

}  // namespace orbitale

#endif  // ORBITALE_ORBITAL_HPP_
