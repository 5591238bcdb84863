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

// Seeded generation of exact integral orbit data.

#ifndef ORBITALE_SAMPLER_HPP_
#define ORBITALE_SAMPLER_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "orbitale/matspace.hpp"

namespace orbitale {

uint64_t mix_seed(uint64_t seed, uint64_t index);

// Unitriangular matrices with exact integral entries pi^shift * (poly).
Mat random_unitriangular(const FieldPtr& f, std::mt19937_64& rng, int n, bool upper,
                         int shift, bool base_only);
Mat unitriangular_inverse(const Mat& u);

// Element of GL_n(o) (or GL_n(o') when base_only) with exact entries and
// an exact inverse, returned as the pair (h, h^{-1}).
std::pair<Mat, Mat> random_integral_gl(const FieldPtr& f, std::mt19937_64& rng, int n,
                                       int shift, bool scalar_diagonal, bool base_only);

// zeta = h * (h^tau)^{-1} for a random h in GL_n(o); exact, in S_n(o').
// With shift > 0 and scalar_diagonal the result is congruent to a
// scalar modulo pi^shift.
Mat random_symmetric_element(const FieldPtr& f, std::mt19937_64& rng, int n, int shift,
                             bool scalar_diagonal);

// Cayley transform (1 - A)(1 + A)^{-1} of a random A with
// A^* form + form A = 0; unitary for the hermitian `form`.
Mat random_unitary_element(const FieldPtr& f, std::mt19937_64& rng, const Mat& form);

// Block unipotent element of U_{1^r, central, 1^r}(o) and its inverse.
std::pair<Mat, Mat> random_block_unipotent(const FieldPtr& f, std::mt19937_64& rng,
                                           int central, int r, bool base_only);

struct SampleRequest {
  Side side = Side::kFJ;
  int n = 1;
  int val_delta_max = 4;
  int instances = 1;
  uint64_t seed = 1;
  int max_tries = 20000;
};

// Regular integral datum with r = 0 and val(Delta) == target.  Raises
// SamplingExhausted after max_tries draws.
SymOrbitDatum sample_regular(const FieldPtr& f, std::mt19937_64& rng, Side side, int n,
                             int target_val_delta, int max_tries);

// Instance i uses mix_seed(seed, i); its target val(Delta) is drawn
// uniformly from [0, val_delta_max] (always 0 for Bessel with n = 1).
std::vector<SymOrbitDatum> sample_data(const FieldPtr& f, const SampleRequest& req);
SymOrbitDatum sample_instance(const FieldPtr& f, const SampleRequest& req, int index);

}  // namespace orbitale

#endif  // ORBITALE_SAMPLER_HPP_
