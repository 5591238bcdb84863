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

#include "orbitale/sampler.hpp"

namespace orbitale {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat random_unitriangular(const FieldPtr& f, std::mt19937_64& rng, int n, bool upper,
                         int shift, bool base_only) {
  Mat u = Mat::identity(f, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (upper ? j > i : j < i) u(i, j) = random_poly(f, rng, shift, 3, base_only);
    }
  }
  return u;
}

Mat unitriangular_inverse(const Mat& u) {
  int n = u.rows();
  Mat id = Mat::identity(u.field(), n);
  Mat nil = id - u;
  Mat acc = id, p = id;
  for (int k = 1; k < n; ++k) {
    p = p * nil;
    acc = acc + p;
  }
  return acc;
}

std::pair<Mat, Mat> random_integral_gl(const FieldPtr& f, std::mt19937_64& rng, int n,
                                       int shift, bool scalar_diagonal, bool base_only) {
  std::vector<LocalElem> dg, dgi;
  Digit c{};
  for (int i = 0; i < n; ++i) {
    if (i == 0 || !scalar_diagonal) {
      do {
        c.u = static_cast<uint16_t>(rng() % f->q());
        c.v = base_only ? 0 : static_cast<uint16_t>(rng() % f->q());
      } while (c.is_zero());
    }
    dg.push_back(LocalElem::from_digit(f, c));
    dgi.push_back(LocalElem::from_digit(f, f->inv(c)));
  }
  Mat up = random_unitriangular(f, rng, n, true, shift, base_only);
  Mat lo = random_unitriangular(f, rng, n, false, shift, base_only);
  Mat h = Mat::diag(f, dg) * up * lo;
  Mat hi = unitriangular_inverse(lo) * unitriangular_inverse(up) * Mat::diag(f, dgi);
  return {h, hi};
}

Mat random_symmetric_element(const FieldPtr& f, std::mt19937_64& rng, int n, int shift,
                             bool scalar_diagonal) {
  auto [h, hi] = random_integral_gl(f, rng, n, shift, scalar_diagonal, false);
  return h * hi.tau();
}

Mat random_unitary_element(const FieldPtr& f, std::mt19937_64& rng, const Mat& form) {
  int n = form.rows();
  Mat id = Mat::identity(f, n);
  Mat form_inv = inverse(form);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Mat k(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) k(i, j) = random_poly(f, rng, 0, 3, false);
    Mat a = form_inv * (k - k.conj_transpose());
    Mat p = id + a;
    LocalElem d = det(p);
    if (!d.is_certified_nonzero()) continue;
    return (id - a) * inverse(p);
  }
  fail(ErrorCode::kSamplingExhausted, "Cayley transform kept hitting singular matrices");
}

std::pair<Mat, Mat> random_block_unipotent(const FieldPtr& f, std::mt19937_64& rng,
                                           int central, int r, bool base_only) {
  int n = central + 2 * r;
  Mat u = Mat::identity(f, n);
  auto block_of = [&](int i) {
    if (i < r) return i;
    if (i < r + central) return r;
    return i - central + 1;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of(j) > block_of(i)) u(i, j) = random_poly(f, rng, 0, 2, base_only);
  return {u, unitriangular_inverse(u)};
}

namespace {

Mat random_vector(const FieldPtr& f, std::mt19937_64& rng, int len, bool row, int max_shift) {
  Mat v = row ? Mat(f, 1, len) : Mat(f, len, 1);
  for (int i = 0; i < len; ++i) {
    int s = max_shift > 0 ? static_cast<int>(rng() % (max_shift + 1)) : 0;
    LocalElem e = random_poly(f, rng, s, 3, true);
    if (row) {
      v(0, i) = e;
    } else {
      v(i, 0) = e;
    }
  }
  return v;
}

}  // namespace

SymOrbitDatum sample_regular(const FieldPtr& f, std::mt19937_64& rng, Side side, int n,
                             int target_val_delta, int max_tries) {
  int m = side == Side::kFJ ? n : n - 1;
  if (m < 0 || n < 1) fail(ErrorCode::kInvalidArgument, "sample: n must be positive");
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    // Mix generic draws with draws close to scalar, which are needed to
    // reach larger val(Delta).
    int mode = static_cast<int>(rng() % 4);
    int shift = mode == 0 ? 0 : static_cast<int>(rng() % 3);
    bool scalar = mode >= 2;
    SymOrbitDatum d;
    d.side = side;
    d.n = n;
    d.m = m;
    d.r = 0;
    d.zeta = random_symmetric_element(f, rng, n, shift, scalar);
    if (side == Side::kFJ) {
      int vmax = static_cast<int>(rng() % 3);
      d.x = random_vector(f, rng, m, true, vmax);
      d.y = random_vector(f, rng, m, false, vmax);
    }
    OrbitInvariants inv;
    try {
      inv = invariants(d, true);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kPrecisionExhausted) continue;
      throw;
    }
    if (inv.regular && inv.delta_val == target_val_delta) return d;
  }
  fail(ErrorCode::kSamplingExhausted,
       "no regular datum with val(Delta) = " + std::to_string(target_val_delta) +
           " after " + std::to_string(max_tries) + " draws");
}

SymOrbitDatum sample_instance(const FieldPtr& f, const SampleRequest& req, int index) {
  std::mt19937_64 rng(mix_seed(req.seed, static_cast<uint64_t>(index)));
  int target = static_cast<int>(rng() % static_cast<uint64_t>(req.val_delta_max + 1));
  // With m = 0 the only Bessel orbit has Delta = 1.
  if (req.side == Side::kBessel && req.n == 1) target = 0;
  return sample_regular(f, rng, req.side, req.n, target, req.max_tries);
}

std::vector<SymOrbitDatum> sample_data(const FieldPtr& f, const SampleRequest& req) {
  std::vector<SymOrbitDatum> out;
  for (int i = 0; i < req.instances; ++i) out.push_back(sample_instance(f, req, i));
  return out;
}

}  // namespace orbitale
