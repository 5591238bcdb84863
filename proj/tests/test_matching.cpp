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

#include <gtest/gtest.h>

#include <random>

#include "orbitale/matching.hpp"
#include "orbitale/sampler.hpp"

namespace orbitale {
namespace {

LocalElem P(const FieldPtr& f, const char* s) { return LocalElem::parse(f, s); }

SymOrbitDatum scalar_fj(const FieldPtr& f, const char* z, const char* x, const char* y) {
  SymOrbitDatum d;
  d.n = d.m = 1;
  d.zeta = Mat::from_rows(f, {{P(f, z)}});
  d.x = Mat::from_rows(f, {{P(f, x)}});
  d.y = Mat::from_rows(f, {{P(f, y)}});
  return d;
}

// Random hermitian m x m matrix with certified nonzero determinant.
Mat random_hermitian(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  while (true) {
    Mat b(f, 2, 2);
    for (int i = 0; i < 2; ++i) {
      b(i, i) = random_with_val(f, rng, coin(rng) == 0 ? 1 : 0);
    }
    b(0, 1) = random_with_val(f, rng, coin(rng) / 2, false);
    b(1, 0) = b(0, 1).tau();
    if (det(b).is_certified_nonzero()) return b;
  }
}

UniOrbitDatum random_regular_unitary(const FieldPtr& f, std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> coin(0, 2);
  while (true) {
    UniOrbitDatum u;
    u.n = u.m = m;
    if (m == 1) {
      u.beta = Mat::from_rows(f, {{LocalElem::pi_power(f, coin(rng) == 0 ? 1 : 0)}});
    } else {
      u.beta = random_hermitian(f, rng);
    }
    u.beta0 = LocalElem::one(f);
    u.zeta = random_unitary_element(f, rng, u.beta);
    Mat z(f, 1, m);
    for (int i = 0; i < m; ++i) z(0, i) = random_with_val(f, rng, coin(rng) / 2, false);
    u.z = z;
    if (invariants(u, true).regular) return u;
  }
}

TEST(Hilbert90, Identity) {
  FieldPtr f = Field::make(5);
  Mat id = Mat::identity(f, 2);
  EXPECT_EQ(hilbert90(id), id);
}

TEST(Hilbert90, ScalarOneLine) {
  FieldPtr f = Field::make(7);
  LocalElem u = P(f, "2 + j + pi*j");
  LocalElem s = u / u.tau();
  LocalElem one = LocalElem::one(f);
  LocalElem g = s * one + one.tau();
  EXPECT_TRUE((s * g.tau()).agrees_with(g));
  Mat gm = hilbert90(Mat::from_rows(f, {{s}}));
  EXPECT_TRUE((gm(0, 0) / gm(0, 0).tau()).agrees_with(s));
}

TEST(Hilbert90, RandomWitness) {
  for (uint32_t q : {3u, 5u, 7u}) {
    FieldPtr f = Field::make(q);
    std::mt19937_64 rng(q * 17);
    for (int trial = 0; trial < 20; ++trial) {
      auto [h, hinv] = random_integral_gl(f, rng, 2, trial % 3, false, false);
      Mat s = h * hinv.tau();
      Mat g = hilbert90(s);
      EXPECT_TRUE((g * inverse(g.tau())).agrees_with(s));
    }
  }
}

TEST(Hilbert90, RejectsNonSymmetric) {
  FieldPtr f = Field::make(5);
  Mat s = Mat::from_rows(f, {{P(f, "2")}});
  EXPECT_THROW(hilbert90(s), Error);
}

TEST(HermClass, Examples) {
  FieldPtr f = Field::make(5);
  EXPECT_EQ(herm_class_of(Mat::identity(f, 3)), 1);
  EXPECT_EQ(herm_class_of(Mat::diag(f, {P(f, "1"), P(f, "pi")})), -1);
  EXPECT_EQ(herm_class_of(Mat::diag(f, {P(f, "pi"), P(f, "pi")})), 1);
}

TEST(MatchSymToUni, ScalarExamples) {
  FieldPtr f = Field::make(5);
  SymToUni a = match_sym_to_uni(scalar_fj(f, "1", "1", "1"));
  EXPECT_EQ(a.cls.epsilon, 1);
  EXPECT_EQ(a.uni.beta, Mat::identity(f, 1));
  EXPECT_TRUE(a.uni.z_star().agrees_with(Mat::identity(f, 1)));
  EXPECT_TRUE(a.cert.verified);

  SymOrbitDatum odd = scalar_fj(f, "1", "1", "pi");
  EXPECT_EQ(parity_class(odd), -1);
  SymToUni b = match_sym_to_uni(odd);
  EXPECT_EQ(b.cls.epsilon, -1);
  EXPECT_TRUE(b.cert.verified);
}

TEST(MatchUniToSym, ScalarExamples) {
  FieldPtr f = Field::make(5);
  UniOrbitDatum u;
  u.n = u.m = 1;
  u.beta = Mat::identity(f, 1);
  u.beta0 = LocalElem::one(f);
  u.zeta = Mat::identity(f, 1);
  u.z = Mat::identity(f, 1);
  UniToSym s = match_uni_to_sym(u);
  EXPECT_EQ(s.sym.zeta, Mat::identity(f, 1));
  EXPECT_EQ(s.sym.x, Mat::identity(f, 1));
  EXPECT_EQ(s.sym.y, Mat::identity(f, 1));

  u.beta = Mat::from_rows(f, {{P(f, "pi")}});
  UniToSym t = match_uni_to_sym(u);
  EXPECT_NE(invariants(t.sym).delta_val % 2, 0);
  EXPECT_EQ(parity_class(t.sym), herm_class_of(u.beta));
}

TEST(MatchSymToUni, RandomInvariantsAndCoherence) {
  for (Side side : {Side::kFJ, Side::kBessel}) {
    for (int n : {1, 2, 3}) {
      FieldPtr f = Field::make(n == 3 ? 3 : 5);
      SampleRequest req;
      req.side = side;
      req.n = n;
      req.val_delta_max = 3;
      req.instances = n == 3 ? 10 : 40;
      req.seed = 1000 + n + (side == Side::kFJ ? 0 : 50);
      for (const SymOrbitDatum& d : sample_data(f, req)) {
        OrbitInvariants inv = invariants(d);
        SymToUni m = match_sym_to_uni(d);
        ASSERT_TRUE(m.cert.verified);
        OrbitInvariants inv_u = invariants(m.uni);
        EXPECT_TRUE(inv.same_as(inv_u));
        EXPECT_EQ(m.cls.epsilon, parity_class(d));
        UniToSym back = match_uni_to_sym(m.uni);
        EXPECT_TRUE(back.cert.verified);
        EXPECT_TRUE(inv.same_as(invariants(back.sym)));
      }
    }
  }
}

TEST(MatchUniToSym, RandomRoundTrip) {
  FieldPtr f = Field::make(5);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    UniOrbitDatum u = random_regular_unitary(f, rng, 1 + trial % 2);
    OrbitInvariants inv = invariants(u);
    UniToSym s = match_uni_to_sym(u);
    ASSERT_TRUE(s.cert.verified);
    EXPECT_TRUE(membership(s.sym.zeta, Mat()).in_S);
    EXPECT_TRUE(s.sym.x.in_base() && s.sym.y.in_base());
    EXPECT_TRUE(inv.same_as(invariants(s.sym)));
    EXPECT_EQ(parity_class(s.sym), herm_class_of(u.beta));
    SymToUni again = match_sym_to_uni(s.sym);
    EXPECT_TRUE(inv.same_as(invariants(again.uni)));
  }
}

TEST(Match, WithUnipotentPart) {
  FieldPtr f = Field::make(5);
  SampleRequest req;
  req.n = 2;
  req.seed = 9;
  std::vector<LocalElem> t{P(f, "pi * (1 + j)")};
  for (int i = 0; i < 5; ++i) {
    SymOrbitDatum c = sample_instance(f, req, i);
    SymOrbitDatum d = c;
    d.r = 1;
    d.n = 4;
    d.zeta = assemble_normal_form(t, c.zeta);
    OrbitInvariants inv = invariants(d);
    SymToUni m = match_sym_to_uni(d);
    EXPECT_TRUE(m.cert.verified);
    EXPECT_TRUE(inv.same_as(invariants(m.uni)));
    EXPECT_TRUE(inv.same_as(invariants(match_uni_to_sym(m.uni).sym)));
  }
}

TEST(Match, RejectsIrregular) {
  FieldPtr f = Field::make(5);
  EXPECT_THROW(match_sym_to_uni(scalar_fj(f, "1", "0", "1")), Error);
}

}  // namespace
}  // namespace orbitale
