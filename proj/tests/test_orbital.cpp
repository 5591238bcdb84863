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

#include "orbitale/orbital.hpp"
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

std::vector<SymOrbitDatum> data(uint32_t q, Side side, int n, int count, int vmax,
                                uint64_t seed) {
  SampleRequest req;
  req.side = side;
  req.n = n;
  req.instances = count;
  req.val_delta_max = vmax;
  req.seed = seed;
  return sample_data(Field::make(q), req);
}

TEST(Hermite, CanonicalForm) {
  FieldPtr f = Field::make(5);
  Mat g = Mat::from_rows(f, {{P(f, "pi"), P(f, "1 + 3*pi + pi^2")}, {P(f, "0"), P(f, "pi^2")}});
  HermiteLattice l = hermite_lattice(g);
  EXPECT_EQ(l.e, (std::vector<int>{1, 2}));
  EXPECT_EQ(l.g(0, 1), P(f, "1"));
  EXPECT_EQ(l.colength(), -3);
  std::mt19937_64 rng(2);
  auto [h, hinv] = random_integral_gl(f, rng, 2, 0, false, true);
  EXPECT_EQ(hermite_lattice(g * h).key, l.key);
  EXPECT_EQ(hermite_lattice(Mat::identity(f, 2)).colength(), 0);
}

TEST(OrbitalSymFj, ScalarChains) {
  FieldPtr f = Field::make(3);
  EXPECT_EQ(orbital_sym_fj(scalar_fj(f, "1", "1", "1")).value, 1);
  OrbitalResult r = orbital_sym_fj(scalar_fj(f, "1", "1", "pi^2"));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.by_colength.size(), 3u);
  EXPECT_TRUE(r.window_ok);
  EXPECT_EQ(orbital_sym_fj(scalar_fj(f, "1", "1", "pi")).value, 0);
  OrbitalResult odd = orbital_sym_fj(scalar_fj(f, "1", "pi", "pi^2"));
  EXPECT_EQ(odd.value, 0);
  EXPECT_EQ(odd.by_colength.size(), 4u);
}

TEST(OrbitalUniFj, Scalar) {
  FieldPtr f = Field::make(3);
  UniOrbitDatum u;
  u.n = u.m = 1;
  u.beta = Mat::identity(f, 1);
  u.beta0 = LocalElem::one(f);
  u.zeta = Mat::identity(f, 1);
  u.z = Mat::identity(f, 1);
  EXPECT_EQ(orbital_uni_fj(u).value, 1);
  u.beta = Mat::from_rows(f, {{P(f, "pi")}});
  EXPECT_EQ(orbital_uni_fj(u).value, 0);
}

TEST(VerifyFl, RankOneFamily) {
  FieldPtr f = Field::make(5);
  for (const char* y : {"1", "pi", "pi^2", "pi^3"}) {
    FlReport rep = verify_fl(scalar_fj(f, "1", "1", y));
    EXPECT_TRUE(rep.fl_holds) << y;
  }
}

TEST(VerifyFl, RandomFj) {
  for (uint32_t q : {3u, 5u}) {
    for (const auto& d : data(q, Side::kFJ, 2, q == 3 ? 30 : 20, 4, 500 + q)) {
      FlReport rep = verify_fl(d);
      std::string why;
      for (const auto& s : rep.failures) why += s + "; ";
      EXPECT_TRUE(rep.fl_holds) << "q=" << q << " valDelta=" << rep.inv.delta_val << " sym="
                                << rep.sym.value << " uni=" << rep.uni.value
                                << " alt=" << rep.counts.alt_sum << " N=" << rep.counts.N
                                << " " << why;
      EXPECT_TRUE(rep.sym.window_ok);
    }
  }
}

TEST(VerifyFl, RandomBessel) {
  for (int n : {1, 2, 3}) {
    for (const auto& d : data(5, Side::kBessel, n, n == 3 ? 10 : 20, 4, 700 + n)) {
      FlReport rep = verify_fl(d);
      std::string why;
      for (const auto& s : rep.failures) why += s + "; ";
      EXPECT_TRUE(rep.fl_holds) << "n=" << n << " valDelta=" << rep.inv.delta_val
                                << " sym=" << rep.sym.value << " uni=" << rep.uni.value << " "
                                << why;
    }
  }
}

TEST(Orbital, ConjugationInvariance) {
  FieldPtr f = Field::make(3);
  std::mt19937_64 rng(8);
  for (const auto& d : data(3, Side::kFJ, 2, 10, 4, 900)) {
    auto [h, hinv] = random_integral_gl(f, rng, 2, 0, false, true);
    SymOrbitDatum c = d;
    c.zeta = hinv * d.zeta * h;
    c.x = d.x * h;
    c.y = hinv * d.y;
    OrbitalResult a = orbital_sym_fj(d), b = orbital_sym_fj(c);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.by_colength, b.by_colength);

    SymToUni m = match_sym_to_uni(d);
    Mat u = random_unitary_element(f, rng, m.uni.beta);
    UniOrbitDatum mu = m.uni;
    mu.zeta = inverse(u) * m.uni.zeta * u;
    mu.z = m.uni.z * u;
    EXPECT_EQ(orbital_uni_fj(m.uni).value, orbital_uni_fj(mu).value);
  }
}

TEST(Orbital, BesselSinglePointAndParity) {
  FieldPtr f = Field::make(5);
  SymOrbitDatum d;
  d.side = Side::kBessel;
  d.n = 1;
  d.zeta = Mat::from_rows(f, {{P(f, "1")}});
  EXPECT_EQ(orbital_sym_bessel_r0(d).value, 1);
  for (const auto& e : data(5, Side::kBessel, 2, 20, 3, 77)) {
    if (invariants(e).delta_val % 2 == 1) EXPECT_EQ(orbital_sym_bessel_r0(e).value, 0);
  }
}

}  // namespace
}  // namespace orbitale
