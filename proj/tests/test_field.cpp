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

#include "orbitale/field.hpp"

namespace orbitale {
namespace {

class FieldTest : public ::testing::TestWithParam<uint32_t> {
 protected:
  FieldPtr f = Field::make(GetParam(), 24);
};

TEST(FieldParams, RejectsBadInput) {
  EXPECT_THROW(Field::make(9), Error);
  EXPECT_THROW(Field::make(2), Error);
  EXPECT_THROW(Field::make(5, 0), Error);
  EXPECT_THROW(Field::make(5, 32, 4), Error);  // 4 is a square mod 5
  EXPECT_EQ(Field::make(5)->eps(), 2u);
  EXPECT_EQ(Field::make(7)->eps(), 3u);
}

TEST_P(FieldTest, Examples) {
  LocalElem pi = LocalElem::pi_power(f, 1);
  LocalElem pinv = pi.inv();
  EXPECT_EQ(pinv.valuation(), -1);
  EXPECT_TRUE(pinv.is_exact());

  LocalElem j = LocalElem::j(f);
  LocalElem jj = j * j;
  EXPECT_TRUE(jj.in_base());
  EXPECT_EQ(jj, LocalElem::from_int(f, f->eps()));

  std::mt19937_64 rng(3);
  LocalElem x = random_with_val(f, rng, 2, false);
  EXPECT_TRUE((x + (-x)).is_exact_zero());

  EXPECT_EQ((pi * pi * pi * random_unit(f, rng)).valuation(), 3);
  EXPECT_EQ((LocalElem::one(f) + pi).valuation(), 0);
  EXPECT_EQ(j.valuation(), 0);
  EXPECT_EQ(pi.eta(), -1);
  EXPECT_EQ(random_unit(f, rng).eta(), 1);

  LocalElem a = random_unit(f, rng), b = random_unit(f, rng);
  LocalElem z = a + j * b;
  EXPECT_TRUE(z.norm().agrees_with(a * a - LocalElem::from_int(f, f->eps()) * b * b));
}

TEST_P(FieldTest, RingAxiomsAndValuation) {
  std::mt19937_64 rng(GetParam() * 101);
  for (int trial = 0; trial < 200; ++trial) {
    int va = static_cast<int>(rng() % 7) - 3, vb = static_cast<int>(rng() % 7) - 3;
    LocalElem x = random_with_val(f, rng, va, false);
    LocalElem y = random_with_val(f, rng, vb, false);
    LocalElem w = random_with_val(f, rng, 0, false);
    EXPECT_EQ((x * y).valuation(), va + vb);
    LocalElem s = x + y;
    if (va != vb) EXPECT_EQ(s.valuation(), std::min(va, vb));
    if (!s.is_zero_within_precision()) EXPECT_GE(s.valuation(), std::min(va, vb));
    EXPECT_TRUE((x * (y + w)).agrees_with(x * y + x * w));
    EXPECT_TRUE(((x * y) * w).agrees_with(x * (y * w)));
    LocalElem xi = x.inv();
    EXPECT_TRUE((x * xi).agrees_with(LocalElem::one(f)));
    EXPECT_EQ(xi.valuation(), -va);
    EXPECT_EQ(x.tau().tau(), x);
    EXPECT_TRUE((x * y).tau().agrees_with(x.tau() * y.tau()));
    EXPECT_TRUE(x.trace().in_base());
    EXPECT_TRUE(x.norm().in_base());
    EXPECT_EQ((x * y).norm().eta(), x.norm().eta() * y.norm().eta());
    LocalElem xb = random_with_val(f, rng, va, true);
    EXPECT_EQ(xb.tau(), xb);
  }
}

TEST_P(FieldTest, PrecisionBookkeeping) {
  std::mt19937_64 rng(7);
  LocalElem x = random_unit(f, rng).inv();  // relative precision N
  EXPECT_EQ(x.relative_precision(), f->precision());
  LocalElem y = x.reduce_precision(5);
  EXPECT_EQ(y.precision(), 5);
  EXPECT_EQ((x * y).precision(), 5);
  EXPECT_EQ((x.shift(3) * y).precision(), 8);
  EXPECT_EQ((x + y.shift(2)).precision(), std::min(x.precision(), 7));
  LocalElem z = y - x;
  EXPECT_TRUE(z.is_zero_within_precision());
  EXPECT_FALSE(z.is_exact_zero());
  EXPECT_THROW(z.valuation(), Error);
  try {
    (void)z.valuation();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecisionExhausted);
  }
  EXPECT_TRUE(z.is_integral());
  EXPECT_THROW(z.shift(-9).is_integral(), Error);
  EXPECT_THROW(z.inv(), Error);
  EXPECT_THROW(LocalElem::zero(f).inv(), Error);
}

TEST_P(FieldTest, RenderParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int v = static_cast<int>(rng() % 9) - 4;
    LocalElem x = random_with_val(f, rng, v, trial % 2 == 0);
    if (trial % 3 == 0) x = x.inv();
    if (trial % 5 == 0) x = x.reduce_precision(v + 3);
    std::string s = x.render();
    LocalElem y = LocalElem::parse(f, s);
    EXPECT_EQ(y, x) << s;
    EXPECT_EQ(y.render(), s);
  }
  EXPECT_EQ(LocalElem::parse(f, "pi^2").render(), "pi^2");
  EXPECT_EQ(LocalElem::parse(f, "0").render(), "0");
  EXPECT_EQ(LocalElem::parse(f, "O(pi^3)").render(), "O(pi^3)");
  EXPECT_EQ(LocalElem::parse(f, "1 + j").render(), "(1 + j)");
  EXPECT_EQ(LocalElem::parse(f, "pi^-1 * (1 + 2*pi)").valuation(), -1);
  EXPECT_EQ(LocalElem::parse(f, "-1"), LocalElem::from_int(f, -1));
  EXPECT_THROW(LocalElem::parse(f, "1 +"), Error);
  EXPECT_THROW(LocalElem::parse(f, "x"), Error);
}

TEST_P(FieldTest, RandomDeterminism) {
  LocalElem a = random_with_val(f, 1, 0), b = random_with_val(f, 1, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.valuation(), 0);
  EXPECT_EQ(random_with_val(f, 1, 2).valuation(), 2);
  EXPECT_NE(random_with_val(f, 1, 0), random_with_val(f, 2, 0));
}

INSTANTIATE_TEST_SUITE_P(Primes, FieldTest, ::testing::Values(3u, 5u, 7u, 13u));

}  // namespace
}  // namespace orbitale
