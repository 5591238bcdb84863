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

#include <functional>
#include <map>

#include "orbitale/error.hpp"
#include "orbitale/whittaker.hpp"

namespace orbitale {
namespace {

std::vector<Rational> R(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

// Sum over semistandard tableaux of shape lambda with entries 1..n.
Rational schur_by_tableaux(const std::vector<int>& lambda, const std::vector<Rational>& a) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.push_back({r, c});
  }
  std::map<std::pair<int, int>, int> fill;
  Rational total = 0;
  int n = static_cast<int>(a.size());
  std::function<void(size_t)> go = [&](size_t k) {
    if (k == cells.size()) {
      Rational m = 1;
      for (auto& [cell, v] : fill) m *= a[v];
      total += m;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    for (int v = lo; v < n; ++v) {
      fill[{r, c}] = v;
      go(k + 1);
    }
    fill.erase({r, c});
  };
  go(0);
  return total;
}

TEST(Schur, SmallValues) {
  EXPECT_EQ(schur({}, R({2, 5})), 1);
  EXPECT_EQ(schur({1}, R({2, 5})), 7);
  EXPECT_EQ(schur({2, 1}, R({1, 2, 3})), 60);
  EXPECT_EQ(schur({1, 1, 1}, R({1, 2, 3})), 6);
  EXPECT_EQ(schur({1, 1, 1}, R({1, 2})), 0);
  EXPECT_EQ(schur({2, 1, 0}, R({1, 2, 3})), schur({2, 1}, R({1, 2, 3})));
}

TEST(Schur, AgreesWithTableaux) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    auto a = random_satake(rng, n);
    for (const auto& lam : partitions(5, n)) {
      EXPECT_EQ(schur(lam, a), schur_by_tableaux(lam, a));
    }
  }
}

TEST(Schur, Symmetric) {
  auto a = R({1, -2, 3});
  auto b = R({3, 1, -2});
  for (const auto& lam : partitions(6, 3)) EXPECT_EQ(schur(lam, a), schur(lam, b));
}

TEST(Partitions, Counts) {
  EXPECT_EQ(partitions(0, 3).size(), 1u);
  EXPECT_EQ(partitions(4, 1).size(), 5u);
  // p(0..4) = 1, 1, 2, 3, 5.
  EXPECT_EQ(partitions(4, 4).size(), 12u);
  // With at most two parts: 1, 1, 2, 2, 3.
  EXPECT_EQ(partitions(4, 2).size(), 9u);
}

TEST(Series, ReciprocalAndGeometric) {
  std::mt19937_64 rng(3);
  auto a = random_satake(rng, 3);
  TruncSeries s = lfactor_series(a, R({1}), 8);
  EXPECT_EQ(s * s.reciprocal(), TruncSeries::one(8));
  TruncSeries g = TruncSeries::geometric(Rational(2, 3), 5);
  EXPECT_EQ(g[5], Rational(32, 243));
}

TEST(Zeta, OneByOne) {
  auto z = zeta0_series(R({2}), R({3}), 6);
  EXPECT_EQ(z, TruncSeries::geometric(6, 6));
}

TEST(Zeta, TwoByOne) {
  auto z = zeta0_series(R({1, 2}), R({3}), 3);
  EXPECT_EQ(z[0], 1);
  EXPECT_EQ(z[1], 9);
  EXPECT_EQ(z[2], 63);
  EXPECT_EQ(z[3], 405);
}

TEST(Zeta, CauchyIdentity) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int trial = 0; trial < 3; ++trial) {
        auto a = random_satake(rng, n);
        auto b = random_satake(rng, m);
        EXPECT_EQ(zeta0_series(a, b, 8), lfactor_series(a, b, 8)) << n << " " << m;
      }
    }
  }
}

TEST(Zeta, RejectsWrongOrder) {
  EXPECT_THROW(zeta0_series(R({1}), R({1, 2}), 3), Error);
}

}  // namespace
}  // namespace orbitale
