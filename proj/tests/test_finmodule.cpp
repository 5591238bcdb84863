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

#include "orbitale/error.hpp"
#include "orbitale/finmodule.hpp"

namespace orbitale {
namespace {

// Calls fn on the reduced row echelon basis of every subspace of F_q^dim.
void for_each_subspace(uint32_t q, int dim, const std::function<void(std::vector<FqVec>)>& fn) {
  for (uint32_t mask = 0; mask < (1u << dim); ++mask) {
    std::vector<int> piv;
    for (int c = 0; c < dim; ++c) {
      if (mask >> c & 1) piv.push_back(c);
    }
    std::vector<std::pair<int, int>> free;
    for (size_t r = 0; r < piv.size(); ++r) {
      for (int c = piv[r] + 1; c < dim; ++c) {
        if (!(mask >> c & 1)) free.emplace_back(static_cast<int>(r), c);
      }
    }
    std::vector<uint32_t> val(free.size(), 0);
    while (true) {
      std::vector<FqVec> rows(piv.size(), FqVec(dim, 0));
      for (size_t r = 0; r < piv.size(); ++r) rows[r][piv[r]] = 1;
      for (size_t i = 0; i < free.size(); ++i) {
        rows[free[i].first][free[i].second] = static_cast<uint16_t>(val[i]);
      }
      fn(rows);
      size_t i = 0;
      while (i < val.size() && val[i] == q - 1) val[i++] = 0;
      if (i == val.size()) break;
      ++val[i];
    }
  }
}

// Stable subspaces found by scanning every subspace.
std::vector<Submodule> scan(const FinModule& m) {
  std::vector<Submodule> out;
  for_each_subspace(m.q(), m.dim(), [&](std::vector<FqVec> rows) {
    Submodule s{std::move(rows)};
    if (m.is_stable(s)) out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FinModule, ChainOfLengthTwo) {
  uint32_t q = 5;
  FqMat pi(q, 2, 2);
  pi(1, 0) = 1;  // basis 1, pi
  FqMat t = FqMat::identity(q, 2);
  t(0, 0) = t(1, 1) = 2;
  FinModule m(q, 2, pi, {t});
  EXPECT_EQ(enumerate_stable_submodules(m).size(), 3u);
}

TEST(FinModule, IdentityOnPlane) {
  for (uint32_t q : {3u, 5u, 7u}) {
    FinModule m(q, 2, FqMat(q, 2, 2), {FqMat::identity(q, 2)});
    EXPECT_EQ(enumerate_stable_submodules(m).size(), q + 3);
  }
}

TEST(FinModule, NonSplitSemisimple) {
  for (uint32_t q : {3u, 5u, 7u}) {
    uint32_t eps = q == 7 ? 3 : 2;  // a non-residue
    FqMat t(q, 2, 2);
    t(0, 1) = static_cast<uint16_t>(eps);
    t(1, 0) = 1;
    FinModule m(q, 2, FqMat(q, 2, 2), {t});
    auto subs = enumerate_stable_submodules(m);
    EXPECT_EQ(subs.size(), 2u);
    EXPECT_EQ(subs, scan(m));
  }
}

TEST(FinModule, AgreesWithSubspaceScan) {
  uint32_t q = 3;
  // o'/pi^2 (+) o'/pi with a nilpotent twist and a unipotent operator.
  FqMat pi(q, 3, 3);
  pi(1, 0) = 1;
  FqMat t = FqMat::identity(q, 3);
  t(2, 0) = 1;
  FinModule m(q, 3, pi, {t});
  ASSERT_TRUE(m.operators_commute());
  auto subs = enumerate_stable_submodules(m);
  EXPECT_EQ(subs, scan(m));

  // (o'/pi)^4 with a single nilpotent Jordan block as the operator.
  FqMat n4(q, 4, 4);
  for (int i = 0; i + 1 < 4; ++i) n4(i + 1, i) = 1;
  FinModule m4(q, 4, FqMat(q, 4, 4), {n4});
  EXPECT_EQ(enumerate_stable_submodules(m4), scan(m4));
  EXPECT_EQ(enumerate_stable_submodules(m4).size(), 5u);
}

TEST(FinModule, CapExceeded) {
  FinModule m(3, 12, FqMat(3, 12, 12), {});
  try {
    enumerate_stable_submodules(m, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(FinModule, DualIsInvolution) {
  uint32_t q = 5;
  FqMat pi(q, 2, 2);
  pi(1, 0) = 1;
  FinModule m(q, 2, pi, {});
  FqMat b(q, 2, 2);
  b(0, 1) = b(1, 0) = 1;
  m.set_pairing(b);
  auto subs = enumerate_stable_submodules(m);
  ASSERT_EQ(subs.size(), 3u);
  EXPECT_EQ(dual_submodule(m, m.zero()), m.whole());
  for (const auto& s : subs) {
    EXPECT_EQ(dual_submodule(m, dual_submodule(m, s)), s);
    EXPECT_EQ(dual_submodule(m, s).dim(), m.dim() - s.dim());
  }
}

}  // namespace
}  // namespace orbitale
