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

#include <set>

#include "orbitale/sampler.hpp"

namespace orbitale {
namespace {

TEST(Sampler, EveryDatumIsRegular) {
  FieldPtr f = Field::make(3);
  for (Side side : {Side::kFJ, Side::kBessel}) {
    for (int n = 1; n <= 3; ++n) {
      SampleRequest req;
      req.side = side;
      req.n = n;
      req.instances = 10;
      req.seed = 7;
      for (const auto& d : sample_data(f, req)) {
        OrbitInvariants inv = invariants(d);
        EXPECT_TRUE(inv.regular);
        EXPECT_TRUE(d.zeta.is_integral());
        EXPECT_LE(inv.delta_val, req.val_delta_max);
      }
    }
  }
}

TEST(Sampler, ScalarContract) {
  FieldPtr f = Field::make(3);
  SampleRequest req;
  req.n = 1;
  req.instances = 10;
  req.seed = 7;
  auto data = sample_data(f, req);
  ASSERT_EQ(data.size(), 10u);
  for (const auto& d : data) {
    EXPECT_EQ(d.n, 1);
    EXPECT_LE(invariants(d).b[0].valuation(), req.val_delta_max);
  }
}

TEST(Sampler, Deterministic) {
  FieldPtr f = Field::make(5);
  SampleRequest req;
  req.n = 2;
  req.instances = 5;
  req.seed = 99;
  auto a = sample_data(f, req);
  auto b = sample_data(f, req);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].zeta.render(), b[i].zeta.render());
    EXPECT_EQ(a[i].x.render(), b[i].x.render());
    EXPECT_EQ(a[i].y.render(), b[i].y.render());
  }
  req.seed = 100;
  EXPECT_NE(sample_data(f, req)[0].zeta.render(), a[0].zeta.render());
}

TEST(Sampler, CoversBothParities) {
  FieldPtr f = Field::make(3);
  SampleRequest req;
  req.n = 2;
  req.instances = 100;
  req.seed = 1;
  std::set<int> vals;
  for (const auto& d : sample_data(f, req)) vals.insert(invariants(d).delta_val % 2);
  EXPECT_EQ(vals, (std::set<int>{0, 1}));
}

TEST(Sampler, BesselRankOneHasUnitDelta) {
  FieldPtr f = Field::make(3);
  SampleRequest req;
  req.side = Side::kBessel;
  req.n = 1;
  req.instances = 5;
  req.seed = 3;
  for (const auto& d : sample_data(f, req)) EXPECT_EQ(invariants(d).delta_val, 0);
}

}  // namespace
}  // namespace orbitale
