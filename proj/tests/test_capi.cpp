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
#include <json.hpp>

#include <string>

#include "orbitale/orbitale.h"

namespace {

using Json = nlohmann::json;

const char* kScalar =
    R"({"q":3,"side":"fj","n":1,"m":1,"r":0,"zeta":[["1"]],"x":["1"],"y":["1"]})";

std::string take(char* s) {
  std::string out(s);
  orb_string_free(s);
  return out;
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(orb_context_new(3, 32, &ctx_), ORB_OK); }
  void TearDown() override { orb_context_free(ctx_); }
  orb_context* ctx_ = nullptr;
};

TEST(CApiContext, RejectsBadField) {
  orb_context* c = nullptr;
  EXPECT_EQ(orb_context_new(4, 32, &c), ORB_INVALID_ARGUMENT);
  EXPECT_EQ(c, nullptr);
  EXPECT_NE(std::string(orb_last_error()).find("odd prime"), std::string::npos);
  EXPECT_STREQ(orb_status_name(ORB_CAP_EXCEEDED), "CapExceeded");
}

TEST_F(CApi, DatumRoundTrip) {
  orb_datum* d = nullptr;
  ASSERT_EQ(orb_datum_from_json(ctx_, kScalar, &d), ORB_OK);
  char* out = nullptr;
  ASSERT_EQ(orb_datum_to_json(d, &out), ORB_OK);
  std::string first = take(out);
  orb_datum* again = nullptr;
  ASSERT_EQ(orb_datum_from_json(ctx_, first.c_str(), &again), ORB_OK);
  ASSERT_EQ(orb_datum_to_json(again, &out), ORB_OK);
  EXPECT_EQ(take(out), first);
  EXPECT_EQ(Json::parse(first), Json::parse(kScalar));
  orb_datum_free(d);
  orb_datum_free(again);
}

TEST_F(CApi, ParseErrorsNameTheField) {
  orb_datum* d = nullptr;
  EXPECT_EQ(orb_datum_from_json(ctx_, R"({"side":"fj","n":1,"m":1,"zeta":[["1"]],"x":["1"]})", &d),
            ORB_PARSE);
  EXPECT_NE(std::string(orb_last_error()).find("'y'"), std::string::npos);
  EXPECT_EQ(orb_datum_from_json(ctx_, R"({"side":"fj","n":1,"m":1,"zeta":[["1+"]],"x":["1"],"y":["1"]})", &d),
            ORB_PARSE);
  EXPECT_NE(std::string(orb_last_error()).find("zeta[0][0]"), std::string::npos);
  EXPECT_EQ(orb_datum_from_json(ctx_, "{", &d), ORB_PARSE);
  EXPECT_EQ(orb_datum_from_json(ctx_, R"({"q":5,"side":"fj","n":1,"m":1,"zeta":[["1"]],"x":["1"],"y":["1"]})", &d),
            ORB_PARSE);
}

TEST_F(CApi, InvariantsOfScalarDatum) {
  orb_datum* d = nullptr;
  ASSERT_EQ(orb_datum_from_json(ctx_, kScalar, &d), ORB_OK);
  char* out = nullptr;
  ASSERT_EQ(orb_invariants(d, &out), ORB_OK);
  Json j = Json::parse(take(out));
  EXPECT_EQ(j["a"], Json::array({"1"}));
  EXPECT_EQ(j["b"], Json::array({"1"}));
  EXPECT_EQ(j["delta_val"], 0);
  EXPECT_EQ(j["T_val"], 0);
  EXPECT_EQ(j["transfer"], 1);
  EXPECT_EQ(j["regular"], true);
  ASSERT_EQ(orb_match(d, &out), ORB_OK);
  j = Json::parse(take(out));
  EXPECT_EQ(j["epsilon"], 1);
  EXPECT_EQ(j["certificate_ok"], true);
  orb_datum_free(d);
}

TEST_F(CApi, CountLatticesRankOne) {
  char* out = nullptr;
  int holds = 0;
  ASSERT_EQ(orb_count_lattices(ctx_, R"({"q":3,"a":["1"],"b":["pi^3"]})", 1 << 16, &out, &holds),
            ORB_OK);
  Json j = Json::parse(take(out));
  EXPECT_EQ(j["M"], Json::array({1, 1, 1, 1}));
  EXPECT_EQ(j["alt_sum"], 0);
  EXPECT_EQ(j["N"], 0);
  EXPECT_EQ(holds, 1);
  EXPECT_EQ(orb_count_lattices(ctx_, R"({"a":["1"],"b":["0"]})", 1 << 16, &out, &holds),
            ORB_DEGENERATE_GRAM);
}

TEST_F(CApi, SampleIsDeterministicAndVerifies) {
  for (orb_side side : {ORB_SIDE_FJ, ORB_SIDE_BESSEL}) {
    for (int i = 0; i < 5; ++i) {
      orb_datum* a = nullptr;
      orb_datum* b = nullptr;
      ASSERT_EQ(orb_sample(ctx_, side, 2, 3, 11, i, &a), ORB_OK);
      ASSERT_EQ(orb_sample(ctx_, side, 2, 3, 11, i, &b), ORB_OK);
      char* sa = nullptr;
      char* sb = nullptr;
      ASSERT_EQ(orb_datum_to_json(a, &sa), ORB_OK);
      ASSERT_EQ(orb_datum_to_json(b, &sb), ORB_OK);
      EXPECT_EQ(take(sa), take(sb));
      char* rep = nullptr;
      int holds = 0;
      ASSERT_EQ(orb_verify_fl(a, 0, &rep, &holds), ORB_OK);
      Json j = Json::parse(take(rep));
      EXPECT_EQ(holds, 1) << j.dump();
      EXPECT_EQ(j["fl_holds"], true);
      orb_datum_free(a);
      orb_datum_free(b);
    }
  }
}

TEST(CApiWhittaker, AllDiffsZero) {
  char* out = nullptr;
  int holds = 0;
  ASSERT_EQ(orb_verify_whittaker(2, 2, 6, 10, 1, &out, &holds), ORB_OK);
  Json j = Json::parse(take(out));
  EXPECT_EQ(holds, 1);
  EXPECT_EQ(j["trials"].size(), 10u);
  for (const auto& t : j["trials"]) {
    for (const auto& d : t["diffs"]) EXPECT_EQ(d, "0");
  }
  EXPECT_EQ(orb_verify_whittaker(1, 2, 6, 1, 1, &out, &holds), ORB_INVALID_ARGUMENT);
}

}  // namespace
