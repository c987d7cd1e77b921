// Copyright 2026 The orthodice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "orthodice/orthodice.h"

namespace {

using Json = nlohmann::json;

struct ResultDeleter {
  void operator()(od_result* r) const { od_result_destroy(r); }
};
using Result = std::unique_ptr<od_result, ResultDeleter>;

struct OptionsDeleter {
  void operator()(od_options* o) const { od_options_destroy(o); }
};
using Options = std::unique_ptr<od_options, OptionsDeleter>;

Options make_options() {
  od_options* raw = nullptr;
  EXPECT_EQ(od_options_create(&raw), OD_OK);
  return Options(raw);
}

Json payload(od_result* r) { return Json::parse(od_result_json(r)); }

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(od_version(), "1.0.0");
  EXPECT_STREQ(od_status_name(OD_OK), "OK");
  EXPECT_STREQ(od_status_name(OD_INDEX_NOT_IN_I), "IndexNotInI");
  EXPECT_STREQ(od_status_name(OD_INVALID_ARGUMENT), "InvalidArgument");
}

TEST(CApi, FromPrime) {
  od_result* raw = nullptr;
  ASSERT_EQ(od_dice_from_prime(nullptr, "37", 1, &raw), OD_OK);
  Result r(raw);
  const Json j = payload(r.get());
  EXPECT_EQ(j["die"]["m"], 96);
  EXPECT_EQ(j["die"]["n"], 132);
  EXPECT_EQ(j["die"]["c"], 114);
  EXPECT_EQ(j["die"]["k"], 17);
}

TEST(CApi, ErrorsLeaveOutputNull) {
  od_result* raw = nullptr;
  EXPECT_EQ(od_dice_from_index(nullptr, "9", &raw), OD_INDEX_NOT_IN_I);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(od_last_error_message()).find("9"), std::string::npos);
  EXPECT_EQ(od_dice_from_prime(nullptr, "35x", 0, &raw), OD_INVALID_ARGUMENT);
  EXPECT_EQ(od_dice_classify(nullptr, "7", "3", &raw), OD_INVALID_SUPPORT);
  EXPECT_EQ(od_dice_list(nullptr, 3, nullptr), OD_INVALID_ARGUMENT);
}

TEST(CApi, CoprimeCount) {
  std::uint64_t count = 0;
  ASSERT_EQ(od_count_coprime23_u64(10, 0, &count), OD_OK);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(od_count_coprime23_u64(4, 0, &count), OD_DOMAIN_TOO_SMALL);
}

TEST(CApi, DecimalThinningParameterWarns) {
  od_result* raw = nullptr;
  ASSERT_EQ(od_law_moments(nullptr, "96", "132", "0.5", 2, &raw), OD_OK);
  Result r(raw);
  EXPECT_EQ(od_result_warning_count(r.get()), 1u);
  EXPECT_EQ(od_result_warning(r.get(), 5), nullptr);
  ASSERT_EQ(od_law_moments(nullptr, "96", "132", "1/2", 2, &raw), OD_OK);
  Result exact(raw);
  EXPECT_EQ(od_result_warning_count(exact.get()), 0u);
}

TEST(CApi, HugeIntegersAreSummarized) {
  od_result* raw = nullptr;
  ASSERT_EQ(od_dice_from_prime(nullptr, "2^4423-1", 0, &raw), OD_OK);
  Result r(raw);
  const Json j = payload(r.get());
  ASSERT_TRUE(j["p"].is_object());
  EXPECT_EQ(j["p"]["digits"], 1332);

  auto opts = make_options();
  ASSERT_EQ(od_options_set_full_integers(opts.get(), 0), OD_OK);
  ASSERT_EQ(od_dice_from_prime(opts.get(), "2^4423-1", 0, &raw), OD_OK);
  Result full(raw);
  EXPECT_EQ(payload(full.get())["p"].get<std::string>().size(), 1332u);
}

TEST(CApi, RationalsCarryBothForms) {
  od_result* raw = nullptr;
  ASSERT_EQ(od_cards_table(nullptr, "1", "6", &raw), OD_OK);
  Result r(raw);
  const std::string text = od_result_json(r.get());
  EXPECT_NE(text.find("-343/192"), std::string::npos);
  EXPECT_NE(text.find("decimal"), std::string::npos);
}

TEST(CApi, ThreadsDoNotChangeOutput) {
  const char* fs[] = {"x", "x2"};
  auto one = make_options();
  auto four = make_options();
  od_options_set_threads(four.get(), 4);
  od_result* a = nullptr;
  od_result* b = nullptr;
  ASSERT_EQ(od_sim_estimate(one.get(), "die:0:36@gaussian:1", fs, 2, 40000, 3, &a), OD_OK);
  ASSERT_EQ(od_sim_estimate(four.get(), "die:0:36@gaussian:1", fs, 2, 40000, 3, &b), OD_OK);
  Result ra(a), rb(b);
  EXPECT_STREQ(od_result_json(ra.get()), od_result_json(rb.get()));
}

TEST(CApi, OptionValidation) {
  auto o = make_options();
  EXPECT_EQ(od_options_set_threads(o.get(), 0), OD_INVALID_ARGUMENT);
  EXPECT_EQ(od_options_set_tail_tol(o.get(), -1.0), OD_INVALID_ARGUMENT);
  EXPECT_EQ(od_options_set_grid_size(o.get(), 1), OD_INVALID_ARGUMENT);
  EXPECT_EQ(od_options_set_threads(nullptr, 2), OD_INVALID_ARGUMENT);
}

TEST(CApi, GravityDefaults) {
  od_gravity_params params;
  od_gravity_params_init(&params);
  EXPECT_EQ(params.density, OD_DENSITY_GAUSSIAN);
  EXPECT_DOUBLE_EQ(params.mass_mean, 4.0);
  od_result* raw = nullptr;
  ASSERT_EQ(od_gravity(nullptr, &params, "1", "6", 1000, 1, &raw), OD_OK);
  Result r(raw);
  EXPECT_EQ(payload(r.get())["estimator"], "stc");
  params.soften_inside = 0;
  params.z[0] = 0.0;
  EXPECT_EQ(od_gravity(nullptr, &params, "1", "6", 1000, 1, &raw),
            OD_SINGULAR_EVALUATION_POINT);
}

TEST(CApi, PolyReportTables) {
  const char* ls[] = {"17", "19"};
  const unsigned ps[] = {2};
  od_result* raw = nullptr;
  ASSERT_EQ(od_poly_report(nullptr, "17", ls, 2, 3, ps, 1, &raw), OD_OK);
  Result r(raw);
  const Json j = payload(r.get());
  EXPECT_EQ(j["tables"]["distances"]["rows"].size(), 2u);
  EXPECT_EQ(j["default_table"], "distances");
}

TEST(CApi, DestroyAcceptsNull) {
  od_result_destroy(nullptr);
  od_options_destroy(nullptr);
  EXPECT_EQ(od_result_json(nullptr), nullptr);
}

}  // namespace
