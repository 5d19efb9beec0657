// Copyright 2026 The sncqa-bench Authors
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

#include <cstdint>
#include <filesystem>
#include <string>

#include "sncqa/sncqa.h"

namespace {

std::string temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("sncqa_capi_" + name);
  std::filesystem::remove_all(dir);
  return dir.string();
}

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(sncqa_version(), "");
  EXPECT_STREQ(sncqa_status_string(SNCQA_OK), "ok");
  for (int s = SNCQA_OK; s <= SNCQA_NOT_CONVERGED; ++s) {
    EXPECT_STRNE(sncqa_status_string(static_cast<sncqa_status>(s)), "");
  }
}

TEST(CApi, ExactEnergy) {
  double e = 0;
  ASSERT_EQ(sncqa_exact_energy(2, 2, 1.0, 0.0, &e), SNCQA_OK);
  EXPECT_NEAR(e, -8.0, 1e-10);
  ASSERT_EQ(sncqa_exact_energy(1, 2, 1.0, 0.0, &e), SNCQA_OK);
  EXPECT_NEAR(e, -3.0, 1e-12);
  EXPECT_EQ(sncqa_exact_energy(1, 1, 1.0, 0.0, &e), SNCQA_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(sncqa_last_error(), "");
  EXPECT_EQ(sncqa_exact_energy(1, 17, 1.0, 0.0, &e), SNCQA_ERR_CAPACITY);
  EXPECT_EQ(sncqa_exact_energy(2, 2, 1.0, 0.0, nullptr), SNCQA_ERR_INVALID_ARGUMENT);
}

TEST(CApi, IrrepDimensionBuffer) {
  char buf[64];
  size_t needed = 0;
  ASSERT_EQ(sncqa_irrep_dim(12, 6, buf, sizeof buf, &needed), SNCQA_OK);
  EXPECT_STREQ(buf, "132");
  EXPECT_EQ(needed, 3u);
  ASSERT_EQ(sncqa_irrep_dim(100, 50, nullptr, 0, &needed), SNCQA_OK);
  EXPECT_EQ(needed, 28u);
  char small[4];
  ASSERT_EQ(sncqa_irrep_dim(100, 50, small, sizeof small, &needed), SNCQA_OK);
  EXPECT_EQ(std::string(small).size(), 3u);
  EXPECT_EQ(sncqa_irrep_dim(4, 3, buf, sizeof buf, &needed), SNCQA_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ConfigErrors) {
  sncqa_config* cfg = nullptr;
  EXPECT_EQ(sncqa_config_from_json("{\"ansatz\": {\"layerz\": 1}}", &cfg), SNCQA_ERR_CONFIG);
  EXPECT_EQ(cfg, nullptr);
  EXPECT_NE(std::string(sncqa_last_error()).find("unknown key"), std::string::npos);
  EXPECT_EQ(sncqa_config_from_json("{", &cfg), SNCQA_ERR_CONFIG);
  EXPECT_EQ(sncqa_config_from_file("/nonexistent.json", &cfg), SNCQA_ERR_CONFIG);
  EXPECT_EQ(sncqa_config_from_json(nullptr, &cfg), SNCQA_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ConfigJsonIsResolved) {
  sncqa_config* cfg = nullptr;
  ASSERT_EQ(sncqa_config_default(&cfg), SNCQA_OK);
  const std::string text = sncqa_config_json(cfg);
  EXPECT_NE(text.find("\"yjm_sample_count\": 3"), std::string::npos) << text;
  sncqa_config* again = nullptr;
  ASSERT_EQ(sncqa_config_from_json(text.c_str(), &again), SNCQA_OK);
  EXPECT_EQ(std::string(sncqa_config_json(again)), text);
  sncqa_config_free(again);
  sncqa_config_free(cfg);
}

TEST(CApi, RunExactAndVqe) {
  sncqa_config* cfg = nullptr;
  ASSERT_EQ(sncqa_config_default(&cfg), SNCQA_OK);
  const auto dir = temp_dir("run");
  sncqa_run_options opts;
  sncqa_run_options_init(&opts);
  opts.out_dir = dir.c_str();
  sncqa_result* res = nullptr;
  ASSERT_EQ(sncqa_run(cfg, "exact", &opts, &res), SNCQA_OK) << sncqa_last_error();
  EXPECT_NE(std::string(sncqa_result_summary(res)).find("\"energy\": -8"), std::string::npos);
  ASSERT_EQ(sncqa_result_file_count(res), 1u);
  EXPECT_TRUE(std::filesystem::exists(sncqa_result_file(res, 0)));
  EXPECT_EQ(sncqa_result_file(res, 5), nullptr);
  sncqa_result_free(res);

  const uint64_t seeds[] = {1};
  opts.seeds = seeds;
  opts.num_seeds = 1;
  opts.require_converged = 1;
  ASSERT_EQ(sncqa_run(cfg, "vqe", &opts, &res), SNCQA_OK) << sncqa_last_error();
  EXPECT_EQ(sncqa_result_converged(res), 1);
  sncqa_result_free(res);

  EXPECT_EQ(sncqa_run(cfg, "bogus", &opts, &res), SNCQA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(res, nullptr);
  opts.num_seeds = 0;
  EXPECT_EQ(sncqa_run(cfg, "vqe", &opts, &res), SNCQA_ERR_CONFIG);
  sncqa_config_free(cfg);
  std::filesystem::remove_all(dir);
}

TEST(CApi, NotConvergedStatus) {
  sncqa_config* cfg = nullptr;
  ASSERT_EQ(sncqa_config_from_json("{\"optimizer\": {\"max_iters\": 1, \"epsilon\": 1e-9, \"seeds\": [1]}}", &cfg),
            SNCQA_OK);
  const auto dir = temp_dir("nc");
  sncqa_run_options opts;
  sncqa_run_options_init(&opts);
  opts.out_dir = dir.c_str();
  opts.require_converged = 1;
  sncqa_result* res = nullptr;
  EXPECT_EQ(sncqa_run(cfg, "vqe", &opts, &res), SNCQA_NOT_CONVERGED);
  ASSERT_NE(res, nullptr);
  EXPECT_EQ(sncqa_result_converged(res), 0);
  sncqa_result_free(res);
  sncqa_config_free(cfg);
  std::filesystem::remove_all(dir);
}

TEST(CApi, NullHandlesAreSafe) {
  sncqa_config_free(nullptr);
  sncqa_result_free(nullptr);
  EXPECT_EQ(sncqa_result_file_count(nullptr), 0u);
  sncqa_result* res = nullptr;
  EXPECT_EQ(sncqa_run(nullptr, "exact", nullptr, &res), SNCQA_ERR_INVALID_ARGUMENT);
}
