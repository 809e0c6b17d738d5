// Copyright 2026 The Authors.
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

// Exercises the exported C surface of the shared library.

#include "submod/c_api.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace {

const double kWorked[] = {3, 1, 0, 0, 2, 2, 1, 0, 4};

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(submod_facility_create(kWorked, 3, 3, &f_), SUBMOD_OK);
  }
  void TearDown() override { submod_function_destroy(f_); }

  submod_function_t f_ = nullptr;
};

TEST_F(CApiTest, InfoAndEvaluate) {
  submod_instance_info_t info{};
  ASSERT_EQ(submod_function_info(f_, &info), SUBMOD_OK);
  EXPECT_EQ(info.kind, SUBMOD_KIND_FACILITY);
  EXPECT_EQ(info.rows, 3u);
  EXPECT_EQ(info.cols, 3u);

  double value = -1;
  ASSERT_EQ(submod_evaluate(f_, nullptr, 0, &value), SUBMOD_OK);
  EXPECT_EQ(value, 0.0);
  const size_t two[] = {0, 2};
  ASSERT_EQ(submod_evaluate(f_, two, 2, &value), SUBMOD_OK);
  EXPECT_EQ(value, 9.0);

  double gain = -1;
  const size_t base[] = {2};
  ASSERT_EQ(submod_marginal_gain(f_, base, 1, 0, &gain), SUBMOD_OK);
  EXPECT_EQ(gain, 3.0);
}

TEST_F(CApiTest, ErrorsCarryStatusAndMessage) {
  const size_t bad[] = {7};
  double value = 0;
  EXPECT_EQ(submod_evaluate(f_, bad, 1, &value), SUBMOD_ERR_DOMAIN);
  EXPECT_NE(std::string(submod_last_error()).find("7"), std::string::npos);
  EXPECT_EQ(submod_evaluate(nullptr, bad, 1, &value), SUBMOD_ERR_ARGUMENT);

  submod_function_t g = nullptr;
  const double negative[] = {1, -1};
  EXPECT_EQ(submod_facility_create(negative, 1, 2, &g), SUBMOD_ERR_DOMAIN);
  EXPECT_EQ(g, nullptr);
  EXPECT_EQ(submod_function_load("/nonexistent.csv", SUBMOD_KIND_INFER, 0, &g),
            SUBMOD_ERR_PARSE);
  EXPECT_STREQ(submod_status_string(SUBMOD_ERR_CAPABILITY), "capability error");
}

TEST_F(CApiTest, SolveAllAlgorithms) {
  submod_solve_options_t options{};
  options.k = 2;
  options.algorithm = SUBMOD_ALGO_GREEDY;
  submod_result_t r = nullptr;
  ASSERT_EQ(submod_solve(f_, &options, &r), SUBMOD_OK);
  EXPECT_EQ(submod_result_evaluations(r), 5u);
  EXPECT_EQ(submod_result_objective(r), 9.0);
  submod_step_t step{};
  ASSERT_EQ(submod_result_step(r, 0, &step), SUBMOD_OK);
  EXPECT_EQ(step.element, 2u);
  EXPECT_EQ(submod_result_step(r, 2, &step), SUBMOD_ERR_ARGUMENT);
  submod_result_destroy(r);

  options.algorithm = SUBMOD_ALGO_LAZY;
  ASSERT_EQ(submod_solve(f_, &options, &r), SUBMOD_OK);
  EXPECT_EQ(submod_result_evaluations(r), 4u);
  submod_result_destroy(r);

  options.algorithm = SUBMOD_ALGO_STOCHASTIC;
  EXPECT_EQ(submod_solve(f_, &options, &r), SUBMOD_ERR_ARGUMENT);
  options.epsilon = 0.5;
  ASSERT_EQ(submod_solve(f_, &options, &r), SUBMOD_OK);
  EXPECT_EQ(submod_result_sample_size(r), 2u);
  EXPECT_EQ(submod_result_evaluations(r), 4u);
  submod_result_destroy(r);
  options.epsilon = 1.5;
  EXPECT_EQ(submod_solve(f_, &options, &r), SUBMOD_ERR_DOMAIN);

  options.algorithm = SUBMOD_ALGO_GREEDY;
  options.k = 5;
  EXPECT_EQ(submod_solve(f_, &options, &r), SUBMOD_ERR_DOMAIN);
  EXPECT_NE(std::string(submod_last_error()).find("k exceeds ground set size"),
            std::string::npos);

  size_t s = 0;
  ASSERT_EQ(submod_sample_size(100, 10, 0.1, &s), SUBMOD_OK);
  EXPECT_EQ(s, 24u);
}

TEST_F(CApiTest, OracleAndGap) {
  submod_oracle_t o = nullptr;
  ASSERT_EQ(submod_oracle_run(f_, 2, 0, &o), SUBMOD_OK);
  EXPECT_EQ(submod_oracle_value(o), 9.0);
  EXPECT_EQ(submod_oracle_sets_evaluated(o), 3u);
  size_t best[2];
  ASSERT_EQ(submod_oracle_best_set(o, best, 2), SUBMOD_OK);
  EXPECT_EQ(best[0], 0u);
  EXPECT_EQ(best[1], 2u);
  EXPECT_EQ(submod_oracle_best_set(o, best, 1), SUBMOD_ERR_ARGUMENT);

  submod_solve_options_t options{};
  options.k = 2;
  submod_result_t r = nullptr;
  ASSERT_EQ(submod_solve(f_, &options, &r), SUBMOD_OK);
  double deltas[3];
  double ratios[2];
  int defined[2];
  int holds = 0;
  ASSERT_EQ(submod_gap_diagnostic(r, o, deltas, ratios, defined, &holds),
            SUBMOD_OK);
  EXPECT_EQ(deltas[0], 9.0);
  EXPECT_EQ(deltas[1], 3.0);
  EXPECT_EQ(deltas[2], 0.0);
  EXPECT_EQ(defined[0], 1);
  EXPECT_EQ(holds, 1);
  submod_result_destroy(r);
  submod_oracle_destroy(o);

  EXPECT_EQ(submod_oracle_run(f_, 2, 2, &o), SUBMOD_ERR_CAPABILITY);
}

TEST(CApiCheckTest, WitnessRoundTrip) {
  const double ones[] = {1, 1, 1};
  submod_function_t f = nullptr;
  ASSERT_EQ(submod_weights_create(SUBMOD_KIND_SQUARED, ones, 3, &f), SUBMOD_OK);
  submod_report_t rep = nullptr;
  ASSERT_EQ(submod_check(f, SUBMOD_PROP_SUBMODULAR_DERIVATIVE,
                         SUBMOD_MODE_EXHAUSTIVE, 0, 0, &rep),
            SUBMOD_OK);
  EXPECT_EQ(submod_report_holds(rep), 0);
  ASSERT_EQ(submod_report_has_witness(rep), 1);
  submod_witness_info_t w{};
  ASSERT_EQ(submod_report_witness(rep, &w), SUBMOD_OK);
  EXPECT_EQ(w.has_b, 1);
  EXPECT_EQ(w.has_element, 1);
  EXPECT_EQ(w.b_size, 2u);
  std::vector<size_t> b(w.b_size);
  ASSERT_EQ(submod_report_witness_set(rep, 1, b.data(), b.size()), SUBMOD_OK);
  int reproduces = 0;
  ASSERT_EQ(submod_report_reproduces(rep, f, &reproduces), SUBMOD_OK);
  EXPECT_EQ(reproduces, 1);
  submod_report_destroy(rep);

  const double wide[14] = {};
  submod_function_t g = nullptr;
  ASSERT_EQ(submod_weights_create(SUBMOD_KIND_MODULAR, wide, 14, &g), SUBMOD_OK);
  EXPECT_EQ(submod_check(g, SUBMOD_PROP_SUBMODULAR_INTERSECTION,
                         SUBMOD_MODE_EXHAUSTIVE, 0, 0, &rep),
            SUBMOD_ERR_CAPABILITY);
  ASSERT_EQ(submod_check(g, SUBMOD_PROP_MONOTONE, SUBMOD_MODE_SAMPLED, 100, 1,
                         &rep),
            SUBMOD_OK);
  EXPECT_EQ(submod_report_holds(rep), 1);
  EXPECT_EQ(submod_report_pairs_checked(rep), 100u);
  submod_witness_info_t none{};
  EXPECT_EQ(submod_report_witness(rep, &none), SUBMOD_ERR_ARGUMENT);
  submod_report_destroy(rep);
  submod_function_destroy(g);
  submod_function_destroy(f);
}

TEST_F(CApiTest, Telescoping) {
  const size_t h[] = {2, 0};
  double residual = -1;
  double scale = 0;
  ASSERT_EQ(submod_telescoping_residual(f_, nullptr, 0, h, 2, &residual, &scale),
            SUBMOD_OK);
  EXPECT_EQ(residual, 0.0);
  EXPECT_EQ(scale, 9.0);
  const size_t dup[] = {1, 1};
  EXPECT_EQ(submod_telescoping_residual(f_, nullptr, 0, dup, 2, &residual,
                                        nullptr),
            SUBMOD_ERR_DOMAIN);
}

TEST(CApiLoadTest, LabelsFromHeader) {
  const auto path =
      std::filesystem::temp_directory_path() / "submod_capi_labels.csv";
  std::ofstream(path) << "x,y\n1,2\n";
  submod_function_t f = nullptr;
  ASSERT_EQ(submod_function_load(path.c_str(), SUBMOD_KIND_INFER, 1, &f),
            SUBMOD_OK);
  const char* label = nullptr;
  int has_labels = 0;
  ASSERT_EQ(submod_function_label(f, 1, &label, &has_labels), SUBMOD_OK);
  EXPECT_STREQ(label, "y");
  EXPECT_EQ(has_labels, 1);
  EXPECT_EQ(submod_function_label(f, 2, &label, &has_labels), SUBMOD_ERR_DOMAIN);
  submod_function_destroy(f);
  std::filesystem::remove(path);
}

}  // namespace
