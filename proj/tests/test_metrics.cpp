// Copyright 2026 The Fidelis Authors
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
#include <sstream>

#include <nlohmann/json.hpp>

#include "fidelis/errors.hpp"
#include "fidelis/metrics.hpp"
#include "reference.hpp"

namespace fidelis {
namespace {

TEST(Metrics, HandComputed) {
  const std::vector<double> meas{0.2, 0.4, 0.6, 0.8};
  const std::vector<double> pred{0.25, 0.35, 0.65, 0.9};
  const auto r = compute_metrics(pred, meas);
  EXPECT_EQ(r.n, 4u);
  EXPECT_NEAR(r.mae, 0.0625, 1e-15);
  EXPECT_NEAR(r.mse, 0.004375, 1e-15);
  ASSERT_TRUE(r.r2.has_value());
  EXPECT_NEAR(*r.r2, 0.9125, 1e-13);
  ASSERT_TRUE(r.pearson.has_value());
  EXPECT_NEAR(*r.pearson, 0.9831516221681362, 1e-13);
}

TEST(Metrics, NegativeRSquared) {
  const std::vector<double> meas{0.9, 0.8, 0.7};
  const std::vector<double> pred{0.7, 0.8, 0.9};
  const auto r = compute_metrics(pred, meas);
  EXPECT_NEAR(r.mae, 0.4 / 3, 1e-15);
  EXPECT_NEAR(r.mse, 0.08 / 3, 1e-15);
  EXPECT_NEAR(*r.r2, -3.0, 1e-12);
  EXPECT_NEAR(*r.pearson, -1.0, 1e-12);
}

TEST(Metrics, PerfectPrediction) {
  const std::vector<double> v{0.1, 0.5, 0.7};
  const auto r = compute_metrics(v, v);
  EXPECT_EQ(r.mae, 0.0);
  EXPECT_EQ(r.mse, 0.0);
  EXPECT_DOUBLE_EQ(*r.r2, 1.0);
  EXPECT_NEAR(*r.pearson, 1.0, 1e-15);
}

TEST(Metrics, MatchesBruteForce) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 200;
    std::vector<double> pred(n), meas(n);
    for (std::size_t i = 0; i < n; ++i) {
      meas[i] = u(rng);
      pred[i] = std::clamp(meas[i] + 0.3 * (u(rng) - 0.5), 0.0, 1.0);
    }
    const auto ours = compute_metrics(pred, meas);
    const auto ref = testing::reference_metrics(pred, meas);
    EXPECT_NEAR(ours.mae, ref.mae, 1e-12);
    EXPECT_NEAR(ours.mse, ref.mse, 1e-12);
    EXPECT_NEAR(*ours.r2, ref.r2, 1e-12);
    EXPECT_NEAR(*ours.pearson, ref.pearson, 1e-12);
  }
}

TEST(Metrics, DegenerateVariance) {
  const std::vector<double> flat{0.5, 0.5, 0.5};
  const std::vector<double> pred{0.4, 0.5, 0.6};
  const auto r = compute_metrics(pred, flat);
  EXPECT_FALSE(r.r2.has_value());
  EXPECT_FALSE(r.pearson.has_value());
  EXPECT_FALSE(r.note.empty());
  EXPECT_NEAR(r.mae, 0.2 / 3, 1e-15);
  EXPECT_THROW(compute_metrics_strict(pred, flat), DegenerateVarianceError);

  const auto s = compute_metrics(flat, pred);
  EXPECT_TRUE(s.r2.has_value());
  EXPECT_FALSE(s.pearson.has_value());
}

TEST(Metrics, InputErrors) {
  const std::vector<double> one{0.5}, two{0.5, 0.6};
  EXPECT_THROW(compute_metrics(one, one), InputError);
  EXPECT_THROW(compute_metrics(one, two), InputError);
}

TEST(Metrics, RecordsCsvRoundTripAndGrouping) {
  std::vector<PredictionRecord> recs{
      {"a", 2, 10, "proposed", 0.9, 0.91},
      {"b", 3, 20, "proposed", 0.8, 0.78},
      {"a", 2, 10, "esp", 0.85, 0.91},
      {"b", 3, 20, "esp", 0.7, 0.78},
      {"c", 4, 30, "esp", 0.6, 0.66},
  };
  std::stringstream ss;
  write_prediction_records(ss, recs);
  const auto back = read_prediction_records(ss);
  ASSERT_EQ(back.size(), recs.size());
  EXPECT_EQ(back[4].circuit_id, "c");
  EXPECT_EQ(back[4].n_gates, 30u);
  EXPECT_DOUBLE_EQ(back[1].measured, 0.78);

  const auto by = compute_metrics_by_method(back);
  ASSERT_EQ(by.size(), 2u);
  EXPECT_EQ(by.at("esp").n, 3u);
  EXPECT_EQ(by.at("proposed").n, 2u);
}

TEST(Metrics, MalformedRowNamesLine) {
  std::istringstream in(
      "circuit_id,n_qubits,n_gates,method,predicted,measured\n"
      "a,2,10,esp,0.9,0.9\n"
      "b,2,ten,esp,0.9,0.9\n");
  try {
    read_prediction_records(in);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream header("id,n,g,m,p,q\n");
  EXPECT_THROW(read_prediction_records(header), InputError);
  std::istringstream range(
      "circuit_id,n_qubits,n_gates,method,predicted,measured\na,1,1,x,1.5,0.2\n");
  EXPECT_THROW(read_prediction_records(range), InputError);
  std::istringstream fields(
      "circuit_id,n_qubits,n_gates,method,predicted,measured\na,1,1,x,0.5\n");
  EXPECT_THROW(read_prediction_records(fields), InputError);
}

TEST(Metrics, JsonShape) {
  const std::vector<double> flat{0.5, 0.5};
  const std::vector<double> pred{0.4, 0.6};
  const auto j = nlohmann::json::parse(metrics_to_json(compute_metrics(pred, flat)));
  EXPECT_TRUE(j.at("r2").is_null());
  EXPECT_TRUE(j.at("pearson").is_null());
  EXPECT_EQ(j.at("n").get<int>(), 2);
  EXPECT_NEAR(j.at("mae").get<double>(), 0.1, 1e-15);
}

} // namespace
} // namespace fidelis
