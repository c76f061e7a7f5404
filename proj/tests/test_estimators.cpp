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

#include "fidelis/calibration.hpp"
#include "fidelis/errors.hpp"
#include "fidelis/estimators.hpp"

namespace fidelis {
namespace {

const CalibrationData& uniform_device() {
  static const auto calib =
      load_calibration_file(FIDELIS_TEST_DATA_DIR "/uniform_1e-3_5e-3.json");
  return calib;
}

TEST(Proposed, GhzFrozen) {
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  const auto est = estimate_proposed(generate_ghz(3), calib);
  EXPECT_EQ(est.method, Method::Proposed);
  EXPECT_NEAR(est.value, 0.99052732435013028949, 1e-15);
  EXPECT_NEAR(est.lower, 0.989034975, 1e-15);
  EXPECT_NEAR(est.upper, 0.99202076830873003997, 1e-15);
  ASSERT_EQ(est.per_qubit.size(), 3u);
  EXPECT_LT(est.lower, est.value);
  EXPECT_LT(est.value, est.upper);
}

TEST(Proposed, SingleQubitGatesOnly) {
  Circuit c(2);
  c.append(GateKind::H, {0}).append(GateKind::X, {0});
  const auto calib = CalibrationData::uniform(0.01, 0.0);
  EstimatorConfig cfg;
  cfg.p_ent = 1.0;
  EXPECT_NEAR(estimate_proposed(c, calib, cfg).value, 0.99 * 0.99, 1e-15);
  cfg.p_ent = 0.0;
  const double one = 0.99 + 0.005;
  EXPECT_NEAR(estimate_proposed(c, calib, cfg).value, 0.99 * one + 0.005, 1e-15);
}

TEST(Proposed, CoherenceFrozen) {
  EstimatorConfig cfg;
  cfg.include_coherence = true;
  const auto est = estimate_proposed(generate_ghz(3), uniform_device(), cfg);
  EXPECT_NEAR(est.value, 0.96514963878978051575, 1e-14);
  EXPECT_LT(est.lower, est.value);
  EXPECT_GT(est.upper, est.value);
}

TEST(Proposed, NoiselessIsExactlyOne) {
  const auto calib = CalibrationData::uniform(0, 0);
  const auto est = estimate_proposed(generate_qft(6), calib);
  EXPECT_EQ(est.value, 1.0);
  EXPECT_EQ(est.lower, 1.0);
  EXPECT_EQ(est.upper, 1.0);
}

TEST(Proposed, MeasurementMultipliesReadout) {
  auto c = generate_ghz(3);
  c.measure(0).measure(2);
  EstimatorConfig cfg;
  const double base = estimate_proposed(c, uniform_device(), cfg).value;
  cfg.include_measurement = true;
  EXPECT_NEAR(estimate_proposed(c, uniform_device(), cfg).value,
              base * 0.98 * 0.985, 1e-15);
}

TEST(Proposed, MonotoneInPent) {
  const auto calib = CalibrationData::uniform(2e-3, 1e-2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = generate_random({5, 200, 0.3, seed});
    double prev = 2.0;
    for (double p_ent : {0.0, 0.1, 0.3, 0.5, 0.8, 1.0}) {
      EstimatorConfig cfg;
      cfg.p_ent = p_ent;
      const auto est = estimate_proposed(c, calib, cfg);
      EXPECT_LE(est.value, prev);
      EXPECT_GE(est.value, est.lower);
      EXPECT_LE(est.value, est.upper);
      prev = est.value;
    }
  }
}

TEST(Proposed, MonotoneInGateError) {
  const auto c = generate_qft(5);
  double prev = 1.0;
  for (double p2 = 1e-4; p2 < 0.05; p2 *= 2) {
    const double v = estimate_proposed(c, CalibrationData::uniform(1e-4, p2)).value;
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Proposed, BoundsWidth) {
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  const auto c = generate_qft(4);
  const auto est = estimate_proposed(c, calib);
  EXPECT_DOUBLE_EQ(estimate_bounds_width(c, calib), est.upper - est.lower);
  EXPECT_GT(est.upper - est.lower, 0.0);
}

TEST(Esp, FrozenAndFlat) {
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  const auto est = estimate_esp(generate_ghz(3), calib);
  EXPECT_NEAR(est.value, 0.99201780546875, 1e-15);
  EXPECT_EQ(est.lower, est.value);
  EXPECT_EQ(est.upper, est.value);
  EXPECT_TRUE(est.per_qubit.empty());
}

TEST(Esp, CoherenceAndMeasurementFrozen) {
  auto c = generate_ghz(3);
  c.measure_all();
  EstimatorConfig cfg;
  cfg.include_coherence = true;
  cfg.include_measurement = true;
  EXPECT_NEAR(estimate_esp(c, uniform_device(), cfg).value,
              0.90506326747035274485, 1e-14);
}

TEST(Qva, FrozenAndDegenerate) {
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  const auto c = generate_ghz(3);
  const auto est = estimate_qva(c, calib);
  EXPECT_NEAR(est.value, 0.98830122626083953857, 1e-15);
  EXPECT_LE(est.lower, est.value);
  EXPECT_EQ(est.upper, estimate_esp(c, calib).value);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = generate_random({4, 150, 0.4, seed});
    EstimatorConfig cfg;
    cfg.qva_w = 0.0;
    EXPECT_EQ(estimate_qva(r, calib, cfg).value, estimate_esp(r, calib, cfg).value);
  }
}

TEST(Estimators, Dispatch) {
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  const auto c = generate_ghz(4);
  for (auto m : {Method::Proposed, Method::ESP, Method::QVA}) {
    EXPECT_EQ(estimate(m, c, calib).method, m);
  }
  EXPECT_EQ(method_name(Method::QVA), "qva");
}

TEST(Estimators, Errors) {
  const auto c = generate_ghz(3);
  EstimatorConfig bad;
  bad.p_ent = 1.5;
  EXPECT_THROW(estimate_proposed(c, CalibrationData::uniform(0, 0), bad), InputError);
  bad = {};
  bad.qva_w = -0.1;
  EXPECT_THROW(estimate_qva(c, CalibrationData::uniform(0, 0), bad), InputError);

  const CalibrationData empty({}, {});
  EXPECT_THROW(estimate_proposed(c, empty), MissingCalibrationError);
  EXPECT_THROW(estimate_esp(c, empty), MissingCalibrationError);

  EstimatorConfig coh;
  coh.include_coherence = true;
  EXPECT_THROW(estimate_proposed(c, CalibrationData::uniform(0, 0), coh),
               MissingCalibrationError);
}

TEST(Estimators, ValuesStayInUnitInterval) {
  const auto calib = CalibrationData::uniform(0.2, 0.5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = generate_random({6, 400, 0.5, seed});
    for (auto m : {Method::Proposed, Method::ESP, Method::QVA}) {
      const auto est = estimate(m, c, calib);
      EXPECT_GE(est.lower, 0.0);
      EXPECT_LE(est.upper, 1.0);
    }
  }
}

} // namespace
} // namespace fidelis
