// Copyright 2026 The cookstate Authors
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

#include <cmath>

#include "cookstate/recognizer.hpp"
#include "oracles.hpp"

namespace cookstate {
namespace {

// Degree series over t = 0..120 s whose least-squares slope is `slope`.
DegreeSeries line_with_slope(const std::string& id, double slope) {
  DegreeSeries s{id, {}, SeriesMode::continuous};
  for (int t = 0; t <= 120; ++t) s.points.push_back({double(t), 0.5 + slope * (t - 60)});
  return s;
}

std::map<std::string, DegreeSeries> candidates_from(const std::map<std::string, double>& slopes) {
  std::map<std::string, DegreeSeries> out;
  for (const auto& [id, slope] : slopes) out.emplace(id, line_with_slope(id, slope));
  return out;
}

RecognizerProfile profile(double threshold, int window, int min_consecutive) {
  RecognizerProfile p;
  p.prompt_pair = {"p", "pos", "neg", TemplateForm::A_simple, GazeArea::entire_vessel};
  p.smoothing = Smoothing::sma(window);
  p.threshold = threshold;
  p.detection_policy.min_consecutive = min_consecutive;
  return p;
}

DegreeSeries values(std::vector<double> v) {
  DegreeSeries s{"v", {}, SeriesMode::continuous};
  for (std::size_t i = 0; i < v.size(); ++i) s.points.push_back({double(i) * 2.0, v[i]});
  return s;
}

TEST(SelectPrompt, VaporizationEntirePotRowsChooseB) {
  const auto ranking = select_prompt(candidates_from(
      {{"(a)-entire", 0.00175}, {"(b)-entire", 0.00331}, {"(c)-entire", 0.00089}, {"(d)-entire", 0.00202}}));
  EXPECT_EQ(ranking.chosen, "(b)-entire");
  ASSERT_EQ(ranking.entries.size(), 4u);
  EXPECT_EQ(ranking.entries[1].prompt_pair_id, "(d)-entire");
  EXPECT_EQ(ranking.entries[3].prompt_pair_id, "(c)-entire");
  EXPECT_NEAR(ranking.entries[0].fit.slope, 0.00331, 1e-12);
}

TEST(SelectPrompt, VaporizationContentsRowsChooseA) {
  const auto ranking = select_prompt(candidates_from({{"(a)-contents", 0.00233},
                                                      {"(b)-contents", 0.00082},
                                                      {"(c)-contents", -0.00104},
                                                      {"(d)-contents", -0.00002}}));
  EXPECT_EQ(ranking.chosen, "(a)-contents");
  EXPECT_EQ(ranking.entries.back().prompt_pair_id, "(c)-contents");
}

TEST(SelectPrompt, SingleCandidateAndTies) {
  EXPECT_EQ(select_prompt(candidates_from({{"only", -0.01}})).chosen, "only");
  const auto tie = select_prompt(candidates_from({{"zeta", 0.002}, {"alpha", 0.002}, {"mid", 0.001}}));
  EXPECT_EQ(tie.chosen, "alpha");
  EXPECT_EQ(tie.entries[1].prompt_pair_id, "zeta");
}

TEST(SelectPrompt, ErrorsNameTheCandidate) {
  std::map<std::string, DegreeSeries> c = candidates_from({{"good", 0.001}});
  c.emplace("bad", DegreeSeries{"bad", {{1.0, 0.3}}, SeriesMode::continuous});
  try {
    select_prompt(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'bad'"), std::string::npos);
  }
  EXPECT_THROW(select_prompt({}), Error);
}

TEST(SelectPrompt, FlatVersusRisingPrefersRising) {
  EXPECT_EQ(select_prompt(candidates_from({{"flat", 0.0}, {"rising", 0.003}})).chosen, "rising");
}

TEST(SelectPrompt, InvariantUnderCommonPositiveAffineTransform) {
  oracle::Random rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    std::map<std::string, DegreeSeries> c;
    for (int k = 0; k < 6; ++k) {
      const std::string id = "c" + std::to_string(k);
      auto s = rng.walk_series(80);
      s.prompt_pair_id = id;
      c.emplace(id, s);
    }
    const auto base = select_prompt(c);
    const double a = rng.uniform(0.05, 1.0);
    const double b = rng.uniform(0.0, 1.0 - a);
    for (auto& [id, s] : c) {
      for (auto& p : s.points) p.degree = a * p.degree + b;
    }
    const auto moved = select_prompt(c);
    ASSERT_EQ(moved.entries.size(), base.entries.size());
    EXPECT_EQ(moved.chosen, base.chosen);
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
      EXPECT_EQ(moved.entries[i].prompt_pair_id, base.entries[i].prompt_pair_id);
    }
  }
}

TEST(CalibrateThreshold, ConstantSeries) {
  DegreeSeries s{"c", {}, SeriesMode::continuous};
  for (int i = 0; i < 40; ++i) s.points.push_back({double(i), 0.7});
  for (double a : {9.0, 17.3, 39.0}) EXPECT_EQ(calibrate_threshold(s, Smoothing::sma(10), a), 0.7);
}

TEST(CalibrateThreshold, PredecessorSampleNoInterpolation) {
  DegreeSeries s{"p", {{1, 0.2}, {2, 0.4}, {3, 0.6}}, SeriesMode::continuous};
  EXPECT_EQ(calibrate_threshold(s, Smoothing::raw(), 2.5), 0.4);
  EXPECT_EQ(calibrate_threshold(s, Smoothing::raw(), 2.0), 0.4);
  EXPECT_EQ(calibrate_threshold(s, Smoothing::raw(), 3.0), 0.6);
}

TEST(CalibrateThreshold, SigmoidSessionMatchesNaiveScan) {
  oracle::Random rng(22);
  DegreeSeries s{"sig", {}, SeriesMode::continuous};
  for (int i = 0; i <= 240; ++i) {
    const double t = 0.5 * i;
    const double d = 0.1 + 0.8 / (1.0 + std::exp(-(t - 60.0) / 4.0)) + rng.normal(0.02);
    s.points.push_back({t, std::clamp(d, 0.0, 1.0)});
  }
  const auto smoothed = sma(s, 10);
  for (double a : {4.5, 4.7, 60.0, 61.3, 95.7, 120.0}) {
    double expected = NAN;
    for (const auto& p : smoothed.points) {
      if (p.t <= a) expected = p.degree;  // filter t <= a, keep the last
    }
    EXPECT_EQ(calibrate_threshold(s, Smoothing::sma(10), a), expected) << a;
  }
}

TEST(CalibrateThreshold, AnnotationInsideWarmUp) {
  DegreeSeries s{"c", {}, SeriesMode::continuous};
  for (int i = 0; i < 20; ++i) s.points.push_back({double(i), 0.5});
  try {
    calibrate_threshold(s, Smoothing::sma(10), 8.9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("annotation inside SMA warm-up"), std::string::npos);
  }
  EXPECT_THROW(calibrate_threshold(s, Smoothing::sma(10), 19.5), Error);
}

TEST(Calibrate, MeanOfSessionThresholds) {
  auto flat = [](double level) {
    DegreeSeries s{"f", {}, SeriesMode::continuous};
    for (int i = 0; i < 20; ++i) s.points.push_back({double(i), level});
    return s;
  };
  const std::vector<CalibrationSession> one{{"a", flat(0.6), 15.0}};
  EXPECT_EQ(calibrate(one, Smoothing::sma(10)),
            calibrate_threshold(flat(0.6), Smoothing::sma(10), 15.0));

  const std::vector<CalibrationSession> two{{"a", flat(0.6), 15.0}, {"b", flat(0.8), 12.0}};
  EXPECT_NEAR(calibrate(two, Smoothing::sma(10)), 0.7, 1e-15);

  const std::vector<CalibrationSession> same(5, CalibrationSession{"s", flat(0.55), 11.0});
  EXPECT_EQ(calibrate(same, Smoothing::sma(10)), 0.55);

  const std::vector<CalibrationSession> broken{{"good", flat(0.6), 15.0}, {"late", flat(0.6), 2.0}};
  try {
    calibrate(broken, Smoothing::sma(10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'late'"), std::string::npos);
  }
  EXPECT_THROW(calibrate({}, Smoothing::raw()), Error);
}

TEST(DetectChange, StepCrossing) {
  const auto s = values({0.1, 0.1, 0.9, 0.9});
  EXPECT_EQ(detect_change(s, profile(0.5, 1, 1)), s.points[2].t);
}

TEST(DetectChange, AllBelowThresholdIsNotDetected) {
  const auto s = values({0.1, 0.2, 0.3, 0.2});
  const auto detected = detect_change(s, profile(0.5, 1, 1));
  EXPECT_FALSE(detected);
  const auto report = evaluate("egg", detected, 139.0);
  EXPECT_EQ(report.status, DetectionStatus::not_detected);
  EXPECT_FALSE(report.diff_seconds);
}

TEST(DetectChange, RunLengthRequirement) {
  const auto s = values({0.9, 0.1, 0.9, 0.9, 0.1, 0.9, 0.9, 0.9});
  EXPECT_EQ(detect_change(s, profile(0.5, 1, 1)), 0.0);
  EXPECT_EQ(detect_change(s, profile(0.5, 1, 2)), 4.0);
  EXPECT_EQ(detect_change(s, profile(0.5, 1, 3)), 10.0);
  EXPECT_FALSE(detect_change(s, profile(0.5, 1, 4)));
}

TEST(DetectChange, SmoothingAppliedAndShortSeriesRejected) {
  const auto s = values({0.0, 0.0, 1.0, 1.0});
  // sma(2): 0, 0.5, 1 at t = 2, 4, 6.
  EXPECT_EQ(detect_change(s, profile(0.5, 2, 1)), 4.0);
  EXPECT_THROW(detect_change(s, profile(0.5, 10, 1)), Error);
}

TEST(DetectChange, DiscreteSeriesSkipsSmoothing) {
  auto s = values({0.1, 0.9, 0.9});
  s.mode = SeriesMode::discrete;
  EXPECT_EQ(detect_change(s, profile(0.5, 10, 1)), 2.0);
}

TEST(DetectChange, MatchesExhaustiveScanOnGrid) {
  oracle::Random rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const auto s = rng.walk_series(static_cast<std::size_t>(rng.integer(12, 80)));
    const double threshold = rng.uniform(0.2, 0.8);
    for (int w : {1, 5, 10}) {
      const auto smoothed = sma(s, w);
      for (int k : {1, 2, 3}) {
        const auto expected = oracle::exhaustive_first_crossing(smoothed.points, threshold, k);
        const auto got = detect_change(s, profile(threshold, w, k));
        ASSERT_EQ(got.has_value(), expected.has_value());
        if (got) EXPECT_EQ(*got, smoothed.points[*expected].t);
      }
    }
  }
}

TEST(DetectChange, MonotoneInThresholdAndRunLength) {
  oracle::Random rng(24);
  for (int rep = 0; rep < 200; ++rep) {
    const auto s = rng.walk_series(60);
    const double hi = rng.uniform(0.1, 0.9);
    const double lo = hi - rng.uniform(0.0, 0.1);
    const auto at_hi = detect_change(s, profile(hi, 5, 1));
    const auto at_lo = detect_change(s, profile(lo, 5, 1));
    if (at_hi) {
      ASSERT_TRUE(at_lo);
      EXPECT_LE(*at_lo, *at_hi);
    }
    const auto k1 = detect_change(s, profile(hi, 5, 1));
    const auto k3 = detect_change(s, profile(hi, 5, 3));
    if (k3) {
      ASSERT_TRUE(k1);
      EXPECT_GE(*k3, *k1);
    }
  }
}

TEST(DetectChange, CalibrationSessionDetectsNoLaterThanAnnotation) {
  DegreeSeries s{"rise", {}, SeriesMode::continuous};
  for (int i = 0; i <= 200; ++i) s.points.push_back({0.5 * i, std::min(1.0, 0.1 + 0.004 * i)});
  for (double a : {10.0, 33.3, 64.2, 99.9}) {
    auto p = profile(calibrate_threshold(s, Smoothing::sma(10), a), 10, 1);
    const auto detected = detect_change(s, p);
    ASSERT_TRUE(detected);
    EXPECT_LE(*detected, a);
  }
}

TEST(Evaluate, SignedDifference) {
  const auto r = evaluate("pot", 97.3, 95.7);
  EXPECT_EQ(r.status, DetectionStatus::detected);
  ASSERT_TRUE(r.diff_seconds);
  EXPECT_NEAR(*r.diff_seconds, 1.6, 1e-12);
  EXPECT_NEAR(*r.abs_diff_seconds(), 1.6, 1e-12);

  const auto early = evaluate("pot", 89.2, 95.7);
  EXPECT_NEAR(*early.diff_seconds, -6.5, 1e-12);
  EXPECT_NEAR(*early.abs_diff_seconds(), 6.5, 1e-12);

  EXPECT_EQ(*evaluate("onion", 851.6, 851.6).diff_seconds, 0.0);

  const auto none = evaluate("egg", std::nullopt, 139.0);
  EXPECT_EQ(none.status, DetectionStatus::not_detected);
  EXPECT_FALSE(none.diff_seconds);
}

}  // namespace
}  // namespace cookstate
