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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cookstate/model.hpp"
#include "cookstate/signal.hpp"

namespace cookstate {

struct RankedPrompt {
  std::string prompt_pair_id;
  LinearFit fit;

  bool operator==(const RankedPrompt&) const = default;
};

/// Candidates ordered by fitted slope, steepest first.
struct PromptRanking {
  std::vector<RankedPrompt> entries;
  std::string chosen;  // always entries.front().prompt_pair_id

  bool operator==(const PromptRanking&) const = default;
};

/// Fits a line to every candidate and ranks them by slope, descending. Equal
/// slopes are ordered by id. Throws Error naming the candidate whose series
/// cannot be fitted, or when `candidates` is empty.
PromptRanking select_prompt(const std::map<std::string, DegreeSeries>& candidates);

/// Smoothed degree at the last sample with t <= annotation_time. No
/// interpolation between samples.
///
/// Throws Error("annotation inside SMA warm-up") when the annotation precedes
/// the first smoothed sample, and when it lies after the last one.
double calibrate_threshold(const DegreeSeries& series, const Smoothing& smoothing,
                           double annotation_time);

struct CalibrationSession {
  std::string session_id;
  DegreeSeries series;
  double annotation_time = 0.0;
};

/// Mean of the per-session thresholds.
double calibrate(std::span<const CalibrationSession> sessions, const Smoothing& smoothing);

/// First sample (after smoothing) that starts a run of at least
/// profile.detection_policy.min_consecutive samples with degree >= threshold.
/// Discrete series are thresholded raw regardless of profile.smoothing.
std::optional<double> detect_change(const DegreeSeries& series, const RecognizerProfile& profile);

/// Same scan on an already smoothed series, returning the sample index.
std::optional<std::size_t> first_crossing(std::span<const DegreePoint> points, double threshold,
                                          int min_consecutive);

/// Builds the report; diff is detected - annotated when both are present.
RecognitionReport evaluate(std::string session_id, std::optional<double> detected_time,
                           std::optional<double> annotation_time);

}  // namespace cookstate
