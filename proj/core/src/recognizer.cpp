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

#include "cookstate/recognizer.hpp"

#include <algorithm>
#include <sstream>

namespace cookstate {
namespace {

std::string seconds(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

}  // namespace

PromptRanking select_prompt(const std::map<std::string, DegreeSeries>& candidates) {
  if (candidates.empty()) throw Error("select_prompt: no candidate prompt pairs");

  PromptRanking ranking;
  ranking.entries.reserve(candidates.size());
  for (const auto& [id, series] : candidates) {
    try {
      ranking.entries.push_back({id, linear_fit(std::span<const DegreePoint>(series.points))});
    } catch (const Error& e) {
      throw Error("candidate '" + id + "': " + e.what());
    }
  }
  // std::map iteration is already id-ordered; stable_sort keeps that for ties.
  std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                   [](const RankedPrompt& a, const RankedPrompt& b) { return a.fit.slope > b.fit.slope; });
  ranking.chosen = ranking.entries.front().prompt_pair_id;
  return ranking;
}

double calibrate_threshold(const DegreeSeries& series, const Smoothing& smoothing,
                           double annotation_time) {
  const DegreeSeries smoothed = apply_smoothing(series, smoothing);
  const auto& pts = smoothed.points;
  if (pts.empty()) throw Error("calibrate_threshold: empty series");
  if (annotation_time < pts.front().t) {
    throw Error("annotation inside SMA warm-up (annotation " + seconds(annotation_time) +
                " s precedes first smoothed sample at " + seconds(pts.front().t) + " s)");
  }
  if (annotation_time > pts.back().t) {
    throw Error("annotation after series end (" + seconds(annotation_time) + " s > " +
                seconds(pts.back().t) + " s)");
  }
  // Predecessor: last point with t <= annotation_time.
  const auto after = std::upper_bound(
      pts.begin(), pts.end(), annotation_time,
      [](double a, const DegreePoint& p) { return a < p.t; });
  return std::prev(after)->degree;
}

double calibrate(std::span<const CalibrationSession> sessions, const Smoothing& smoothing) {
  if (sessions.empty()) throw Error("calibrate: no calibration sessions");
  double sum = 0.0;
  for (const auto& s : sessions) {
    try {
      sum += calibrate_threshold(s.series, smoothing, s.annotation_time);
    } catch (const Error& e) {
      throw Error("session '" + s.session_id + "': " + e.what());
    }
  }
  return sum / static_cast<double>(sessions.size());
}

std::optional<std::size_t> first_crossing(std::span<const DegreePoint> points, double threshold,
                                          int min_consecutive) {
  if (min_consecutive < 1) throw Error("min_consecutive must be >= 1");
  const auto need = static_cast<std::size_t>(min_consecutive);
  std::size_t run = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    run = points[i].degree >= threshold ? run + 1 : 0;
    if (run == need) return i + 1 - need;
  }
  return std::nullopt;
}

std::optional<double> detect_change(const DegreeSeries& series, const RecognizerProfile& profile) {
  const Smoothing smoothing =
      series.mode == SeriesMode::discrete ? Smoothing::raw() : profile.smoothing;
  const DegreeSeries smoothed = apply_smoothing(series, smoothing);
  const auto hit = first_crossing(smoothed.points, profile.threshold,
                                  profile.detection_policy.min_consecutive);
  if (!hit) return std::nullopt;
  return smoothed.points[*hit].t;
}

RecognitionReport evaluate(std::string session_id, std::optional<double> detected_time,
                           std::optional<double> annotation_time) {
  RecognitionReport report;
  report.session_id = std::move(session_id);
  report.detected_time = detected_time;
  report.annotation_time = annotation_time;
  report.status = detected_time ? DetectionStatus::detected : DetectionStatus::not_detected;
  if (detected_time && annotation_time) report.diff_seconds = *detected_time - *annotation_time;
  return report;
}

}  // namespace cookstate
