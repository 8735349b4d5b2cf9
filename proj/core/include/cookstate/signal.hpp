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

#include <span>
#include <string>
#include <vector>

#include "cookstate/model.hpp"

namespace cookstate {

struct DegreePoint {
  double t = 0.0;
  double degree = 0.0;  // in [0, 1]

  bool operator==(const DegreePoint&) const = default;
};

/// Degree-of-state-change trajectory of one session under one prompt pair.
struct DegreeSeries {
  std::string prompt_pair_id;
  std::vector<DegreePoint> points;  // strictly increasing t
  SeriesMode mode = SeriesMode::continuous;

  bool operator==(const DegreeSeries&) const = default;
};

/// Ordinary least squares line over (t, degree). Slope is per second.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t n = 0;

  bool operator==(const LinearFit&) const = default;
};

/// Two-class softmax of the positive prompt against the negative one:
///
///   exp(T*sim_pos) / (exp(T*sim_pos) + exp(T*sim_neg))
///
/// evaluated with the larger exponent subtracted first, so it never
/// overflows. Equal similarities give exactly 0.5. Throws Error when
/// `temperature` is not positive or an input is not finite.
double degree(const ScoreSample& sample, double temperature = kDefaultTemperature);

/// Elementwise degree(); keeps the series' timestamps and mode.
DegreeSeries degree_series(const ScoreSeries& series, double temperature = kDefaultTemperature);

/// Least-squares line through the points, t taken as-is in seconds.
/// Throws Error("degenerate abscissa") when all t coincide and when fewer
/// than two points are given.
LinearFit linear_fit(const DegreeSeries& series);
LinearFit linear_fit(std::span<const DegreePoint> points);

/// Trailing simple moving average. Output point k sits at input t[k+window-1]
/// and holds the mean of inputs k .. k+window-1; the warm-up prefix is
/// dropped, so the output has size() - window + 1 points.
///
/// Each window mean is taken relative to the window's first value, which
/// keeps a constant series bit-exact under smoothing.
DegreeSeries sma(const DegreeSeries& series, int window);

/// sma() for Kind::sma, identity for Kind::raw.
DegreeSeries apply_smoothing(const DegreeSeries& series, const Smoothing& smoothing);

}  // namespace cookstate
