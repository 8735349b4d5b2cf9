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

#include "cookstate/signal.hpp"

#include <algorithm>
#include <cmath>

namespace cookstate {

double degree(const ScoreSample& sample, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw Error("temperature must be a positive finite number");
  }
  if (!std::isfinite(sample.sim_pos) || !std::isfinite(sample.sim_neg)) {
    throw Error("similarities must be finite");
  }
  const double pos = temperature * sample.sim_pos;
  const double neg = temperature * sample.sim_neg;
  const double top = std::max(pos, neg);
  const double e_pos = std::exp(pos - top);
  const double e_neg = std::exp(neg - top);
  return e_pos / (e_pos + e_neg);
}

DegreeSeries degree_series(const ScoreSeries& series, double temperature) {
  DegreeSeries out{series.prompt_pair_id, {}, series.mode};
  out.points.reserve(series.samples.size());
  for (const auto& s : series.samples) {
    out.points.push_back({s.t, degree(s, temperature)});
  }
  return out;
}

LinearFit linear_fit(std::span<const DegreePoint> points) {
  const std::size_t n = points.size();
  if (n < 2) throw Error("degenerate abscissa: linear fit needs at least two points");

  double mean_t = 0.0;
  double mean_d = 0.0;
  for (const auto& p : points) {
    mean_t += p.t;
    mean_d += p.degree;
  }
  mean_t /= static_cast<double>(n);
  mean_d /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : points) {
    const double dt = p.t - mean_t;
    sxx += dt * dt;
    sxy += dt * (p.degree - mean_d);
  }
  if (!(sxx > 0.0)) throw Error("degenerate abscissa: all t are identical");

  const double slope = sxy / sxx;
  return {slope, mean_d - slope * mean_t, n};
}

LinearFit linear_fit(const DegreeSeries& series) {
  try {
    return linear_fit(std::span<const DegreePoint>(series.points));
  } catch (const Error& e) {
    throw Error("'" + series.prompt_pair_id + "': " + e.what());
  }
}

DegreeSeries sma(const DegreeSeries& series, int window) {
  if (window < 1) throw Error("sma window must be >= 1");
  const auto w = static_cast<std::size_t>(window);
  const auto& in = series.points;
  if (in.size() < w) {
    throw Error("series shorter than window (" + std::to_string(in.size()) + " < " +
                std::to_string(window) + ") for '" + series.prompt_pair_id + "'");
  }

  DegreeSeries out{series.prompt_pair_id, {}, series.mode};
  out.points.reserve(in.size() - w + 1);
  for (std::size_t end = w; end <= in.size(); ++end) {
    const std::size_t begin = end - w;
    const double base = in[begin].degree;
    double offset_sum = 0.0;
    for (std::size_t j = begin; j < end; ++j) offset_sum += in[j].degree - base;
    out.points.push_back({in[end - 1].t, base + offset_sum / static_cast<double>(w)});
  }
  return out;
}

DegreeSeries apply_smoothing(const DegreeSeries& series, const Smoothing& smoothing) {
  if (smoothing.kind == Smoothing::Kind::raw) return series;
  return sma(series, smoothing.window);
}

}  // namespace cookstate
