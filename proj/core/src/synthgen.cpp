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

#include "cookstate/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cookstate/serialization.hpp"
#include "json_util.hpp"

namespace cookstate {

std::vector<Violation> validate(const SynthSpec& spec) {
  std::vector<Violation> out;
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(spec.duration) || !(spec.duration > 0.0)) {
    out.push_back({"duration", "must be positive"});
  }
  if (!finite(spec.t_change) || !(spec.t_change > 0.0 && spec.t_change < spec.duration)) {
    out.push_back({"t_change", "must satisfy 0 < t_change < duration"});
  }
  if (!finite(spec.sampling_period) || !(spec.sampling_period > 0.0)) {
    out.push_back({"sampling_period", "must be positive"});
  }
  if (!(spec.pre_level >= 0.0 && spec.pre_level <= 1.0)) {
    out.push_back({"pre_level", "must lie in [0, 1]"});
  }
  if (!(spec.post_level >= 0.0 && spec.post_level <= 1.0)) {
    out.push_back({"post_level", "must lie in [0, 1]"});
  }
  if (!(spec.pre_level < spec.post_level)) {
    out.push_back({"post_level", "must exceed pre_level"});
  }
  if (!finite(spec.transition_width) || !(spec.transition_width > 0.0)) {
    out.push_back({"transition_width", "must be positive"});
  }
  if (!finite(spec.noise_sigma) || spec.noise_sigma < 0.0) {
    out.push_back({"noise_sigma", "must be non-negative"});
  }
  if (spec.slope_quality.empty()) out.push_back({"slope_quality", "needs at least one entry"});
  for (std::size_t k = 0; k < spec.slope_quality.size(); ++k) {
    if (!finite(spec.slope_quality[k])) {
      out.push_back({"slope_quality[" + std::to_string(k) + "]", "must be finite"});
    }
  }
  if (!finite(spec.temperature) || !(spec.temperature > 0.0)) {
    out.push_back({"temperature", "must be positive"});
  }
  if (spec.session_id.empty()) out.push_back({"session_id", "must be non-empty"});
  return out;
}

std::string synthetic_pair_id(std::size_t k) { return "synthetic/q" + std::to_string(k); }

double analytic_degree(const SynthSpec& spec, double multiplier, double t) {
  const double logistic = 1.0 / (1.0 + std::exp(-(t - spec.t_change) / spec.transition_width));
  return spec.pre_level + multiplier * (spec.post_level - spec.pre_level) * logistic;
}

std::vector<double> sample_times(const SynthSpec& spec) {
  // Tolerate duration being an inexact multiple of the period.
  const auto last = static_cast<std::size_t>(std::floor(spec.duration / spec.sampling_period + 1e-9));
  std::vector<double> times(last + 1);
  for (std::size_t i = 0; i <= last; ++i) times[i] = static_cast<double>(i) * spec.sampling_period;
  return times;
}

double invert_degree(double p, double temperature) {
  if (!(p > 0.0 && p < 1.0)) throw Error("invert_degree: p must lie strictly inside (0, 1)");
  if (!(temperature > 0.0)) throw Error("invert_degree: temperature must be positive");
  // logit(p) = log(p) - log1p(-p); both terms are accurate near 0 and 1.
  return (std::log(p) - std::log1p(-p)) / temperature;
}

SynthSession generate_session(const SynthSpec& spec) {
  throw_if_invalid({validate(spec)}, "synthetic spec");

  SynthSession session;
  session.t_change = spec.t_change;
  session.manifest.session_id = spec.session_id;
  session.manifest.state_change_kind = spec.state_change_kind;
  session.manifest.heat_power = spec.heat_power;
  session.manifest.annotation_time = spec.t_change;
  session.manifest.score_source = "scores.jsonl";
  session.manifest.gaze_area = spec.gaze_area;
  session.manifest.mode = spec.mode;

  const auto times = sample_times(spec);
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  for (std::size_t k = 0; k < spec.slope_quality.size(); ++k) {
    const std::string id = synthetic_pair_id(k);
    session.prompts.push_back({id, "synthetic positive " + std::to_string(k),
                               "synthetic negative " + std::to_string(k),
                               TemplateForm::A_simple, spec.gaze_area});
    ScoreSeries series{id, {}, spec.mode};
    series.samples.reserve(times.size());
    for (const double t : times) {
      double d = analytic_degree(spec, spec.slope_quality[k], t);
      if (spec.noise_sigma > 0.0) d += spec.noise_sigma * noise(rng);
      d = std::clamp(d, kDegreeFloor, 1.0 - kDegreeFloor);
      series.samples.push_back({t, invert_degree(d, spec.temperature), 0.0});
    }
    session.series.emplace(id, std::move(series));
  }
  return session;
}

void write_session_files(const std::filesystem::path& dir, const SynthSession& session) {
  throw_if_invalid({validate_catalog(session.prompts)}, "synthetic prompts");
  const std::string manifest = manifest_to_json(session.manifest);
  const std::string scores = format_score_lines(session.series);
  const std::string prompts = catalog_to_json(session.prompts);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir.string());
  detail::write_text_file(dir / session.manifest.score_source, scores);
  detail::write_text_file(dir / "prompts.json", prompts);
  detail::write_text_file(dir / "manifest.json", manifest);
}

}  // namespace cookstate
