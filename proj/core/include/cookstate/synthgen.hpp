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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cookstate/model.hpp"
#include "cookstate/score_file.hpp"
#include "cookstate/validation.hpp"

namespace cookstate {

/// Parameters of a synthetic session whose degree of change follows a
/// logistic step from pre_level to post_level around t_change.
struct SynthSpec {
  double t_change = 60.0;
  double duration = 120.0;
  double sampling_period = 0.5;
  double pre_level = 0.1;
  double post_level = 0.9;
  double transition_width = 5.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  SeriesMode mode = SeriesMode::continuous;
  /// One candidate prompt pair per entry; its swing (post - pre) is scaled by
  /// the multiplier, so 0 gives a flat series.
  std::vector<double> slope_quality{1.0};
  double temperature = kDefaultTemperature;

  // Manifest metadata.
  std::string session_id = "synthetic";
  StateChangeKind state_change_kind = StateChangeKind::vaporization;
  std::string heat_power = "same";
  GazeArea gaze_area = GazeArea::entire_vessel;

  bool operator==(const SynthSpec&) const = default;
};

struct SynthSession {
  SessionManifest manifest;  // annotation_time = t_change
  SeriesMap series;
  std::vector<PromptPair> prompts;  // placeholder pairs, one per candidate
  double t_change = 0.0;
};

/// Degrees are kept this far away from 0 and 1 so the softmax stays
/// invertible with finite similarities.
inline constexpr double kDegreeFloor = 1e-9;

std::vector<Violation> validate(const SynthSpec& spec);

/// Id of candidate k: "synthetic/q<k>".
std::string synthetic_pair_id(std::size_t k);

/// Noise-free, unclipped degree of candidate `multiplier` at time t.
double analytic_degree(const SynthSpec& spec, double multiplier, double t);

/// Timestamps 0, period, 2*period, ... up to and including duration.
std::vector<double> sample_times(const SynthSpec& spec);

/// sim_pos such that degree({t, sim_pos, 0}, temperature) == p.
double invert_degree(double p, double temperature = kDefaultTemperature);

/// Deterministic in spec (including seed). Throws Error when the spec is
/// invalid.
SynthSession generate_session(const SynthSpec& spec);

/// Writes manifest.json, scores.jsonl and prompts.json into `dir` (created if
/// missing). Every file is fully encoded before any is written.
void write_session_files(const std::filesystem::path& dir, const SynthSession& session);

}  // namespace cookstate
