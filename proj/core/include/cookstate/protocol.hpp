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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cookstate/model.hpp"
#include "cookstate/recognizer.hpp"
#include "cookstate/score_file.hpp"

namespace cookstate {

/// A session manifest together with its score series.
struct SessionData {
  SessionManifest manifest;
  SeriesMap series;
};

struct ProtocolOptions {
  double temperature = kDefaultTemperature;
  int window = kDefaultSmaWindow;
  int min_consecutive = 1;
  /// Defaults to the mode of the first calibration session.
  std::optional<SeriesMode> mode;
};

struct ProtocolResult {
  std::string heat_power;
  RecognitionReport report;

  bool operator==(const ProtocolResult&) const = default;
};

struct ProtocolReport {
  StateChangeKind state_change_kind = StateChangeKind::vaporization;
  GazeArea gaze_area = GazeArea::entire_vessel;
  SeriesMode mode = SeriesMode::continuous;
  std::vector<std::string> calibration_sessions;
  PromptRanking ranking;
  RecognizerProfile profile;  // chosen pair and calibrated threshold
  std::vector<ProtocolResult> results;

  bool operator==(const ProtocolReport&) const = default;
};

/// Calibrate-then-test run over one state change and one gaze area:
///
///  1. rank `candidates` by slope on the first calibration session;
///  2. calibrate the threshold for the winner on every calibration session
///     (mean of per-session thresholds);
///  3. detect on each test session and evaluate against its annotation.
///
/// All sessions must share state change kind and gaze area. Throws Error with
/// session and pair context on any failure.
ProtocolReport run_protocol(std::span<const SessionData> calibration,
                            std::span<const SessionData> test,
                            std::span<const PromptPair> candidates,
                            const ProtocolOptions& options = {});

/// Plain-text result table: one row for the chosen pair, one column per test
/// session headed by its heat power label, absolute diff seconds or "NA".
std::string render_result_table(const ProtocolReport& report);

/// Plain-text prompt comparison table with the LA Slope column. Pair text is
/// taken from `pairs` when the id is found there.
std::string render_ranking_table(const PromptRanking& ranking, std::span<const PromptPair> pairs);

/// Loads a manifest and the JSONL scores it names; a relative score_source
/// resolves against the manifest's directory. Each series is validated
/// against the manifest (annotation inside its span).
SessionData load_session(const std::filesystem::path& manifest_path);

/// JSON file describing a protocol run:
///
///   {
///     "calibration": ["cal/manifest.json"],
///     "test": ["same/manifest.json", "different/manifest.json"],
///     "catalog": "prompts.json",          // optional, bundled catalog otherwise
///     "candidates": ["(a)-entire", ...],  // optional subset of catalog ids
///     "window": 10, "temperature": 100, "min_consecutive": 1,
///     "mode": "continuous"                // optional
///   }
///
/// Relative paths resolve against the config file's directory.
struct ProtocolConfig {
  std::vector<std::filesystem::path> calibration;
  std::vector<std::filesystem::path> test;
  std::optional<std::filesystem::path> catalog;
  std::vector<std::string> candidate_ids;
  ProtocolOptions options;
};

ProtocolConfig read_protocol_config(const std::filesystem::path& path);

/// Loads every session, resolves candidates (catalog pairs for the sessions'
/// gaze area, optionally restricted to candidate_ids) and runs the protocol.
ProtocolReport run_protocol(const ProtocolConfig& config);

}  // namespace cookstate
