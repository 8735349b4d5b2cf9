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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cookstate {

/// Raised for invalid input data: malformed files, violated preconditions,
/// inconsistent sessions. Anything else escaping the library is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTemperature = 100.0;
inline constexpr int kDefaultSmaWindow = 10;

/// The four ways a prompt pair can phrase a state change.
enum class TemplateForm {
  A_simple,                              // "Boiling water"
  B_with_change_desc,                    // "Boiling and bubbling water"
  C_ingredient_first_simple,             // "Water that is boiling"
  D_ingredient_first_with_change_desc,   // "Water that is boiling and bubbling"
};

/// Image region handed to the scorer. Cropping happens in the bridge; the
/// engine only carries the label.
enum class GazeArea { entire_vessel, contents_only };

enum class StateChangeKind { vaporization, melting, protein_denaturation, maillard };

/// Continuous sessions are densely sampled video; discrete sessions have a
/// handful of frames taken while stirring is paused.
enum class SeriesMode { continuous, discrete };

std::string_view to_string(TemplateForm form);
std::string_view to_string(GazeArea area);
std::string_view to_string(StateChangeKind kind);
std::string_view to_string(SeriesMode mode);

TemplateForm parse_template_form(std::string_view text);
GazeArea parse_gaze_area(std::string_view text);
StateChangeKind parse_state_change_kind(std::string_view text);
SeriesMode parse_series_mode(std::string_view text);

/// Positive and negative descriptions that are classified against each other.
struct PromptPair {
  std::string id;
  std::string positive;
  std::string negative;
  TemplateForm template_form = TemplateForm::A_simple;
  GazeArea gaze_area = GazeArea::entire_vessel;

  bool operator==(const PromptPair&) const = default;
};

/// Raw (pre-softmax) similarities of one frame against both prompts.
struct ScoreSample {
  double t = 0.0;  // seconds from session start
  double sim_pos = 0.0;
  double sim_neg = 0.0;

  bool operator==(const ScoreSample&) const = default;
};

struct ScoreSeries {
  std::string prompt_pair_id;
  std::vector<ScoreSample> samples;  // strictly increasing t
  SeriesMode mode = SeriesMode::continuous;

  bool operator==(const ScoreSeries&) const = default;
};

struct SessionManifest {
  std::string session_id;
  StateChangeKind state_change_kind = StateChangeKind::vaporization;
  std::string heat_power;                 // free-form, e.g. "same" / "different"
  std::optional<double> annotation_time;  // human-perceived change, seconds
  std::string score_source;               // JSONL path, frame directory or bridge endpoint
  GazeArea gaze_area = GazeArea::entire_vessel;
  SeriesMode mode = SeriesMode::continuous;

  bool operator==(const SessionManifest&) const = default;
};

struct Smoothing {
  enum class Kind { sma, raw };

  Kind kind = Kind::sma;
  int window = kDefaultSmaWindow;  // meaningful for sma only

  static Smoothing sma(int window) { return {Kind::sma, window}; }
  static Smoothing raw() { return {Kind::raw, 1}; }

  /// Default smoothing for a sampling regime: SMA for continuous, raw for discrete.
  static Smoothing for_mode(SeriesMode mode, int window = kDefaultSmaWindow) {
    return mode == SeriesMode::discrete ? raw() : sma(window);
  }

  bool operator==(const Smoothing&) const = default;
};

struct DetectionPolicy {
  int min_consecutive = 1;

  bool operator==(const DetectionPolicy&) const = default;
};

/// Everything needed to run the recognizer on an unseen session.
struct RecognizerProfile {
  PromptPair prompt_pair;
  Smoothing smoothing;
  double threshold = 0.5;
  DetectionPolicy detection_policy;
  double temperature = kDefaultTemperature;

  bool operator==(const RecognizerProfile&) const = default;
};

enum class DetectionStatus { detected, not_detected };

std::string_view to_string(DetectionStatus status);
DetectionStatus parse_detection_status(std::string_view text);

struct RecognitionReport {
  std::string session_id;
  std::optional<double> detected_time;
  std::optional<double> annotation_time;
  std::optional<double> diff_seconds;  // detected - annotated
  DetectionStatus status = DetectionStatus::not_detected;

  std::optional<double> abs_diff_seconds() const;

  bool operator==(const RecognitionReport&) const = default;
};

}  // namespace cookstate
