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

#include "cookstate/serialization.hpp"

#include "cookstate/validation.hpp"
#include "json_util.hpp"

namespace cookstate {
namespace {

using detail::Json;
using detail::optional_number;
using detail::optional_to_json;
using detail::require;
using detail::require_int;
using detail::require_number;
using detail::require_string;

template <typename Fn>
auto decode(std::string_view text, std::string_view what, Fn&& fn) {
  const Json doc = detail::parse_json(text, what);
  try {
    return fn(doc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

Json pair_to(const PromptPair& p) {
  Json j;
  j["id"] = p.id;
  j["positive"] = p.positive;
  j["negative"] = p.negative;
  j["template_form"] = to_string(p.template_form);
  j["gaze_area"] = to_string(p.gaze_area);
  return j;
}

PromptPair pair_from(const Json& j) {
  PromptPair p;
  p.id = require_string(j, "id");
  p.positive = require_string(j, "positive");
  p.negative = require_string(j, "negative");
  p.template_form = parse_template_form(require_string(j, "template_form"));
  p.gaze_area = parse_gaze_area(require_string(j, "gaze_area"));
  return p;
}

Json manifest_to(const SessionManifest& m) {
  Json j;
  j["session_id"] = m.session_id;
  j["state_change_kind"] = to_string(m.state_change_kind);
  j["heat_power"] = m.heat_power;
  j["annotation_time"] = optional_to_json(m.annotation_time);
  j["score_source"] = m.score_source;
  j["gaze_area"] = to_string(m.gaze_area);
  j["mode"] = to_string(m.mode);
  return j;
}

SessionManifest manifest_from(const Json& j) {
  SessionManifest m;
  m.session_id = require_string(j, "session_id");
  m.state_change_kind = parse_state_change_kind(require_string(j, "state_change_kind"));
  m.heat_power = require_string(j, "heat_power");
  m.annotation_time = optional_number(j, "annotation_time");
  m.score_source = require_string(j, "score_source");
  m.gaze_area = parse_gaze_area(require_string(j, "gaze_area"));
  if (j.contains("mode")) m.mode = parse_series_mode(require_string(j, "mode"));
  throw_if_invalid({validate(m)}, "manifest '" + m.session_id + "'");
  return m;
}

Json profile_to(const RecognizerProfile& p) {
  Json smoothing;
  if (p.smoothing.kind == Smoothing::Kind::sma) {
    smoothing["kind"] = "sma";
    smoothing["window"] = p.smoothing.window;
  } else {
    smoothing["kind"] = "raw";
  }
  Json j;
  j["prompt_pair"] = pair_to(p.prompt_pair);
  j["smoothing"] = smoothing;
  j["threshold"] = p.threshold;
  j["detection_policy"] = Json{{"min_consecutive", p.detection_policy.min_consecutive}};
  j["temperature"] = p.temperature;
  return j;
}

RecognizerProfile profile_from(const Json& j) {
  RecognizerProfile p;
  p.prompt_pair = pair_from(require(j, "prompt_pair"));
  const Json& smoothing = require(j, "smoothing");
  const std::string kind = require_string(smoothing, "kind");
  if (kind == "sma") {
    p.smoothing = Smoothing::sma(require_int(smoothing, "window"));
  } else if (kind == "raw") {
    p.smoothing = Smoothing::raw();
  } else {
    throw Error("unknown smoothing kind '" + kind + "' (expected sma or raw)");
  }
  p.threshold = require_number(j, "threshold");
  p.detection_policy.min_consecutive = require_int(require(j, "detection_policy"), "min_consecutive");
  p.temperature = require_number(j, "temperature");
  throw_if_invalid({validate(p)}, "profile");
  return p;
}

Json report_to(const RecognitionReport& r) {
  Json j;
  j["session_id"] = r.session_id;
  j["status"] = to_string(r.status);
  j["detected_time"] = optional_to_json(r.detected_time);
  j["annotation_time"] = optional_to_json(r.annotation_time);
  j["diff_seconds"] = optional_to_json(r.diff_seconds);
  j["abs_diff_seconds"] = optional_to_json(r.abs_diff_seconds());
  return j;
}

RecognitionReport report_from(const Json& j) {
  RecognitionReport r;
  r.session_id = require_string(j, "session_id");
  r.status = parse_detection_status(require_string(j, "status"));
  r.detected_time = optional_number(j, "detected_time");
  r.annotation_time = optional_number(j, "annotation_time");
  r.diff_seconds = optional_number(j, "diff_seconds");
  if (r.diff_seconds.has_value() != (r.detected_time && r.annotation_time)) {
    throw Error("diff_seconds must be present exactly when both times are present");
  }
  if ((r.status == DetectionStatus::detected) != r.detected_time.has_value()) {
    throw Error("status does not agree with detected_time");
  }
  return r;
}

Json ranking_entries_to(const PromptRanking& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json row;
    row["prompt_pair_id"] = e.prompt_pair_id;
    row["slope"] = e.fit.slope;
    row["intercept"] = e.fit.intercept;
    row["n"] = e.fit.n;
    entries.push_back(row);
  }
  return entries;
}

Json ranking_to(const PromptRanking& r) {
  Json j;
  j["chosen"] = r.chosen;
  j["ranking"] = ranking_entries_to(r);
  return j;
}

PromptRanking ranking_from(const Json& j) {
  PromptRanking r;
  r.chosen = require_string(j, "chosen");
  const Json& entries = require(j, "ranking");
  if (!entries.is_array() || entries.empty()) throw Error("ranking must be a non-empty array");
  for (const auto& row : entries) {
    RankedPrompt e;
    e.prompt_pair_id = require_string(row, "prompt_pair_id");
    e.fit.slope = require_number(row, "slope");
    e.fit.intercept = require_number(row, "intercept");
    e.fit.n = static_cast<std::size_t>(require_int(row, "n"));
    r.entries.push_back(std::move(e));
  }
  if (r.entries.front().prompt_pair_id != r.chosen) {
    throw Error("chosen must equal the first ranking entry");
  }
  return r;
}

Json protocol_to(const ProtocolReport& p) {
  Json j;
  j["state_change_kind"] = to_string(p.state_change_kind);
  j["gaze_area"] = to_string(p.gaze_area);
  j["mode"] = to_string(p.mode);
  j["calibration_sessions"] = p.calibration_sessions;
  j["chosen"] = p.ranking.chosen;
  j["threshold"] = p.profile.threshold;
  j["ranking"] = ranking_entries_to(p.ranking);
  j["profile"] = profile_to(p.profile);
  Json results = Json::array();
  for (const auto& r : p.results) {
    Json row;
    row["heat_power"] = r.heat_power;
    const Json report = report_to(r.report);
    for (const auto& [key, value] : report.items()) row[key] = value;
    results.push_back(row);
  }
  j["results"] = results;
  return j;
}

ProtocolReport protocol_from(const Json& j) {
  ProtocolReport p;
  p.state_change_kind = parse_state_change_kind(require_string(j, "state_change_kind"));
  p.gaze_area = parse_gaze_area(require_string(j, "gaze_area"));
  p.mode = parse_series_mode(require_string(j, "mode"));
  p.calibration_sessions = require(j, "calibration_sessions").get<std::vector<std::string>>();
  p.ranking = ranking_from(j);
  p.profile = profile_from(require(j, "profile"));
  if (p.profile.prompt_pair.id != p.ranking.chosen) {
    throw Error("profile prompt pair does not match chosen");
  }
  for (const auto& row : require(j, "results")) {
    p.results.push_back({require_string(row, "heat_power"), report_from(row)});
  }
  return p;
}

Json synth_to(const SynthSpec& s) {
  Json j;
  j["t_change"] = s.t_change;
  j["duration"] = s.duration;
  j["sampling_period"] = s.sampling_period;
  j["pre_level"] = s.pre_level;
  j["post_level"] = s.post_level;
  j["transition_width"] = s.transition_width;
  j["noise_sigma"] = s.noise_sigma;
  j["seed"] = s.seed;
  j["mode"] = to_string(s.mode);
  j["slope_quality"] = s.slope_quality;
  j["temperature"] = s.temperature;
  j["session_id"] = s.session_id;
  j["state_change_kind"] = to_string(s.state_change_kind);
  j["heat_power"] = s.heat_power;
  j["gaze_area"] = to_string(s.gaze_area);
  return j;
}

SynthSpec synth_from(const Json& j) {
  SynthSpec s;
  s.t_change = require_number(j, "t_change");
  s.duration = require_number(j, "duration");
  s.sampling_period = require_number(j, "sampling_period");
  s.pre_level = require_number(j, "pre_level");
  s.post_level = require_number(j, "post_level");
  s.transition_width = require_number(j, "transition_width");
  if (j.contains("noise_sigma")) s.noise_sigma = require_number(j, "noise_sigma");
  if (j.contains("seed")) {
    const Json& seed = j["seed"];
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      throw Error("field seed must be a non-negative integer");
    }
    s.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("mode")) s.mode = parse_series_mode(require_string(j, "mode"));
  if (j.contains("slope_quality")) {
    s.slope_quality = require(j, "slope_quality").get<std::vector<double>>();
  }
  if (j.contains("temperature")) s.temperature = require_number(j, "temperature");
  if (j.contains("session_id")) s.session_id = require_string(j, "session_id");
  if (j.contains("state_change_kind")) {
    s.state_change_kind = parse_state_change_kind(require_string(j, "state_change_kind"));
  }
  if (j.contains("heat_power")) s.heat_power = require_string(j, "heat_power");
  if (j.contains("gaze_area")) s.gaze_area = parse_gaze_area(require_string(j, "gaze_area"));
  throw_if_invalid({validate(s)}, "synthetic spec");
  return s;
}

}  // namespace

std::string catalog_to_json(std::span<const PromptPair> pairs) {
  Json arr = Json::array();
  for (const auto& p : pairs) arr.push_back(pair_to(p));
  return detail::to_document(arr);
}

std::vector<PromptPair> catalog_from_json(std::string_view text) {
  return decode(text, "catalog", [](const Json& doc) {
    if (!doc.is_array()) throw Error("expected a JSON array of prompt pairs");
    std::vector<PromptPair> pairs;
    for (const auto& j : doc) pairs.push_back(pair_from(j));
    return pairs;
  });
}

std::string manifest_to_json(const SessionManifest& m) { return detail::to_document(manifest_to(m)); }
SessionManifest manifest_from_json(std::string_view text) {
  return decode(text, "manifest", manifest_from);
}

std::string profile_to_json(const RecognizerProfile& p) { return detail::to_document(profile_to(p)); }
RecognizerProfile profile_from_json(std::string_view text) {
  return decode(text, "profile", profile_from);
}

std::string report_to_json(const RecognitionReport& r) { return detail::to_document(report_to(r)); }
RecognitionReport report_from_json(std::string_view text) {
  return decode(text, "report", report_from);
}

std::string ranking_to_json(const PromptRanking& r) { return detail::to_document(ranking_to(r)); }
PromptRanking ranking_from_json(std::string_view text) {
  return decode(text, "ranking", ranking_from);
}

std::string protocol_report_to_json(const ProtocolReport& p) {
  return detail::to_document(protocol_to(p));
}
ProtocolReport protocol_report_from_json(std::string_view text) {
  return decode(text, "protocol report", protocol_from);
}

std::string synth_spec_to_json(const SynthSpec& s) { return detail::to_document(synth_to(s)); }
SynthSpec synth_spec_from_json(std::string_view text) {
  return decode(text, "synthetic spec", synth_from);
}

SessionManifest read_manifest(const std::filesystem::path& path) {
  try {
    return manifest_from_json(detail::read_text_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_manifest(const std::filesystem::path& path, const SessionManifest& manifest) {
  detail::write_text_file(path, manifest_to_json(manifest));
}

RecognizerProfile read_profile(const std::filesystem::path& path) {
  try {
    return profile_from_json(detail::read_text_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_profile(const std::filesystem::path& path, const RecognizerProfile& profile) {
  throw_if_invalid({validate(profile)}, "profile");
  detail::write_text_file(path, profile_to_json(profile));
}

std::string read_file(const std::filesystem::path& path) { return detail::read_text_file(path); }

void write_file(const std::filesystem::path& path, std::string_view content) {
  detail::write_text_file(path, content);
}

}  // namespace cookstate
