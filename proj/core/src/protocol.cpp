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

#include "cookstate/protocol.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cookstate/catalog.hpp"
#include "cookstate/serialization.hpp"
#include "cookstate/validation.hpp"
#include "json_util.hpp"

namespace cookstate {
namespace {

const ScoreSeries& series_for(const SessionData& session, const std::string& pair_id) {
  const auto it = session.series.find(pair_id);
  if (it == session.series.end()) {
    throw Error("session '" + session.manifest.session_id + "' has no scores for prompt pair '" +
                pair_id + "'");
  }
  return it->second;
}

void check_consistent(const SessionData& reference, const SessionData& other) {
  const auto& a = reference.manifest;
  const auto& b = other.manifest;
  if (a.state_change_kind != b.state_change_kind) {
    throw Error("kind mismatch: session '" + b.session_id + "' is " +
                std::string(to_string(b.state_change_kind)) + ", expected " +
                std::string(to_string(a.state_change_kind)));
  }
  if (a.gaze_area != b.gaze_area) {
    throw Error("gaze area mismatch: session '" + b.session_id + "' uses " +
                std::string(to_string(b.gaze_area)) + ", expected " +
                std::string(to_string(a.gaze_area)));
  }
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Renders rows as a '|' separated table with padded columns.
std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) line += " | ";
      line += rows[r][c];
      if (c + 1 < rows[r].size()) line.append(width[c] - rows[r][c].size(), ' ');
    }
    out += line + '\n';
    if (r == 0) {
      std::string rule;
      for (std::size_t c = 0; c < width.size(); ++c) {
        if (c > 0) rule += "-+-";
        rule.append(width[c], '-');
      }
      out += rule + '\n';
    }
  }
  return out;
}

}  // namespace

ProtocolReport run_protocol(std::span<const SessionData> calibration,
                            std::span<const SessionData> test,
                            std::span<const PromptPair> candidates,
                            const ProtocolOptions& options) {
  if (calibration.empty()) throw Error("protocol: no calibration sessions");
  if (candidates.empty()) throw Error("protocol: no candidate prompt pairs");
  const SessionData& reference = calibration.front();
  for (const auto& s : calibration) check_consistent(reference, s);
  for (const auto& s : test) check_consistent(reference, s);

  ProtocolReport report;
  report.state_change_kind = reference.manifest.state_change_kind;
  report.gaze_area = reference.manifest.gaze_area;
  report.mode = options.mode.value_or(reference.manifest.mode);
  const Smoothing smoothing = Smoothing::for_mode(report.mode, options.window);

  auto to_degrees = [&](const ScoreSeries& scores) {
    DegreeSeries d = degree_series(scores, options.temperature);
    d.mode = report.mode;
    return d;
  };

  // 1. Prompt selection on the reference session.
  std::map<std::string, DegreeSeries> candidate_degrees;
  for (const auto& pair : candidates) {
    candidate_degrees.emplace(pair.id, to_degrees(series_for(reference, pair.id)));
  }
  try {
    report.ranking = select_prompt(candidate_degrees);
  } catch (const Error& e) {
    throw Error("session '" + reference.manifest.session_id + "': " + e.what());
  }
  const auto chosen = std::find_if(candidates.begin(), candidates.end(),
                                   [&](const PromptPair& p) { return p.id == report.ranking.chosen; });

  // 2. Threshold calibration with the chosen pair.
  std::vector<CalibrationSession> cal;
  for (const auto& s : calibration) {
    if (!s.manifest.annotation_time) {
      throw Error("calibration session '" + s.manifest.session_id + "' has no annotation_time");
    }
    cal.push_back({s.manifest.session_id, to_degrees(series_for(s, chosen->id)),
                   *s.manifest.annotation_time});
    report.calibration_sessions.push_back(s.manifest.session_id);
  }
  report.profile.prompt_pair = *chosen;
  report.profile.smoothing = smoothing;
  report.profile.threshold = calibrate(cal, smoothing);
  report.profile.detection_policy.min_consecutive = options.min_consecutive;
  report.profile.temperature = options.temperature;

  // 3. Detection on unseen sessions.
  for (const auto& s : test) {
    try {
      const auto detected = detect_change(to_degrees(series_for(s, chosen->id)), report.profile);
      report.results.push_back(
          {s.manifest.heat_power, evaluate(s.manifest.session_id, detected, s.manifest.annotation_time)});
    } catch (const Error& e) {
      throw Error("test session '" + s.manifest.session_id + "': " + e.what());
    }
  }
  return report;
}

std::string render_result_table(const ProtocolReport& report) {
  std::vector<std::vector<std::string>> rows(2);
  rows[0].push_back("");
  rows[1].push_back(report.ranking.chosen);
  for (const auto& r : report.results) {
    rows[0].push_back(r.heat_power + " Diff (s)");
    const auto abs = r.report.abs_diff_seconds();
    rows[1].push_back(abs ? format_fixed(*abs, 1) : "NA");
  }
  return render_rows(rows);
}

std::string render_ranking_table(const PromptRanking& ranking, std::span<const PromptPair> pairs) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"", "Gaze Area", "Positive Prompt", "Negative Prompt", "LA Slope"});
  for (const auto& e : ranking.entries) {
    const auto pair = find_prompt(pairs, e.prompt_pair_id);
    rows.push_back({e.prompt_pair_id, pair ? std::string(to_string(pair->gaze_area)) : "-",
                    pair ? pair->positive : "-", pair ? pair->negative : "-",
                    format_fixed(e.fit.slope, 5)});
  }
  return render_rows(rows);
}

SessionData load_session(const std::filesystem::path& manifest_path) {
  SessionData session;
  session.manifest = read_manifest(manifest_path);
  std::filesystem::path scores = session.manifest.score_source;
  if (scores.is_relative()) scores = manifest_path.parent_path() / scores;
  session.series = read_score_file(scores, session.manifest.mode);
  if (session.series.empty()) throw Error(scores.string() + ": no series found");
  for (const auto& [id, series] : session.series) {
    throw_if_invalid(validate_manifest(session.manifest, series), manifest_path.string());
  }
  return session;
}

ProtocolConfig read_protocol_config(const std::filesystem::path& path) {
  using detail::Json;
  const Json doc = detail::parse_json(detail::read_text_file(path), path.string());
  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp = p;
    return fp.is_relative() ? base / fp : fp;
  };

  ProtocolConfig config;
  try {
    for (const auto& p : detail::require(doc, "calibration")) {
      config.calibration.push_back(resolve(p.get<std::string>()));
    }
    for (const auto& p : detail::require(doc, "test")) config.test.push_back(resolve(p.get<std::string>()));
    if (doc.contains("catalog")) config.catalog = resolve(detail::require_string(doc, "catalog"));
    if (doc.contains("candidates")) {
      config.candidate_ids = doc["candidates"].get<std::vector<std::string>>();
    }
    if (doc.contains("window")) config.options.window = detail::require_int(doc, "window");
    if (doc.contains("temperature")) config.options.temperature = detail::require_number(doc, "temperature");
    if (doc.contains("min_consecutive")) {
      config.options.min_consecutive = detail::require_int(doc, "min_consecutive");
    }
    if (doc.contains("mode")) config.options.mode = parse_series_mode(detail::require_string(doc, "mode"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  if (config.calibration.empty()) throw Error(path.string() + ": calibration list is empty");
  return config;
}

ProtocolReport run_protocol(const ProtocolConfig& config) {
  std::vector<SessionData> calibration;
  std::vector<SessionData> test;
  for (const auto& p : config.calibration) calibration.push_back(load_session(p));
  for (const auto& p : config.test) test.push_back(load_session(p));
  if (calibration.empty()) throw Error("protocol: no calibration sessions");

  const SessionManifest& ref = calibration.front().manifest;
  // Fail on mixed sessions before touching the catalog.
  for (const auto& s : calibration) check_consistent(calibration.front(), s);
  for (const auto& s : test) check_consistent(calibration.front(), s);

  const std::vector<PromptPair> catalog =
      config.catalog ? read_catalog_file(*config.catalog) : load_prompt_catalog(ref.state_change_kind);
  std::vector<PromptPair> candidates;
  if (config.candidate_ids.empty()) {
    candidates = filter_by_gaze(catalog, ref.gaze_area);
  } else {
    for (const auto& id : config.candidate_ids) {
      auto pair = find_prompt(catalog, id);
      if (!pair) throw Error("candidate '" + id + "' is not in the catalog");
      candidates.push_back(std::move(*pair));
    }
  }
  if (candidates.empty()) {
    throw Error("no catalog prompt pairs for gaze area " + std::string(to_string(ref.gaze_area)));
  }
  return run_protocol(calibration, test, candidates, config.options);
}

}  // namespace cookstate
