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

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <optional>

#include "cookstate/catalog.hpp"
#include "cookstate/protocol.hpp"
#include "cookstate/recognizer.hpp"
#include "cookstate/score_file.hpp"
#include "cookstate/serialization.hpp"
#include "cookstate/synthgen.hpp"
#include "cookstate/validation.hpp"

namespace cookstate::cli {
namespace {

namespace fs = std::filesystem;

struct CommonFlags {
  int window = kDefaultSmaWindow;
  double temperature = kDefaultTemperature;
  int min_consecutive = 1;
  std::string mode;
  std::string out;

  CLI::Option* window_opt = nullptr;
  CLI::Option* temperature_opt = nullptr;
  CLI::Option* min_consecutive_opt = nullptr;

  std::optional<SeriesMode> series_mode() const {
    if (mode.empty()) return std::nullopt;
    return parse_series_mode(mode);
  }
};

void add_common(CLI::App& cmd, CommonFlags& f, const std::string& out_help) {
  f.window_opt = cmd.add_option("--window", f.window, "SMA window in samples (continuous mode)")
                     ->check(CLI::PositiveNumber);
  f.temperature_opt = cmd.add_option("--temperature", f.temperature, "softmax temperature")
                          ->check(CLI::PositiveNumber);
  f.min_consecutive_opt =
      cmd.add_option("--min-consecutive", f.min_consecutive, "samples that must stay above threshold")
          ->check(CLI::PositiveNumber);
  cmd.add_option("--mode", f.mode, "continuous or discrete")
      ->check(CLI::IsMember({"continuous", "discrete"}));
  cmd.add_option("--out", f.out, out_help);
}

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

fs::path resolve_scores(const std::string& scores_flag, const fs::path& manifest_path,
                        const SessionManifest& manifest) {
  if (!scores_flag.empty()) return scores_flag;
  fs::path p = manifest.score_source;
  return p.is_relative() ? manifest_path.parent_path() / p : p;
}

SeriesMap read_nonempty_scores(const fs::path& path, SeriesMode mode) {
  auto series = read_score_file(path, mode);
  if (series.empty()) throw Error(path.string() + ": no series found");
  return series;
}

const ScoreSeries& series_for(const SeriesMap& series, const std::string& id, const fs::path& path) {
  const auto it = series.find(id);
  if (it == series.end()) throw Error(path.string() + ": no scores for prompt pair '" + id + "'");
  return it->second;
}

std::vector<PromptPair> catalog_for(const std::string& catalog, const std::string& kind) {
  if (!catalog.empty()) return read_catalog_file(catalog);
  if (!kind.empty()) return load_prompt_catalog(parse_state_change_kind(kind));
  return load_full_catalog();
}

void emit(std::ostream& out, const std::string& path, const std::string& json) {
  if (path.empty()) {
    out << json;
  } else {
    write_file(path, json);
  }
}

// compare-prompts

struct CompareArgs {
  std::string scores;
  std::string catalog;
  std::string kind;
  std::string gaze;
  CommonFlags common;
};

int compare_prompts(const CompareArgs& a, std::ostream& out) {
  const auto mode = a.common.series_mode().value_or(SeriesMode::continuous);
  const auto series = read_nonempty_scores(a.scores, mode);
  const auto pairs = catalog_for(a.catalog, a.kind);

  std::optional<GazeArea> gaze;
  if (!a.gaze.empty()) gaze = parse_gaze_area(a.gaze);

  std::map<std::string, DegreeSeries> candidates;
  for (const auto& [id, s] : series) {
    if (gaze) {
      const auto pair = find_prompt(pairs, id);
      if (!pair || pair->gaze_area != *gaze) continue;
    }
    candidates.emplace(id, degree_series(s, a.common.temperature));
  }
  if (candidates.empty()) {
    throw Error(a.scores + ": no series for gaze area " + a.gaze + " in the catalog");
  }
  const auto ranking = select_prompt(candidates);
  const auto json = ranking_to_json(ranking);
  if (!a.common.out.empty()) write_file(a.common.out, json);
  out << render_ranking_table(ranking, pairs) << "chosen: " << ranking.chosen << '\n';
  return kExitOk;
}

// calibrate

struct CalibrateArgs {
  std::string scores;
  std::string manifest;
  std::string pair;
  std::string catalog;
  CommonFlags common;
};

int calibrate_cmd(const CalibrateArgs& a, std::ostream& out) {
  const auto manifest = read_manifest(a.manifest);
  if (!manifest.annotation_time) {
    throw Error(a.manifest + ": session '" + manifest.session_id + "' has no annotation_time");
  }
  const auto mode = a.common.series_mode().value_or(manifest.mode);
  const auto scores_path = resolve_scores(a.scores, a.manifest, manifest);
  const auto series = read_nonempty_scores(scores_path, mode);
  const auto& scores = series_for(series, a.pair, scores_path);
  throw_if_invalid(validate_manifest(manifest, scores), a.manifest);

  const auto catalog = catalog_for(a.catalog, "");
  const auto pair = find_prompt(catalog, a.pair);
  if (!pair) throw Error("prompt pair '" + a.pair + "' is not in the catalog");

  RecognizerProfile profile;
  profile.prompt_pair = *pair;
  profile.smoothing = Smoothing::for_mode(mode, a.common.window);
  profile.temperature = a.common.temperature;
  profile.detection_policy.min_consecutive = a.common.min_consecutive;
  profile.threshold = calibrate_threshold(degree_series(scores, profile.temperature), profile.smoothing,
                                          *manifest.annotation_time);
  throw_if_invalid({validate(profile)}, "profile");
  emit(out, a.common.out, profile_to_json(profile));
  return kExitOk;
}

// detect

struct DetectArgs {
  std::string scores;
  std::string profile;
  std::string manifest;
  CommonFlags common;
};

int detect_cmd(const DetectArgs& a, std::ostream& out) {
  if (a.scores.empty() && a.manifest.empty()) throw Error("detect needs --scores or --manifest");
  auto profile = read_profile(a.profile);
  if (given(a.common.window_opt) && profile.smoothing.kind == Smoothing::Kind::sma) {
    profile.smoothing.window = a.common.window;
  }
  if (given(a.common.temperature_opt)) profile.temperature = a.common.temperature;
  if (given(a.common.min_consecutive_opt)) {
    profile.detection_policy.min_consecutive = a.common.min_consecutive;
  }
  throw_if_invalid({validate(profile)}, a.profile);

  std::optional<SessionManifest> manifest;
  if (!a.manifest.empty()) manifest = read_manifest(a.manifest);
  const auto mode = a.common.series_mode().value_or(manifest ? manifest->mode : SeriesMode::continuous);
  const fs::path scores_path = manifest ? resolve_scores(a.scores, a.manifest, *manifest) : fs::path(a.scores);
  const auto series = read_nonempty_scores(scores_path, mode);
  const auto& scores = series_for(series, profile.prompt_pair.id, scores_path);
  if (manifest) throw_if_invalid(validate_manifest(*manifest, scores), a.manifest);

  const auto detected = detect_change(degree_series(scores, profile.temperature), profile);
  const std::string session_id = manifest ? manifest->session_id : scores_path.stem().string();
  const auto report = evaluate(session_id, detected, manifest ? manifest->annotation_time : std::nullopt);
  emit(out, a.common.out, report_to_json(report));
  return kExitOk;
}

// protocol

struct ProtocolArgs {
  std::string config;
  CommonFlags common;
};

int protocol_cmd(const ProtocolArgs& a, std::ostream& out) {
  auto config = read_protocol_config(a.config);
  if (given(a.common.window_opt)) config.options.window = a.common.window;
  if (given(a.common.temperature_opt)) config.options.temperature = a.common.temperature;
  if (given(a.common.min_consecutive_opt)) config.options.min_consecutive = a.common.min_consecutive;
  if (const auto mode = a.common.series_mode()) config.options.mode = mode;

  const auto report = run_protocol(config);
  const auto json = protocol_report_to_json(report);
  if (!a.common.out.empty()) write_file(a.common.out, json);
  out << render_ranking_table(report.ranking, std::span(&report.profile.prompt_pair, 1)) << '\n'
      << "threshold: " << report.profile.threshold << '\n'
      << '\n'
      << render_result_table(report);
  return kExitOk;
}

// simulate

struct SimulateArgs {
  std::string spec;
  std::optional<std::uint64_t> seed;
  CommonFlags common;
};

int simulate_cmd(const SimulateArgs& a, std::ostream& out) {
  if (a.common.out.empty()) throw Error("simulate needs --out <directory>");
  auto spec = synth_spec_from_json(read_file(a.spec));
  if (a.seed) spec.seed = *a.seed;
  if (const auto mode = a.common.series_mode()) spec.mode = *mode;
  if (given(a.common.temperature_opt)) spec.temperature = a.common.temperature;
  const auto session = generate_session(spec);
  write_session_files(a.common.out, session);
  std::size_t samples = 0;
  for (const auto& [id, s] : session.series) samples += s.samples.size();
  out << "wrote " << session.series.size() << " series, " << samples << " samples to " << a.common.out
      << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cooking state change recognition from prompt-pair similarity scores", "cookstate"};
  app.require_subcommand(1);

  CompareArgs compare;
  auto* cmp = app.add_subcommand("compare-prompts", "rank prompt pairs by LA slope");
  cmp->add_option("--scores", compare.scores, "JSONL score file")->required();
  cmp->add_option("--catalog", compare.catalog, "prompt catalog JSON (default: bundled)");
  cmp->add_option("--kind", compare.kind, "bundled catalog to use for prompt text");
  cmp->add_option("--gaze", compare.gaze, "only rank pairs for this gaze area")
      ->check(CLI::IsMember({"entire_vessel", "contents_only"}));
  add_common(*cmp, compare.common, "write the ranking JSON here");

  CalibrateArgs calib;
  auto* cal = app.add_subcommand("calibrate", "derive a threshold from an annotated session");
  cal->add_option("--manifest", calib.manifest, "session manifest with annotation_time")->required();
  cal->add_option("--scores", calib.scores, "JSONL score file (default: manifest score_source)");
  cal->add_option("--pair", calib.pair, "prompt pair id")->required();
  cal->add_option("--catalog", calib.catalog, "prompt catalog JSON (default: bundled)");
  add_common(*cal, calib.common, "write the profile JSON here (default: stdout)");

  DetectArgs det;
  auto* dt = app.add_subcommand("detect", "detect the change time with a calibrated profile");
  dt->add_option("--profile", det.profile, "recognizer profile JSON")->required();
  dt->add_option("--scores", det.scores, "JSONL score file (default: manifest score_source)");
  dt->add_option("--manifest", det.manifest, "session manifest; enables diff_seconds");
  add_common(*dt, det.common, "write the report JSON here (default: stdout)");

  ProtocolArgs proto;
  auto* pr = app.add_subcommand("protocol", "calibrate on some sessions and test on others");
  pr->add_option("--config", proto.config, "protocol config JSON")->required();
  add_common(*pr, proto.common, "write the protocol report JSON here");

  SimulateArgs sim;
  auto* sm = app.add_subcommand("simulate", "write a synthetic session with known change time");
  sm->add_option("--spec", sim.spec, "synthetic spec JSON")->required();
  sm->add_option("--seed", sim.seed, "override the spec seed");
  add_common(*sm, sim.common, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUserError;
  }

  try {
    if (*cmp) return compare_prompts(compare, out);
    if (*cal) return calibrate_cmd(calib, out);
    if (*dt) return detect_cmd(det, out);
    if (*pr) return protocol_cmd(proto, out);
    if (*sm) return simulate_cmd(sim, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace cookstate::cli
