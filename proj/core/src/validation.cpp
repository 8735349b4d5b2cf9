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

#include "cookstate/validation.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace cookstate {
namespace {

std::string indexed(std::string_view base, std::size_t i, std::string_view field = {}) {
  std::string out(base);
  out += '[' + std::to_string(i) + ']';
  if (!field.empty()) {
    out += '.';
    out += field;
  }
  return out;
}

std::string fmt_seconds(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

void append(std::vector<Violation>& into, std::vector<Violation> more, std::string_view prefix) {
  for (auto& v : more) {
    if (!prefix.empty()) v.field = std::string(prefix) + "." + v.field;
    into.push_back(std::move(v));
  }
}

}  // namespace

std::string ValidationResult::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.field + ": " + v.message;
  }
  return out;
}

std::vector<Violation> validate(const PromptPair& pair) {
  std::vector<Violation> out;
  if (pair.id.empty()) out.push_back({"id", "must be non-empty"});
  if (pair.positive.empty()) out.push_back({"positive", "must be non-empty"});
  if (pair.negative.empty()) out.push_back({"negative", "must be non-empty"});
  if (!pair.positive.empty() && pair.positive == pair.negative) {
    out.push_back({"negative", "must differ from positive"});
  }
  return out;
}

std::vector<Violation> validate(const ScoreSeries& series) {
  std::vector<Violation> out;
  if (series.prompt_pair_id.empty()) out.push_back({"prompt_pair_id", "must be non-empty"});
  if (series.samples.empty()) {
    out.push_back({"samples", "series non-empty"});
    return out;
  }
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    const auto& s = series.samples[i];
    if (!std::isfinite(s.t) || s.t < 0.0) {
      out.push_back({indexed("samples", i, "t"), "must be finite and >= 0"});
    }
    if (!std::isfinite(s.sim_pos)) out.push_back({indexed("samples", i, "sim_pos"), "must be finite"});
    if (!std::isfinite(s.sim_neg)) out.push_back({indexed("samples", i, "sim_neg"), "must be finite"});
    if (i > 0 && !(s.t > series.samples[i - 1].t)) {
      out.push_back({indexed("samples", i, "t"), "samples must be strictly increasing in t"});
    }
  }
  return out;
}

std::vector<Violation> validate(const SessionManifest& manifest) {
  std::vector<Violation> out;
  if (manifest.session_id.empty()) out.push_back({"session_id", "must be non-empty"});
  if (manifest.annotation_time &&
      (!std::isfinite(*manifest.annotation_time) || *manifest.annotation_time < 0.0)) {
    out.push_back({"annotation_time", "must be finite and >= 0"});
  }
  return out;
}

std::vector<Violation> validate(const RecognizerProfile& profile) {
  std::vector<Violation> out;
  append(out, validate(profile.prompt_pair), "prompt_pair");
  if (!(profile.threshold >= 0.0 && profile.threshold <= 1.0)) {
    out.push_back({"threshold", "must lie in [0, 1]"});
  }
  if (profile.smoothing.kind == Smoothing::Kind::sma && profile.smoothing.window < 1) {
    out.push_back({"smoothing.window", "must be >= 1"});
  }
  if (profile.detection_policy.min_consecutive < 1) {
    out.push_back({"detection_policy.min_consecutive", "must be >= 1"});
  }
  if (!(profile.temperature > 0.0) || !std::isfinite(profile.temperature)) {
    out.push_back({"temperature", "must be a positive finite number"});
  }
  return out;
}

std::vector<Violation> validate_catalog(std::span<const PromptPair> pairs) {
  std::vector<Violation> out;
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    append(out, validate(pairs[i]), indexed("", i));
    if (!seen.insert(pairs[i].id).second) {
      out.push_back({indexed("", i, "id"), "duplicate id '" + pairs[i].id + "'"});
    }
  }
  return out;
}

ValidationResult validate_manifest(const SessionManifest& manifest, const ScoreSeries& series) {
  ValidationResult result;
  append(result.violations, validate(manifest), {});
  append(result.violations, validate(series), "series");
  if (manifest.annotation_time && !series.samples.empty()) {
    const double a = *manifest.annotation_time;
    const double first = series.samples.front().t;
    const double last = series.samples.back().t;
    if (a < first || a > last) {
      result.violations.push_back(
          {"annotation_time", "annotation outside series span [" + fmt_seconds(first) + ", " +
                                  fmt_seconds(last) + "] of '" + series.prompt_pair_id + "'"});
    }
  }
  return result;
}

void throw_if_invalid(const ValidationResult& result, std::string_view context) {
  if (!result.ok()) throw Error(std::string(context) + ": " + result.summary());
}

}  // namespace cookstate
