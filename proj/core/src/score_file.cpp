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

#include "cookstate/score_file.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace cookstate {

SeriesMap parse_score_lines(std::istream& in, SeriesMode mode, std::string_view source) {
  SeriesMap out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(std::string(source) + ": line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    detail::Json obj;
    try {
      obj = detail::Json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw fail("invalid JSON");
    }
    if (!obj.is_object()) throw fail("expected a JSON object");

    std::string id;
    ScoreSample sample;
    try {
      id = detail::require_string(obj, "prompt_pair_id");
      sample.t = detail::require_number(obj, "t");
      sample.sim_pos = detail::require_number(obj, "sim_pos");
      sample.sim_neg = detail::require_number(obj, "sim_neg");
    } catch (const Error& e) {
      throw fail(e.what());
    }
    if (id.empty()) throw fail("prompt_pair_id must be non-empty");
    if (!std::isfinite(sample.t) || sample.t < 0.0) throw fail("t must be finite and >= 0");

    auto& series = out[id];
    series.prompt_pair_id = id;
    series.mode = mode;
    series.samples.push_back(sample);
  }

  for (auto& [id, series] : out) {
    auto& s = series.samples;
    std::stable_sort(s.begin(), s.end(),
                     [](const ScoreSample& a, const ScoreSample& b) { return a.t < b.t; });
    const auto dup = std::adjacent_find(
        s.begin(), s.end(), [](const ScoreSample& a, const ScoreSample& b) { return a.t == b.t; });
    if (dup != s.end()) {
      std::ostringstream os;
      os << source << ": duplicate timestamp t=" << dup->t << " for prompt pair '" << id << "'";
      throw Error(os.str());
    }
  }
  return out;
}

SeriesMap read_score_file(const std::filesystem::path& path, SeriesMode mode) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open score file " + path.string());
  return parse_score_lines(in, mode, path.string());
}

std::string format_score_line(std::string_view prompt_pair_id, const ScoreSample& sample) {
  detail::Json obj;
  obj["prompt_pair_id"] = prompt_pair_id;
  obj["t"] = sample.t;
  obj["sim_pos"] = sample.sim_pos;
  obj["sim_neg"] = sample.sim_neg;
  return obj.dump();
}

std::string format_score_lines(const SeriesMap& series) {
  std::string out;
  for (const auto& [id, s] : series) {
    for (const auto& sample : s.samples) {
      out += format_score_line(id, sample);
      out += '\n';
    }
  }
  return out;
}

void write_score_file(const std::filesystem::path& path, const SeriesMap& series) {
  detail::write_text_file(path, format_score_lines(series));
}

}  // namespace cookstate
