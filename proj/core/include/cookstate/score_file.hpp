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
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "cookstate/model.hpp"

namespace cookstate {

/// Score series keyed by prompt pair id.
using SeriesMap = std::map<std::string, ScoreSeries>;

/// Parses the JSONL score format, one object per line:
///
///   {"prompt_pair_id": "...", "t": 1.25, "sim_pos": 0.31, "sim_neg": 0.27}
///
/// Lines may interleave pairs and arrive in any time order; each series comes
/// back sorted by t. Blank lines are ignored. Throws Error with the 1-based
/// line number for malformed lines, and for a repeated (pair, t).
SeriesMap parse_score_lines(std::istream& in, SeriesMode mode = SeriesMode::continuous,
                            std::string_view source = "<stream>");
SeriesMap read_score_file(const std::filesystem::path& path,
                          SeriesMode mode = SeriesMode::continuous);

/// One line per sample, pairs in id order, samples in t order. Numbers use
/// the shortest representation that parses back to the same double.
std::string format_score_lines(const SeriesMap& series);
std::string format_score_line(std::string_view prompt_pair_id, const ScoreSample& sample);
void write_score_file(const std::filesystem::path& path, const SeriesMap& series);

}  // namespace cookstate
