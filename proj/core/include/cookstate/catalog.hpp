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
#include <string_view>
#include <vector>

#include "cookstate/model.hpp"

namespace cookstate {

/// Directory holding <kind>.json prompt catalogs. Checked in order:
/// $COOKSTATE_CATALOG_DIR, the install location, the source tree.
std::filesystem::path default_catalog_dir();

/// The eight bundled prompt pairs (four template forms, two gaze areas) for
/// one state change, ids of the form "<kind>/(b)-entire".
std::vector<PromptPair> load_prompt_catalog(StateChangeKind kind);
std::vector<PromptPair> load_prompt_catalog(StateChangeKind kind,
                                            const std::filesystem::path& catalog_dir);

/// All four bundled catalogs concatenated (32 pairs).
std::vector<PromptPair> load_full_catalog(const std::filesystem::path& catalog_dir = {});

/// Reads a JSON array of prompt pairs and checks every invariant, including
/// id uniqueness.
std::vector<PromptPair> read_catalog_file(const std::filesystem::path& path);
void write_catalog_file(const std::filesystem::path& path, std::span<const PromptPair> pairs);

std::optional<PromptPair> find_prompt(std::span<const PromptPair> pairs, std::string_view id);
std::vector<PromptPair> filter_by_gaze(std::span<const PromptPair> pairs, GazeArea area);

}  // namespace cookstate
