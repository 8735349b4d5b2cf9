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

#include "cookstate/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "cookstate/serialization.hpp"
#include "cookstate/validation.hpp"
#include "json_util.hpp"

namespace cookstate {

std::filesystem::path default_catalog_dir() {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("COOKSTATE_CATALOG_DIR"); env && *env) return env;
  for (const fs::path& dir : {fs::path(COOKSTATE_INSTALL_CATALOG_DIR),
                             fs::path(COOKSTATE_SOURCE_CATALOG_DIR)}) {
    std::error_code ec;
    if (fs::exists(dir / "vaporization.json", ec)) return dir;
  }
  throw Error("bundled prompt catalog not found; set COOKSTATE_CATALOG_DIR");
}

std::vector<PromptPair> load_prompt_catalog(StateChangeKind kind) {
  return load_prompt_catalog(kind, default_catalog_dir());
}

std::vector<PromptPair> load_prompt_catalog(StateChangeKind kind,
                                            const std::filesystem::path& catalog_dir) {
  return read_catalog_file(catalog_dir / (std::string(to_string(kind)) + ".json"));
}

std::vector<PromptPair> load_full_catalog(const std::filesystem::path& catalog_dir) {
  const auto dir = catalog_dir.empty() ? default_catalog_dir() : catalog_dir;
  std::vector<PromptPair> all;
  for (auto kind : {StateChangeKind::vaporization, StateChangeKind::melting,
                    StateChangeKind::protein_denaturation, StateChangeKind::maillard}) {
    auto pairs = load_prompt_catalog(kind, dir);
    all.insert(all.end(), pairs.begin(), pairs.end());
  }
  throw_if_invalid({validate_catalog(all)}, "bundled catalog");
  return all;
}

std::vector<PromptPair> read_catalog_file(const std::filesystem::path& path) {
  std::vector<PromptPair> pairs;
  try {
    pairs = catalog_from_json(detail::read_text_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  throw_if_invalid({validate_catalog(pairs)}, path.string());
  return pairs;
}

void write_catalog_file(const std::filesystem::path& path, std::span<const PromptPair> pairs) {
  throw_if_invalid({validate_catalog(pairs)}, "catalog");
  detail::write_text_file(path, catalog_to_json(pairs));
}

std::optional<PromptPair> find_prompt(std::span<const PromptPair> pairs, std::string_view id) {
  const auto it = std::find_if(pairs.begin(), pairs.end(),
                               [&](const PromptPair& p) { return p.id == id; });
  if (it == pairs.end()) return std::nullopt;
  return *it;
}

std::vector<PromptPair> filter_by_gaze(std::span<const PromptPair> pairs, GazeArea area) {
  std::vector<PromptPair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
               [&](const PromptPair& p) { return p.gaze_area == area; });
  return out;
}

}  // namespace cookstate
