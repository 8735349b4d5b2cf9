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

// Private helpers around nlohmann/json. Not installed.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cookstate/model.hpp"
#include "json.hpp"

namespace cookstate::detail {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text, std::string_view context);

const Json& require(const Json& obj, std::string_view key);
double require_number(const Json& obj, std::string_view key);
std::string require_string(const Json& obj, std::string_view key);
int require_int(const Json& obj, std::string_view key);
/// Absent or null map to nullopt.
std::optional<double> optional_number(const Json& obj, std::string_view key);

Json optional_to_json(const std::optional<double>& value);

/// Pretty JSON document terminated by a newline.
std::string to_document(const Json& doc);

std::string read_text_file(const std::filesystem::path& path);
/// Writes via a temporary sibling and rename, so readers never see a
/// half-written file.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace cookstate::detail
