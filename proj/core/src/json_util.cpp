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

#include "json_util.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace cookstate::detail {

Json parse_json(std::string_view text, std::string_view context) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string(context) + ": invalid JSON: " + e.what());
  }
}

const Json& require(const Json& obj, std::string_view key) {
  if (!obj.is_object()) throw Error("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error("missing field " + std::string(key));
  return *it;
}

double require_number(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_number()) throw Error("field " + std::string(key) + " must be a number");
  return v.get<double>();
}

std::string require_string(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) throw Error("field " + std::string(key) + " must be a string");
  return v.get<std::string>();
}

int require_int(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer()) throw Error("field " + std::string(key) + " must be an integer");
  return v.get<int>();
}

std::optional<double> optional_number(const Json& obj, std::string_view key) {
  if (!obj.is_object()) throw Error("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw Error("field " + std::string(key) + " must be a number or null");
  return it->get<double>();
}

Json optional_to_json(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

std::string to_document(const Json& doc) { return doc.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("short write to " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot write " + path.string());
  }
}

}  // namespace cookstate::detail
