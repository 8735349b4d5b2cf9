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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cookstate/model.hpp"
#include "cookstate/protocol.hpp"
#include "cookstate/recognizer.hpp"
#include "cookstate/synthgen.hpp"

namespace cookstate {

// JSON encodings of the domain types. Keys are snake_case and emitted in a
// fixed order; doubles use their shortest round-trip form, so decode followed
// by encode reproduces the encoder's output byte for byte. Decoders throw
// Error naming the offending field.

std::string catalog_to_json(std::span<const PromptPair> pairs);
std::vector<PromptPair> catalog_from_json(std::string_view text);

std::string manifest_to_json(const SessionManifest& manifest);
SessionManifest manifest_from_json(std::string_view text);

std::string profile_to_json(const RecognizerProfile& profile);
RecognizerProfile profile_from_json(std::string_view text);

std::string report_to_json(const RecognitionReport& report);
RecognitionReport report_from_json(std::string_view text);

std::string ranking_to_json(const PromptRanking& ranking);
PromptRanking ranking_from_json(std::string_view text);

std::string protocol_report_to_json(const ProtocolReport& report);
ProtocolReport protocol_report_from_json(std::string_view text);

std::string synth_spec_to_json(const SynthSpec& spec);
SynthSpec synth_spec_from_json(std::string_view text);

SessionManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const SessionManifest& manifest);
RecognizerProfile read_profile(const std::filesystem::path& path);
void write_profile(const std::filesystem::path& path, const RecognizerProfile& profile);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary file and rename.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace cookstate
