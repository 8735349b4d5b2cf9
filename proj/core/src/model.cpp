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

#include "cookstate/model.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace cookstate {
namespace {

template <typename Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<TemplateForm, 4> kTemplateForms{{
    {TemplateForm::A_simple, "A_simple"},
    {TemplateForm::B_with_change_desc, "B_with_change_desc"},
    {TemplateForm::C_ingredient_first_simple, "C_ingredient_first_simple"},
    {TemplateForm::D_ingredient_first_with_change_desc, "D_ingredient_first_with_change_desc"},
}};

constexpr NameTable<GazeArea, 2> kGazeAreas{{
    {GazeArea::entire_vessel, "entire_vessel"},
    {GazeArea::contents_only, "contents_only"},
}};

constexpr NameTable<StateChangeKind, 4> kKinds{{
    {StateChangeKind::vaporization, "vaporization"},
    {StateChangeKind::melting, "melting"},
    {StateChangeKind::protein_denaturation, "protein_denaturation"},
    {StateChangeKind::maillard, "maillard"},
}};

constexpr NameTable<SeriesMode, 2> kModes{{
    {SeriesMode::continuous, "continuous"},
    {SeriesMode::discrete, "discrete"},
}};

constexpr NameTable<DetectionStatus, 2> kStatuses{{
    {DetectionStatus::detected, "detected"},
    {DetectionStatus::not_detected, "not_detected"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const NameTable<Enum, N>& table, Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum parse_name(const NameTable<Enum, N>& table, std::string_view text, std::string_view what) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  std::string expected;
  for (const auto& [e, name] : table) {
    if (!expected.empty()) expected += ", ";
    expected += name;
  }
  throw Error("unknown " + std::string(what) + " '" + std::string(text) + "' (expected one of: " +
              expected + ")");
}

}  // namespace

std::string_view to_string(TemplateForm form) { return name_of(kTemplateForms, form); }
std::string_view to_string(GazeArea area) { return name_of(kGazeAreas, area); }
std::string_view to_string(StateChangeKind kind) { return name_of(kKinds, kind); }
std::string_view to_string(SeriesMode mode) { return name_of(kModes, mode); }
std::string_view to_string(DetectionStatus status) { return name_of(kStatuses, status); }

TemplateForm parse_template_form(std::string_view text) {
  return parse_name(kTemplateForms, text, "template form");
}
GazeArea parse_gaze_area(std::string_view text) { return parse_name(kGazeAreas, text, "gaze area"); }
StateChangeKind parse_state_change_kind(std::string_view text) {
  return parse_name(kKinds, text, "state change kind");
}
SeriesMode parse_series_mode(std::string_view text) { return parse_name(kModes, text, "mode"); }
DetectionStatus parse_detection_status(std::string_view text) {
  return parse_name(kStatuses, text, "status");
}

std::optional<double> RecognitionReport::abs_diff_seconds() const {
  if (!diff_seconds) return std::nullopt;
  return std::fabs(*diff_seconds);
}

}  // namespace cookstate
