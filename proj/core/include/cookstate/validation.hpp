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

#include <span>
#include <string>
#include <vector>

#include "cookstate/model.hpp"

namespace cookstate {

struct Violation {
  std::string field;    // path such as "samples[3].t" or "annotation_time"
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// All violations joined as "field: message; ...".
  std::string summary() const;
};

std::vector<Violation> validate(const PromptPair& pair);
std::vector<Violation> validate(const ScoreSeries& series);
std::vector<Violation> validate(const SessionManifest& manifest);
std::vector<Violation> validate(const RecognizerProfile& profile);

/// Per-pair invariants plus id uniqueness across the whole list.
std::vector<Violation> validate_catalog(std::span<const PromptPair> pairs);

/// Checks manifest and series invariants, and that the annotation (if any)
/// falls inside the series' time span. Never throws.
ValidationResult validate_manifest(const SessionManifest& manifest, const ScoreSeries& series);

/// Throws Error carrying the summary when `result` has violations.
void throw_if_invalid(const ValidationResult& result, std::string_view context);

}  // namespace cookstate
