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

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "cookstate/model.hpp"
#include "cookstate/score_file.hpp"

namespace cookstate {

/// Pixel rectangle {x, y, w, h} applied by the bridge before scoring.
using CropRect = std::array<int, 4>;

struct FrameRequest {
  std::string frame;  // path or other reference understood by the backend
  std::string positive;
  std::string negative;
  std::optional<CropRect> crop;

  bool operator==(const FrameRequest&) const = default;
};

struct FrameScore {
  double sim_pos = 0.0;
  double sim_neg = 0.0;

  bool operator==(const FrameScore&) const = default;
};

/// Failure reported by a scorer for a single frame.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Seam to an external vision-language scorer. Implementations return raw
/// similarities and must be deterministic for identical requests. When
/// ScoringOptions::workers > 1, score() is called concurrently.
class ScorerBackend {
 public:
  virtual ~ScorerBackend() = default;
  virtual FrameScore score(const FrameRequest& request) = 0;
};

/// Memoizes another backend for the lifetime of the object.
class CachingBackend final : public ScorerBackend {
 public:
  explicit CachingBackend(ScorerBackend& inner) : inner_(inner) {}

  FrameScore score(const FrameRequest& request) override;
  std::size_t cache_size() const;

 private:
  using Key = std::tuple<std::string, std::string, std::string, std::optional<CropRect>>;

  ScorerBackend& inner_;
  mutable std::mutex mutex_;
  std::map<Key, FrameScore> cache_;
};

enum class FrameFailurePolicy { abort, skip_frame };

std::string_view to_string(FrameFailurePolicy policy);
FrameFailurePolicy parse_frame_failure_policy(std::string_view text);

struct ScoringOptions {
  FrameFailurePolicy on_failure = FrameFailurePolicy::abort;
  unsigned workers = 1;
  std::optional<CropRect> crop;
  SeriesMode mode = SeriesMode::continuous;
};

/// Scores every frame against every pair. Frame i is stamped at
/// i * sampling_period. Under skip_frame a failing frame is dropped from all
/// series; under abort the lowest failing frame index is reported.
SeriesMap score_frames(std::span<const std::string> frames, std::span<const PromptPair> pairs,
                       ScorerBackend& backend, double sampling_period,
                       const ScoringOptions& options = {});

/// Regular files in `dir`, sorted by file name.
std::vector<std::string> list_frames(const std::filesystem::path& dir);

/// score_frames() over the frame directory named by manifest.score_source
/// (relative paths resolve against `base_dir`).
SeriesMap score_session(const SessionManifest& manifest, std::span<const PromptPair> pairs,
                        ScorerBackend& backend, double sampling_period,
                        const ScoringOptions& options = {},
                        const std::filesystem::path& base_dir = {});

}  // namespace cookstate
