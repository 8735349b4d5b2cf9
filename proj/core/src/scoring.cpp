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

#include "cookstate/scoring.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace cookstate {

FrameScore CachingBackend::score(const FrameRequest& request) {
  Key key{request.frame, request.positive, request.negative, request.crop};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const FrameScore result = inner_.score(request);
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::move(key), result).first->second;
}

std::size_t CachingBackend::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::string_view to_string(FrameFailurePolicy policy) {
  return policy == FrameFailurePolicy::abort ? "abort" : "skip_frame";
}

FrameFailurePolicy parse_frame_failure_policy(std::string_view text) {
  if (text == "abort") return FrameFailurePolicy::abort;
  if (text == "skip_frame") return FrameFailurePolicy::skip_frame;
  throw Error("unknown frame failure policy '" + std::string(text) +
              "' (expected abort or skip_frame)");
}

namespace {

struct FrameRow {
  std::vector<FrameScore> scores;  // one per pair
  std::string error;               // empty on success
};

FrameRow score_one_frame(const std::string& frame, std::span<const PromptPair> pairs,
                         ScorerBackend& backend, const ScoringOptions& options) {
  FrameRow row;
  row.scores.reserve(pairs.size());
  try {
    for (const auto& pair : pairs) {
      const FrameScore s = backend.score({frame, pair.positive, pair.negative, options.crop});
      if (!std::isfinite(s.sim_pos) || !std::isfinite(s.sim_neg)) {
        throw BackendError("non-finite similarity for pair '" + pair.id + "'");
      }
      row.scores.push_back(s);
    }
  } catch (const std::exception& e) {
    row.scores.clear();
    row.error = e.what();
    if (row.error.empty()) row.error = "backend failure";
  }
  return row;
}

}  // namespace

SeriesMap score_frames(std::span<const std::string> frames, std::span<const PromptPair> pairs,
                       ScorerBackend& backend, double sampling_period,
                       const ScoringOptions& options) {
  if (!(sampling_period > 0.0) || !std::isfinite(sampling_period)) {
    throw Error("sampling_period must be a positive number of seconds");
  }

  std::vector<FrameRow> rows(frames.size());
  const unsigned workers =
      std::clamp<unsigned>(options.workers, 1u, static_cast<unsigned>(std::max<std::size_t>(frames.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < frames.size(); ++i) {
      rows[i] = score_one_frame(frames[i], pairs, backend, options);
      if (!rows[i].error.empty() && options.on_failure == FrameFailurePolicy::abort) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < frames.size(); i = next++) {
          rows[i] = score_one_frame(frames[i], pairs, backend, options);
        }
      });
    }
  }

  SeriesMap out;
  for (const auto& pair : pairs) {
    auto& s = out[pair.id];
    s.prompt_pair_id = pair.id;
    s.mode = options.mode;
    s.samples.reserve(frames.size());
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const FrameRow& row = rows[i];
    if (!row.error.empty()) {
      if (options.on_failure == FrameFailurePolicy::abort) {
        throw BackendError("frame " + std::to_string(i) + " ('" + frames[i] + "'): " + row.error);
      }
      continue;
    }
    const double t = static_cast<double>(i) * sampling_period;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      out[pairs[k].id].samples.push_back({t, row.scores[k].sim_pos, row.scores[k].sim_neg});
    }
  }
  return out;
}

std::vector<std::string> list_frames(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("frame source is not a directory: " + dir.string());
  std::vector<std::string> frames;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) frames.push_back(entry.path().string());
  }
  std::sort(frames.begin(), frames.end());
  return frames;
}

SeriesMap score_session(const SessionManifest& manifest, std::span<const PromptPair> pairs,
                        ScorerBackend& backend, double sampling_period,
                        const ScoringOptions& options, const std::filesystem::path& base_dir) {
  std::filesystem::path source = manifest.score_source;
  if (source.is_relative() && !base_dir.empty()) source = base_dir / source;
  const auto frames = list_frames(source);
  ScoringOptions opts = options;
  opts.mode = manifest.mode;
  return score_frames(frames, pairs, backend, sampling_period, opts);
}

}  // namespace cookstate
