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

#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "cookstate/scoring.hpp"

namespace cookstate {

// Client side of the newline-delimited JSON bridge protocol:
//
//   request   {"frame": "...", "positive": "...", "negative": "...", "crop": [x, y, w, h]}
//   response  {"sim_pos": 0.31, "sim_neg": 0.27}   or   {"error": "..."}
//
// "crop" is omitted when no crop is configured. One response per request,
// strictly in order.

std::string encode_bridge_request(const FrameRequest& request);
FrameRequest decode_bridge_request(std::string_view line);
std::string encode_bridge_response(const FrameScore& score);
std::string encode_bridge_error(std::string_view message);
/// Throws BackendError for {"error": ...} and for malformed responses.
FrameScore decode_bridge_response(std::string_view line);

/// A request/response pipe carrying one line each way.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  /// Sends `line` (without trailing newline) and returns the reply line.
  virtual std::string round_trip(std::string_view line) = 0;
};

class StreamChannel final : public LineChannel {
 public:
  StreamChannel(std::istream& from_bridge, std::ostream& to_bridge)
      : in_(from_bridge), out_(to_bridge) {}
  std::string round_trip(std::string_view line) override;

 private:
  std::istream& in_;
  std::ostream& out_;
};

/// Spawns `/bin/sh -c command` and talks over its stdin/stdout.
class ProcessChannel final : public LineChannel {
 public:
  explicit ProcessChannel(const std::string& command);
  ~ProcessChannel() override;
  ProcessChannel(const ProcessChannel&) = delete;
  ProcessChannel& operator=(const ProcessChannel&) = delete;

  std::string round_trip(std::string_view line) override;

 private:
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;
};

/// Connects to a bridge listening on a Unix domain socket.
class UnixSocketChannel final : public LineChannel {
 public:
  explicit UnixSocketChannel(const std::string& path);
  ~UnixSocketChannel() override;
  UnixSocketChannel(const UnixSocketChannel&) = delete;
  UnixSocketChannel& operator=(const UnixSocketChannel&) = delete;

  std::string round_trip(std::string_view line) override;

 private:
  int fd_ = -1;
  std::string pending_;
};

/// "exec:<shell command>" or "unix:<socket path>".
std::unique_ptr<LineChannel> connect_bridge(std::string_view endpoint);

/// ScorerBackend over a LineChannel. Calls are serialized, since the protocol
/// allows one request in flight.
class BridgeBackend final : public ScorerBackend {
 public:
  explicit BridgeBackend(std::unique_ptr<LineChannel> channel) : channel_(std::move(channel)) {}

  FrameScore score(const FrameRequest& request) override;

 private:
  std::unique_ptr<LineChannel> channel_;
  std::mutex mutex_;
};

}  // namespace cookstate
