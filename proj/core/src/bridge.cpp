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

#include "cookstate/bridge.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/un.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "json_util.hpp"

namespace cookstate {
namespace {

using detail::Json;

std::string errno_text(std::string_view what) {
  return std::string(what) + ": " + std::strerror(errno);
}

void write_all(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw BackendError(errno_text("bridge write failed"));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

// Reads up to and excluding the next '\n', keeping any surplus in `pending`.
std::string read_line(int fd, std::string& pending) {
  for (;;) {
    if (const auto nl = pending.find('\n'); nl != std::string::npos) {
      std::string line = pending.substr(0, nl);
      pending.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    char buf[4096];
    const ssize_t n = ::read(fd, buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw BackendError(errno_text("bridge read failed"));
    }
    if (n == 0) throw BackendError("bridge closed the stream");
    pending.append(buf, static_cast<std::size_t>(n));
  }
}

}  // namespace

std::string encode_bridge_request(const FrameRequest& request) {
  Json obj;
  obj["frame"] = request.frame;
  obj["positive"] = request.positive;
  obj["negative"] = request.negative;
  if (request.crop) obj["crop"] = *request.crop;
  return obj.dump();
}

FrameRequest decode_bridge_request(std::string_view line) {
  const Json obj = detail::parse_json(line, "bridge request");
  FrameRequest req;
  req.frame = detail::require_string(obj, "frame");
  req.positive = detail::require_string(obj, "positive");
  req.negative = detail::require_string(obj, "negative");
  if (const auto it = obj.find("crop"); it != obj.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 4) throw Error("field crop must be [x, y, w, h]");
    CropRect rect{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!(*it)[i].is_number_integer()) throw Error("field crop must hold integers");
      rect[i] = (*it)[i].get<int>();
    }
    req.crop = rect;
  }
  return req;
}

std::string encode_bridge_response(const FrameScore& score) {
  Json obj;
  obj["sim_pos"] = score.sim_pos;
  obj["sim_neg"] = score.sim_neg;
  return obj.dump();
}

std::string encode_bridge_error(std::string_view message) {
  Json obj;
  obj["error"] = message;
  return obj.dump();
}

FrameScore decode_bridge_response(std::string_view line) {
  Json obj;
  try {
    obj = Json::parse(line.begin(), line.end());
  } catch (const nlohmann::json::parse_error&) {
    throw BackendError("malformed bridge response: " + std::string(line.substr(0, 200)));
  }
  if (!obj.is_object()) throw BackendError("bridge response is not a JSON object");
  if (const auto it = obj.find("error"); it != obj.end()) {
    throw BackendError("bridge error: " + (it->is_string() ? it->get<std::string>() : it->dump()));
  }
  try {
    FrameScore s{detail::require_number(obj, "sim_pos"), detail::require_number(obj, "sim_neg")};
    if (!std::isfinite(s.sim_pos) || !std::isfinite(s.sim_neg)) {
      throw Error("non-finite similarity");
    }
    return s;
  } catch (const BackendError&) {
    throw;
  } catch (const Error& e) {
    throw BackendError(std::string("malformed bridge response: ") + e.what());
  }
}

std::string StreamChannel::round_trip(std::string_view line) {
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw BackendError("bridge write failed");
  std::string reply;
  if (!std::getline(in_, reply)) throw BackendError("bridge closed the stream");
  if (!reply.empty() && reply.back() == '\r') reply.pop_back();
  return reply;
}

ProcessChannel::ProcessChannel(const std::string& command) {
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) throw BackendError(errno_text("pipe"));
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw BackendError(errno_text("pipe"));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) ::close(fd);
    throw BackendError(errno_text("fork"));
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  pid_ = pid;
  to_child_ = to_child[1];
  from_child_ = from_child[0];
}

ProcessChannel::~ProcessChannel() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
  }
}

std::string ProcessChannel::round_trip(std::string_view line) {
  std::string msg(line);
  msg += '\n';
  // A dead child would otherwise kill us with SIGPIPE.
  struct sigaction ignore {};
  struct sigaction previous {};
  ignore.sa_handler = SIG_IGN;
  ::sigaction(SIGPIPE, &ignore, &previous);
  try {
    write_all(to_child_, msg);
  } catch (...) {
    ::sigaction(SIGPIPE, &previous, nullptr);
    throw;
  }
  ::sigaction(SIGPIPE, &previous, nullptr);
  return read_line(from_child_, pending_);
}

UnixSocketChannel::UnixSocketChannel(const std::string& path) {
  sockaddr_un addr{};
  if (path.size() >= sizeof addr.sun_path) throw BackendError("socket path too long: " + path);
  fd_ = ::socket(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd_ < 0) throw BackendError(errno_text("socket"));
  addr.sun_family = AF_UNIX;
  std::memcpy(addr.sun_path, path.c_str(), path.size() + 1);
  if (::connect(fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof addr) != 0) {
    const std::string msg = errno_text("connect " + path);
    ::close(fd_);
    fd_ = -1;
    throw BackendError(msg);
  }
}

UnixSocketChannel::~UnixSocketChannel() {
  if (fd_ >= 0) ::close(fd_);
}

std::string UnixSocketChannel::round_trip(std::string_view line) {
  std::string msg(line);
  msg += '\n';
  while (!msg.empty()) {
    const ssize_t n = ::send(fd_, msg.data(), msg.size(), MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw BackendError(errno_text("bridge send failed"));
    }
    msg.erase(0, static_cast<std::size_t>(n));
  }
  return read_line(fd_, pending_);
}

std::unique_ptr<LineChannel> connect_bridge(std::string_view endpoint) {
  constexpr std::string_view kExec = "exec:";
  constexpr std::string_view kUnix = "unix:";
  if (endpoint.starts_with(kExec)) {
    return std::make_unique<ProcessChannel>(std::string(endpoint.substr(kExec.size())));
  }
  if (endpoint.starts_with(kUnix)) {
    return std::make_unique<UnixSocketChannel>(std::string(endpoint.substr(kUnix.size())));
  }
  throw Error("unsupported bridge endpoint '" + std::string(endpoint) +
              "' (expected exec:<command> or unix:<path>)");
}

FrameScore BridgeBackend::score(const FrameRequest& request) {
  std::lock_guard lock(mutex_);
  return decode_bridge_response(channel_->round_trip(encode_bridge_request(request)));
}

}  // namespace cookstate
