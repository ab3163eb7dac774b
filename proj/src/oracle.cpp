#include "totpos/oracle.hpp"

#include "totpos/io.hpp"

#include <csignal>
#include <cerrno>
#include <cstring>
#include <iostream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace totpos {

SubprocessOracle::SubprocessOracle(const std::string& command) : command_(command) {
  int down[2];
  int up[2];
  if (pipe(down) != 0) throw std::runtime_error("oracle: pipe failed");
  if (pipe(up) != 0) {
    close(down[0]);
    close(down[1]);
    throw std::runtime_error("oracle: pipe failed");
  }
  // A child that dies early must surface as an error, not SIGPIPE.
  std::signal(SIGPIPE, SIG_IGN);
  pid_ = fork();
  if (pid_ < 0) throw std::runtime_error("oracle: fork failed");
  if (pid_ == 0) {
    dup2(down[0], STDIN_FILENO);
    dup2(up[1], STDOUT_FILENO);
    close(down[0]);
    close(down[1]);
    close(up[0]);
    close(up[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(down[0]);
  close(up[1]);
  to_child_ = down[1];
  from_child_ = up[0];
}

SubprocessOracle::~SubprocessOracle() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    waitpid(pid_, &status, 0);
  }
}

void SubprocessOracle::fail(const std::string& why) {
  std::string detail = why;
  if (pid_ > 0) {
    int status = 0;
    if (waitpid(pid_, &status, WNOHANG) == pid_) {
      pid_ = -1;
      if (WIFEXITED(status))
        detail += " (oracle exited with status " + std::to_string(WEXITSTATUS(status)) + ")";
    }
  }
  throw MathError("oracle '" + command_ + "' failed: " + detail);
}

std::string SubprocessOracle::read_line() {
  while (true) {
    const auto newline = pending_.find('\n');
    if (newline != std::string::npos) {
      std::string line = pending_.substr(0, newline);
      pending_.erase(0, newline + 1);
      return line;
    }
    char buffer[4096];
    const ssize_t got = read(from_child_, buffer, sizeof buffer);
    if (got < 0 && errno == EINTR) continue;
    if (got <= 0) fail("no response");
    pending_.append(buffer, static_cast<std::size_t>(got));
  }
}

ScaledMatrix SubprocessOracle::operator()(const RatMatrix& input) {
  std::lock_guard lock(mutex_);
  const std::string request = io::json{{"matrix", io::to_json(input)}}.dump() + "\n";
  std::size_t written = 0;
  while (written < request.size()) {
    const ssize_t n = write(to_child_, request.data() + written, request.size() - written);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) fail("cannot write request");
    written += static_cast<std::size_t>(n);
  }
  const std::string line = read_line();
  try {
    const auto response = io::json::parse(line);
    RadicalScalar scale =
        response.contains("scale") ? io::radical_from_json(response["scale"]) : RadicalScalar{};
    return ScaledMatrix(std::move(scale), io::matrix_from_json(response.at("matrix")));
  } catch (const std::exception& e) {
    fail(std::string("malformed response: ") + e.what());
  }
}

MatrixMap subprocess_oracle(const std::string& command) {
  auto oracle = std::make_shared<SubprocessOracle>(command);
  return [oracle](const RatMatrix& input) { return (*oracle)(input); };
}

int serve_oracle(const MatrixMap& map, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto request = io::json::parse(line);
      const ScaledMatrix image = map(io::matrix_from_json(request.at("matrix")));
      io::json response;
      if (const auto value = image.to_rational()) {
        response["matrix"] = io::to_json(*value);
      } else {
        response["matrix"] = io::to_json(image.body());
        response["scale"] = io::to_json(image.scale());
      }
      out << response.dump() << '\n' << std::flush;
    } catch (const std::exception& e) {
      err << "oracle: " << e.what() << '\n';
      return 1;
    }
  }
  return 0;
}

}  // namespace totpos
