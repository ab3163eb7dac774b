#pragma once

#include "totpos/automorph.hpp"

#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>

namespace totpos {

/// Line protocol for external oracles: each request is one line
/// {"matrix": <matrix>} and each response one line {"matrix": <matrix>}, optionally
/// with "scale": <radical> when the image is an irrational multiple of a rational
/// matrix. A child that exits or writes a malformed line is an oracle failure.
class SubprocessOracle {
 public:
  /// Runs `command` through /bin/sh -c.
  explicit SubprocessOracle(const std::string& command);
  ~SubprocessOracle();
  SubprocessOracle(const SubprocessOracle&) = delete;
  SubprocessOracle& operator=(const SubprocessOracle&) = delete;

  /// Serialized: one request in flight at a time.
  ScaledMatrix operator()(const RatMatrix& input);

 private:
  std::string command_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;
  std::mutex mutex_;

  std::string read_line();
  [[noreturn]] void fail(const std::string& why);
};

MatrixMap subprocess_oracle(const std::string& command);

/// The serving side: answers requests from `in` with `map` until EOF. Returns 0, or
/// 1 after reporting a failed request on `err`.
int serve_oracle(const MatrixMap& map, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace totpos
