#pragma once

#include <stdexcept>
#include <string>

namespace gridga {

// Invalid configuration: bad grid spec, unknown problem id, operator/genome
// mismatch, malformed experiment file. The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Operator precondition violated at call time: length mismatch between
// parents, non-positive fitness handed to roulette, indices out of range.
class OperatorError : public std::runtime_error {
 public:
  explicit OperatorError(const std::string& what) : std::runtime_error(what) {}
};

// An objective or constraint returned a non-finite value, or a run failed
// while executing. The CLI maps this to exit code 2.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem problem while reading inputs or writing results. Also exit
// code 2: the configuration itself was fine, the run could not complete.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gridga
