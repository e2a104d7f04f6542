#pragma once

#include <stdexcept>
#include <string>

namespace spikedet {

// An operation received arguments outside its contract.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two results that are supposed to come from the same scenario do not.
class InvalidComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem in a config file. line() is 1-based; 0 means the error is not
// tied to a single line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace spikedet
