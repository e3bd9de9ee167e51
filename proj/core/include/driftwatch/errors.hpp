#pragma once

#include <stdexcept>
#include <string>

namespace driftwatch {

/// Bad configuration: missing columns, invalid schedules, malformed config
/// files. Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad or insufficient data: unparseable cells, too few samples, dimension
/// mismatches. Maps to CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace driftwatch
