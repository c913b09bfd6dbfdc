#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

/// Invalid or inconsistent user input (config keys, malformed values, empty grids).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Request outside the numeric domain of an operation (degenerate slope,
/// formula outside its derivation range, non-convergence).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failures while reading configs or writing tables.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twistlab
