#pragma once

#include <stdexcept>
#include <string>

namespace vqdes {

/// Invalid or inconsistent run configuration; the message names the field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite loss/gradient or a solver breakdown.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A report was requested on a run directory missing required artifacts.
class MissingArtifactError : public std::runtime_error {
 public:
  explicit MissingArtifactError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vqdes
