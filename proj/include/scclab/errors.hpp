#pragma once

#include <stdexcept>
#include <string>

namespace scclab {

// Invalid input is reported with std::invalid_argument throughout.

/// A configured size or work budget would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// The request is well formed but outside what is implemented.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace scclab
