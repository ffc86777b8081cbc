#pragma once

#include <stdexcept>
#include <string>

namespace sata {

// Bad flags, bad parameter combinations, refused requests. Maps to exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable or malformed input files, schema violations. Maps to exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sata
