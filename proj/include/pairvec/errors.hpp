#pragma once

#include <stdexcept>
#include <string>

namespace pairvec {

// Bad invocation: unknown flag, missing required argument, invalid value.
// The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data: missing file, malformed record, empty vocabulary.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pairvec
