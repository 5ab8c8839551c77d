#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rpys {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed. `offset` is the byte position reached
/// in the input when the failure was detected (0 when not applicable).
class IoError : public Error {
 public:
  IoError(const std::string& what, std::uint64_t offset = 0)
      : Error(what), offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

/// The input is well-formed but cannot be analysed (empty corpus, no records).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value or unknown key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpys
