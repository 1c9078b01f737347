#pragma once

#include <stdexcept>
#include <string>

namespace semlat {

enum class ErrorCode {
  kNotCommutative,
  kNotAssociative,
  kNotIdempotent,
  kNoTop,
  kNoBottom,
  kEntryOutOfRange,
  kOrderTooSmall,
  kOrderTooLarge,
  kMTooLarge,
  kIndexOutOfRange,
  kFormatError,
  kIoError,
  kUnknownMetric,
  kInvalidArgument,
};

const char* errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by meet-table validation; the message names the first violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised while parsing catalog files; line is 1-based, 0 when unknown.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line)
      : Error(ErrorCode::kFormatError,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace semlat
