#pragma once

#include <stdexcept>
#include <string>

namespace swf {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch = 2,
  Domain = 3,
  NotConverged = 4,
  Config = 5,
  Io = 6,
};

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace swf
