#pragma once

#include <stdexcept>
#include <string>

namespace supauli {

// Mirrors the status codes of the public C API (supauli/supauli.h).
enum class ErrorCode : int {
  InvalidArgument = 1,
  ResourceLimit = 2,
  OutOfSpan = 3,
  UnsupportedDimension = 4,
  ContractViolation = 5,
  Parse = 6,
  VerificationFailed = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace supauli
