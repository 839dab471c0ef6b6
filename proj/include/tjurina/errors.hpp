#pragma once

#include <stdexcept>
#include <string>

namespace tjurina {

// Error classes with a stable CLI exit-code mapping (see cli).
enum class ErrorCode {
    ParseError,
    NotHomogeneous,
    ConeInput,
    NonIsolatedOrBug,
    NoStabilization,
    DimensionNotOne,
    NotSingular,
    WrongDimension,
    DegreeTooSmall,
    BoundViolation,
    BadInput,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Invariant checks that hold unless the implementation is wrong.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Internal, "internal invariant violated: " + what);
}

const char* error_code_name(ErrorCode code);

}  // namespace tjurina
