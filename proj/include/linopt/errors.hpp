#pragma once

#include <stdexcept>
#include <string>

namespace linopt {

// Domain error categories surfaced by the library. The CLI maps these to
// exit code 1 and a machine-readable payload; usage errors are handled
// separately by the argument parser.
enum class ErrorCode {
    DimensionMismatch,
    WeightMismatch,
    EmptyDistribution,
    SizeLimit,
    IncomparableInput,
    NotComparablePair,
    SupportMismatch,
    UnsupportedAlgo,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace linopt
