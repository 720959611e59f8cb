#pragma once

#include <stdexcept>
#include <string>

namespace lkit {

enum class ErrorCode {
    EmptyWord,
    IndexOutOfRange,
    NonzeroFinalStrands,
    MultiComponent,
    InvalidSite,
    BadCutWidth,
    DisconnectedPiece,
    TooManyCrossings,
    BadToken,
    UnknownBucket,
    BadBudget,
    BadReport,
    BadStyle,
};

const char* error_code_name(ErrorCode code);

/// All validation and limit failures surface as this exception.
/// TooManyCrossings is a resource limit; everything else is input validation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace lkit
