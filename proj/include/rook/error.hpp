#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rook {

enum class ErrorCode {
    NotNondecreasing,
    NegativeHeight,
    PaddingTooSmall,
    EmptyBoard,
    InvalidDimensions,
    CellOutOfRange,
    DegreeExceedsN,
    ZeroPolynomial,
    NotMonic,
    TooManyRows,
    LimitExceeded,
    ParseError,
    InternalError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Contract violation or malformed input raised by any library operation.
/// Well-formed negative answers (an inverse rejection, a non-splitting
/// polynomial) are values, not errors.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rook
