#include "rook/bigint.hpp"
#include "rook/error.hpp"

#include <cctype>
#include <limits>

namespace rook {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotNondecreasing: return "NotNondecreasing";
        case ErrorCode::NegativeHeight: return "NegativeHeight";
        case ErrorCode::PaddingTooSmall: return "PaddingTooSmall";
        case ErrorCode::EmptyBoard: return "EmptyBoard";
        case ErrorCode::InvalidDimensions: return "InvalidDimensions";
        case ErrorCode::CellOutOfRange: return "CellOutOfRange";
        case ErrorCode::DegreeExceedsN: return "DegreeExceedsN";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::TooManyRows: return "TooManyRows";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

std::optional<BigInt> parse_bigint(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return std::nullopt;
    }
    BigInt value{std::string(text)};
    return negative ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::optional<std::int64_t> to_int64(const BigInt& value) {
    if (value < std::numeric_limits<std::int64_t>::min() ||
        value > std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(value);
}

}  // namespace rook
