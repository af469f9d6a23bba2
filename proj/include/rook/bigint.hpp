#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rook {

using BigInt = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Surrounding whitespace is
/// ignored; anything else returns nullopt.
std::optional<BigInt> parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Narrowing conversion; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const BigInt& value);

}  // namespace rook
