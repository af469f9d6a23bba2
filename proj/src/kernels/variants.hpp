#pragma once

#include <cstdint>
#include <span>

namespace rook::kernels::detail {

bool add_shifted_scalar(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                        unsigned bit) noexcept;
bool add_shifted_avx2(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                      unsigned bit) noexcept;
bool add_shifted_neon(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                      unsigned bit) noexcept;

}  // namespace rook::kernels::detail
