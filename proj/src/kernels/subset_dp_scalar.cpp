#include "variants.hpp"

#include <cstddef>

namespace rook::kernels::detail {

bool add_shifted_scalar(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                        unsigned bit) noexcept {
    const std::size_t stride = std::size_t{1} << bit;
    bool overflow = false;
    for (std::size_t base = 0; base < src.size(); base += 2 * stride) {
        const std::uint64_t* from = src.data() + base;
        std::uint64_t* to = dst.data() + base + stride;
        for (std::size_t i = 0; i < stride; ++i) {
            overflow |= __builtin_add_overflow(to[i], from[i], &to[i]);
        }
    }
    return overflow;
}

}  // namespace rook::kernels::detail
