#include "variants.hpp"

#include <arm_neon.h>

#include <cstddef>

namespace rook::kernels::detail {

bool add_shifted_neon(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                      unsigned bit) noexcept {
    const std::size_t stride = std::size_t{1} << bit;
    if (stride < 2) return add_shifted_scalar(src, dst, bit);

    uint64x2_t wrapped = vdupq_n_u64(0);
    for (std::size_t base = 0; base < src.size(); base += 2 * stride) {
        const std::uint64_t* from = src.data() + base;
        std::uint64_t* to = dst.data() + base + stride;
        for (std::size_t i = 0; i < stride; i += 2) {
            const uint64x2_t a = vld1q_u64(from + i);
            const uint64x2_t b = vld1q_u64(to + i);
            const uint64x2_t sum = vaddq_u64(a, b);
            wrapped = vorrq_u64(wrapped, vcltq_u64(sum, b));
            vst1q_u64(to + i, sum);
        }
    }
    return (vgetq_lane_u64(wrapped, 0) | vgetq_lane_u64(wrapped, 1)) != 0;
}

}  // namespace rook::kernels::detail
