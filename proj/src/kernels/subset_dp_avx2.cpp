// Compiled with -mavx2; only reached after a runtime CPU check.

#include "variants.hpp"

#include <immintrin.h>

#include <cstddef>

namespace rook::kernels::detail {

bool add_shifted_avx2(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                      unsigned bit) noexcept {
    const std::size_t stride = std::size_t{1} << bit;
    // Blocks shorter than one vector gain nothing from lane shuffling.
    if (stride < 4) return add_shifted_scalar(src, dst, bit);

    // AVX2 has no unsigned 64-bit compare; flipping the sign bit turns
    // a + b < b (wraparound) into a signed comparison.
    const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
    __m256i wrapped = _mm256_setzero_si256();

    for (std::size_t base = 0; base < src.size(); base += 2 * stride) {
        const std::uint64_t* from = src.data() + base;
        std::uint64_t* to = dst.data() + base + stride;
        for (std::size_t i = 0; i < stride; i += 4) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(from + i));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(to + i));
            const __m256i sum = _mm256_add_epi64(a, b);
            const __m256i less = _mm256_cmpgt_epi64(_mm256_xor_si256(b, sign),
                                                    _mm256_xor_si256(sum, sign));
            wrapped = _mm256_or_si256(wrapped, less);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(to + i), sum);
        }
    }
    return !_mm256_testz_si256(wrapped, wrapped);
}

}  // namespace rook::kernels::detail
