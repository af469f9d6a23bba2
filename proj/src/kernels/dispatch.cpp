#include "rook/kernels/subset_dp.hpp"

#include "variants.hpp"

#include <atomic>

namespace rook::kernels {

namespace {

constexpr int kNoOverride = -1;
std::atomic<int> g_override{kNoOverride};

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(ROOK_HAVE_AVX2_KERNEL)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(ROOK_HAVE_NEON_KERNEL)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detect() noexcept {
    if (cpu_supports(Isa::Avx2)) return Isa::Avx2;
    if (cpu_supports(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (cpu_supports(isa)) out.push_back(isa);
    }
    return out;
}

Isa active_isa() noexcept {
    static const Isa detected = detect();
    const int forced = g_override.load(std::memory_order_relaxed);
    return forced == kNoOverride ? detected : static_cast<Isa>(forced);
}

bool add_shifted(Isa isa, std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                 unsigned bit) noexcept {
    switch (isa) {
#if defined(ROOK_HAVE_AVX2_KERNEL)
        case Isa::Avx2:
            if (cpu_supports(Isa::Avx2)) return detail::add_shifted_avx2(src, dst, bit);
            break;
#endif
#if defined(ROOK_HAVE_NEON_KERNEL)
        case Isa::Neon:
            return detail::add_shifted_neon(src, dst, bit);
#endif
        default:
            break;
    }
    return detail::add_shifted_scalar(src, dst, bit);
}

bool add_shifted(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                 unsigned bit) noexcept {
    return add_shifted(active_isa(), src, dst, bit);
}

ScopedIsaOverride::ScopedIsaOverride(Isa isa) noexcept
    : previous_(g_override.exchange(static_cast<int>(cpu_supports(isa) ? isa : Isa::Scalar))) {}

ScopedIsaOverride::~ScopedIsaOverride() { g_override.store(previous_); }

}  // namespace rook::kernels
