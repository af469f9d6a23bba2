#pragma once

// Inner loop of the rook-placement subset DP. For a table indexed by sets
// of used rows, placing a rook in row `bit` moves the count of every set
// without that row to the set with it:
//
//     dst[mask | (1 << bit)] += src[mask]   for all mask with bit clear
//
// Each variant returns true if any 64-bit addition wrapped, in which case
// dst holds garbage and the caller must redo the work in wide arithmetic.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace rook::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// Variants compiled in and supported by this CPU; Scalar is always first.
std::vector<Isa> available_isas();

/// Best available variant unless overridden.
Isa active_isa() noexcept;

/// Dispatches to the active variant. src and dst have equal power-of-two
/// size greater than (1 << bit).
bool add_shifted(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                 unsigned bit) noexcept;

/// Runs one variant explicitly; falls back to scalar if it is unavailable.
bool add_shifted(Isa isa, std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                 unsigned bit) noexcept;

/// Pins the dispatcher to one variant for its lifetime. Test hook; not
/// meant to be nested across threads.
class ScopedIsaOverride {
public:
    explicit ScopedIsaOverride(Isa isa) noexcept;
    ~ScopedIsaOverride();
    ScopedIsaOverride(const ScopedIsaOverride&) = delete;
    ScopedIsaOverride& operator=(const ScopedIsaOverride&) = delete;

private:
    int previous_;
};

}  // namespace rook::kernels
