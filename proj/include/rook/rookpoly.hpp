#pragma once

// Rook polynomials. Three independent routes are provided:
//   - rook_polynomial_general:   column-by-column DP over sets of used rows
//   - rook_polynomial_recursive: cell deletion / row-column removal recursion
//   - rook_polynomial_ferrers:   factorial rook polynomial of a Ferrers board
//                                as a product of linear factors
// All three agree exactly on Ferrers boards.

#include "rook/board.hpp"
#include "rook/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rook {

/// Largest DP width (2^width states) accepted by rook_polynomial_general.
inline constexpr std::size_t kMaxDpRows = 25;

/// Sum over k of the number of non-attacking k-rook placements, times x^k.
/// The DP runs over whichever of the occupied rows / occupied columns is
/// smaller; throws TooManyRows when that exceeds kMaxDpRows.
Polynomial rook_polynomial_general(const Board& board);

/// Memoized cell-decomposition recursion
///     R(B) = R(B - cell) + x R(B - row(cell) - col(cell)),
/// always expanding the highest cell of the rightmost nonempty column.
/// Intended as a cross-check; throws TooManyRows above 64 rows.
Polynomial rook_polynomial_recursive(const Board& board);

Polynomial rook_polynomial_ferrers(const FerrersBoard& board);

/// prod_{i=1..n} (x + s_i) over the n-structure vector, expanded.
/// Throws PaddingTooSmall when n < columns.
Polynomial factorial_rook_polynomial(const FerrersBoard& board, std::size_t n);

struct Violation {
    int condition = 0;  // 1..6
    std::string description;

    bool operator==(const Violation&) const = default;
};

/// Coefficient conditions every rook polynomial satisfies:
///   1. r_k >= 0
///   2. a zero coefficient is never followed by a nonzero one
///   3. r_0 = 1
///   4. r_1 is the cell count (informational only)
///   5. r_k <= C(r_1, k)
///   6. r_k <= C(r_{k-1}, 2) for k >= 2
struct NecessityReport {
    std::vector<Violation> violations;
    std::optional<BigInt> implied_cells;  // r_1, when present

    bool passed() const noexcept { return violations.empty(); }
    bool violates(int condition) const noexcept;
};

NecessityReport check_necessary_conditions(const Polynomial& q);

}  // namespace rook
