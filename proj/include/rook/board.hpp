#pragma once

// Board representations: the general binary matrix and the Ferrers height
// vector, plus the padded height / structure vectors used by the
// factorization of the factorial rook polynomial.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace rook {

using Height = std::int64_t;

/// A board as an m x n binary matrix. Cells are addressed as (column, row),
/// both 0-based here; columns run left to right and rows bottom to top from
/// the common lower edge. The 0x0 board is the distinguished empty board.
class Board {
public:
    Board() = default;

    /// All-zero board. Both dimensions must be positive, or both zero.
    Board(std::size_t rows, std::size_t cols);

    /// Board with the listed (column, row) cells set. Duplicates are allowed.
    static Board from_cells(std::size_t rows, std::size_t cols,
                            std::span<const std::pair<std::size_t, std::size_t>> cells);
    static Board full(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    bool at(std::size_t col, std::size_t row) const;
    std::size_t cell_count() const noexcept;

    Board transposed() const;
    /// Rows reordered so that new row j is old row perm[j]; same for columns.
    Board permuted(std::span<const std::size_t> row_perm,
                   std::span<const std::size_t> col_perm) const;

    bool operator==(const Board&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> cells_;  // column-major

    std::size_t index(std::size_t col, std::size_t row) const noexcept { return col * rows_ + row; }
};

/// A Ferrers board stored by its nondecreasing column heights. Leading
/// zero-height columns are stripped, so equal boards compare equal.
class FerrersBoard {
public:
    FerrersBoard() = default;

    std::span<const Height> heights() const noexcept { return heights_; }
    std::size_t columns() const noexcept { return heights_.size(); }

    bool operator==(const FerrersBoard&) const = default;
    auto operator<=>(const FerrersBoard&) const = default;

private:
    friend FerrersBoard ferrers_from_heights(std::span<const Height> heights);
    std::vector<Height> heights_;
};

struct StructureData {
    std::size_t n = 0;
    std::vector<Height> n_heights;    // left-padded with n - c zero columns
    std::vector<Height> n_structure;  // n_heights[i] - i (0-based i)

    bool operator==(const StructureData&) const = default;
};

/// Validates and canonicalizes a height sequence.
/// Throws NegativeHeight or NotNondecreasing.
FerrersBoard ferrers_from_heights(std::span<const Height> heights);

inline FerrersBoard ferrers_from_heights(std::initializer_list<Height> heights) {
    return ferrers_from_heights(std::span<const Height>(heights.begin(), heights.size()));
}

/// Throws PaddingTooSmall when n is below the column count.
StructureData structure_data(const FerrersBoard& board, std::size_t n);

bool is_increasing(const FerrersBoard& board) noexcept;

Height cell_count(const FerrersBoard& board) noexcept;

/// Column i holds h_i ones from the lower edge; the matrix has max(h) rows.
/// Throws EmptyBoard for a board without cells.
Board ferrers_as_board(const FerrersBoard& board);

/// Partitions of total_cells into distinct positive parts, each stored in
/// increasing order. Ordered by column count, then lexicographically.
std::vector<FerrersBoard> enumerate_increasing_ferrers(Height total_cells);

/// Every Ferrers board (repeated heights allowed) with exactly total_cells
/// cells, in the same order as enumerate_increasing_ferrers.
std::vector<FerrersBoard> enumerate_ferrers(Height total_cells);

}  // namespace rook
