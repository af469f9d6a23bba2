#include "rook/board.hpp"

#include "rook/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace rook {

namespace {

constexpr std::size_t kMaxMatrixEntries = std::size_t{1} << 28;

void check_dimensions(std::size_t rows, std::size_t cols) {
    if ((rows == 0) != (cols == 0)) {
        throw Error(ErrorCode::InvalidDimensions,
                    "board dimensions must both be positive or both zero, got " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (rows != 0 && cols > kMaxMatrixEntries / rows) {
        throw Error(ErrorCode::LimitExceeded, "board matrix of " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " is too large");
    }
}

}  // namespace

Board::Board(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_dimensions(rows, cols);
    cells_.assign(rows * cols, 0);
}

Board Board::from_cells(std::size_t rows, std::size_t cols,
                        std::span<const std::pair<std::size_t, std::size_t>> cells) {
    Board b(rows, cols);
    for (auto [col, row] : cells) {
        if (col >= cols || row >= rows) {
            throw Error(ErrorCode::CellOutOfRange, "cell (" + std::to_string(col) + ", " +
                                                       std::to_string(row) + ") outside " +
                                                       std::to_string(rows) + "x" +
                                                       std::to_string(cols) + " board");
        }
        b.cells_[b.index(col, row)] = 1;
    }
    return b;
}

Board Board::full(std::size_t rows, std::size_t cols) {
    Board b(rows, cols);
    std::fill(b.cells_.begin(), b.cells_.end(), std::uint8_t{1});
    return b;
}

bool Board::at(std::size_t col, std::size_t row) const {
    if (col >= cols_ || row >= rows_) {
        throw Error(ErrorCode::CellOutOfRange, "cell (" + std::to_string(col) + ", " +
                                                   std::to_string(row) + ") outside board");
    }
    return cells_[index(col, row)] != 0;
}

std::size_t Board::cell_count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

Board Board::transposed() const {
    Board t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) {
            t.cells_[t.index(r, c)] = cells_[index(c, r)];
        }
    }
    return t;
}

Board Board::permuted(std::span<const std::size_t> row_perm,
                      std::span<const std::size_t> col_perm) const {
    if (row_perm.size() != rows_ || col_perm.size() != cols_) {
        throw Error(ErrorCode::InvalidDimensions, "permutation length does not match board");
    }
    Board p(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) {
            p.cells_[p.index(c, r)] = cells_[index(col_perm[c], row_perm[r])];
        }
    }
    return p;
}

FerrersBoard ferrers_from_heights(std::span<const Height> heights) {
    Height total = 0;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (heights[i] < 0) {
            throw Error(ErrorCode::NegativeHeight, "height " + std::to_string(heights[i]) +
                                                       " at column " + std::to_string(i + 1) +
                                                       " is negative");
        }
        if (i + 1 < heights.size() && heights[i] > heights[i + 1]) {
            throw Error(ErrorCode::NotNondecreasing,
                        "heights must be nondecreasing, but column " + std::to_string(i + 1) +
                            " has " + std::to_string(heights[i]) + " > " +
                            std::to_string(heights[i + 1]));
        }
        if (heights[i] > std::numeric_limits<Height>::max() - total) {
            throw Error(ErrorCode::LimitExceeded, "total cell count overflows 64 bits");
        }
        total += heights[i];
    }

    FerrersBoard b;
    auto first = std::find_if(heights.begin(), heights.end(), [](Height h) { return h != 0; });
    b.heights_.assign(first, heights.end());
    return b;
}

StructureData structure_data(const FerrersBoard& board, std::size_t n) {
    const std::size_t c = board.columns();
    if (n < c) {
        throw Error(ErrorCode::PaddingTooSmall, "padding n = " + std::to_string(n) +
                                                    " is below the column count " +
                                                    std::to_string(c));
    }
    StructureData sd;
    sd.n = n;
    sd.n_heights.assign(n - c, 0);
    sd.n_heights.insert(sd.n_heights.end(), board.heights().begin(), board.heights().end());
    sd.n_structure.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sd.n_structure[i] = sd.n_heights[i] - static_cast<Height>(i);
    }
    return sd;
}

bool is_increasing(const FerrersBoard& board) noexcept {
    auto h = board.heights();
    return std::adjacent_find(h.begin(), h.end(), std::greater_equal<>{}) == h.end();
}

Height cell_count(const FerrersBoard& board) noexcept {
    auto h = board.heights();
    return std::accumulate(h.begin(), h.end(), Height{0});
}

Board ferrers_as_board(const FerrersBoard& board) {
    if (board.columns() == 0) {
        throw Error(ErrorCode::EmptyBoard, "Ferrers board has no cells");
    }
    auto h = board.heights();
    const auto rows = static_cast<std::size_t>(h.back());
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(static_cast<std::size_t>(cell_count(board)));
    for (std::size_t col = 0; col < h.size(); ++col) {
        for (std::size_t row = 0; row < static_cast<std::size_t>(h[col]); ++row) {
            cells.emplace_back(col, row);
        }
    }
    return Board::from_cells(rows, h.size(), cells);
}

namespace {

// Emits all sequences of `parts` values, each >= min_part, summing to
// `remaining`, in lexicographic order. `strict` requires strictly increasing
// parts, otherwise nondecreasing.
void emit_partitions(Height remaining, std::size_t parts, Height min_part, bool strict,
                     std::vector<Height>& prefix, std::vector<FerrersBoard>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(ferrers_from_heights(prefix));
        return;
    }
    if (parts == 1) {
        if (remaining >= min_part) {
            prefix.push_back(remaining);
            out.push_back(ferrers_from_heights(prefix));
            prefix.pop_back();
        }
        return;
    }
    const auto k = static_cast<Height>(parts);
    for (Height first = min_part;; ++first) {
        // smallest possible sum of the remaining parts given `first`
        const Height tail_min = strict ? k * first + k * (k - 1) / 2 : k * first;
        if (tail_min > remaining) break;
        prefix.push_back(first);
        emit_partitions(remaining - first, parts - 1, strict ? first + 1 : first, strict, prefix,
                        out);
        prefix.pop_back();
    }
}

std::vector<FerrersBoard> enumerate(Height total_cells, bool strict) {
    std::vector<FerrersBoard> out;
    if (total_cells < 0) return out;
    if (total_cells == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<Height> prefix;
    for (std::size_t parts = 1;; ++parts) {
        const auto k = static_cast<Height>(parts);
        const Height min_total = strict ? k * (k + 1) / 2 : k;
        if (min_total > total_cells) break;
        emit_partitions(total_cells, parts, 1, strict, prefix, out);
    }
    return out;
}

}  // namespace

std::vector<FerrersBoard> enumerate_increasing_ferrers(Height total_cells) {
    return enumerate(total_cells, true);
}

std::vector<FerrersBoard> enumerate_ferrers(Height total_cells) {
    return enumerate(total_cells, false);
}

}  // namespace rook
