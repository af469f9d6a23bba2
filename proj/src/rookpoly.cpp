#include "rook/rookpoly.hpp"

#include "rook/error.hpp"
#include "rook/kernels/subset_dp.hpp"

#include <bit>
#include <limits>
#include <map>
#include <string>

namespace rook {

namespace {

// Board reduced to the occupied lines of its narrower side: one bitmask per
// line, over `width` compressed positions.
struct LineMasks {
    std::size_t width = 0;
    std::vector<std::uint64_t> lines;
};

LineMasks compress(const Board& board, bool lines_are_columns) {
    const std::size_t nlines = lines_are_columns ? board.cols() : board.rows();
    const std::size_t nslots = lines_are_columns ? board.rows() : board.cols();
    auto cell = [&](std::size_t line, std::size_t slot) {
        return lines_are_columns ? board.at(line, slot) : board.at(slot, line);
    };

    std::vector<std::size_t> slot_index(nslots, std::numeric_limits<std::size_t>::max());
    LineMasks out;
    for (std::size_t slot = 0; slot < nslots; ++slot) {
        for (std::size_t line = 0; line < nlines; ++line) {
            if (cell(line, slot)) {
                slot_index[slot] = out.width++;
                break;
            }
        }
    }
    if (out.width > 64) {
        throw Error(ErrorCode::TooManyRows,
                    std::to_string(out.width) + " occupied rows exceed the 64-row mask width");
    }
    for (std::size_t line = 0; line < nlines; ++line) {
        std::uint64_t mask = 0;
        for (std::size_t slot = 0; slot < nslots; ++slot) {
            if (cell(line, slot)) mask |= std::uint64_t{1} << slot_index[slot];
        }
        if (mask != 0) out.lines.push_back(mask);
    }
    return out;
}

std::size_t occupied(const Board& board, bool count_columns) {
    const std::size_t outer = count_columns ? board.cols() : board.rows();
    const std::size_t inner = count_columns ? board.rows() : board.cols();
    std::size_t n = 0;
    for (std::size_t a = 0; a < outer; ++a) {
        for (std::size_t b = 0; b < inner; ++b) {
            if (count_columns ? board.at(a, b) : board.at(b, a)) {
                ++n;
                break;
            }
        }
    }
    return n;
}

Polynomial times_x(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<BigInt> c(p.coeffs().size() + 1);
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + 1);
    return Polynomial(std::move(c));
}

// Counts by popcount of the final DP table.
template <class Count>
std::vector<BigInt> collect(const std::vector<Count>& table, std::size_t width) {
    std::vector<BigInt> r(width + 1);
    if constexpr (std::is_same_v<Count, std::uint64_t>) {
        using Wide = unsigned __int128;
        constexpr Wide kFlushAt = Wide{1} << 126;
        std::vector<Wide> acc(width + 1, 0);
        auto flush = [&](std::size_t k) {
            const auto hi = static_cast<std::uint64_t>(acc[k] >> 64);
            const auto lo = static_cast<std::uint64_t>(acc[k]);
            r[k] += (BigInt(hi) << 64) + lo;
            acc[k] = 0;
        };
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            const auto k = static_cast<std::size_t>(std::popcount(mask));
            acc[k] += table[mask];
            if (acc[k] >= kFlushAt) flush(k);
        }
        for (std::size_t k = 0; k <= width; ++k) flush(k);
    } else {
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            r[static_cast<std::size_t>(std::popcount(mask))] += table[mask];
        }
    }
    return r;
}

// dp[mask] = placements in the lines seen so far that use exactly the
// positions in mask, with at most one rook per line.
std::optional<std::vector<BigInt>> subset_dp_u64(const LineMasks& lm) {
    std::vector<std::uint64_t> cur(std::size_t{1} << lm.width, 0);
    std::vector<std::uint64_t> next;
    cur[0] = 1;
    for (std::uint64_t line : lm.lines) {
        next = cur;
        for (std::uint64_t bits = line; bits != 0; bits &= bits - 1) {
            const auto bit = static_cast<unsigned>(std::countr_zero(bits));
            if (kernels::add_shifted(cur, next, bit)) return std::nullopt;
        }
        cur.swap(next);
    }
    return collect(cur, lm.width);
}

std::vector<BigInt> subset_dp_wide(const LineMasks& lm) {
    std::vector<BigInt> cur(std::size_t{1} << lm.width);
    std::vector<BigInt> next;
    cur[0] = 1;
    for (std::uint64_t line : lm.lines) {
        next = cur;
        for (std::uint64_t bits = line; bits != 0; bits &= bits - 1) {
            const std::size_t stride = std::size_t{1} << std::countr_zero(bits);
            for (std::size_t base = 0; base < cur.size(); base += 2 * stride) {
                for (std::size_t i = 0; i < stride; ++i) next[base + stride + i] += cur[base + i];
            }
        }
        cur.swap(next);
    }
    return collect(cur, lm.width);
}

using ColumnMasks = std::vector<std::uint64_t>;

Polynomial recurse(const ColumnMasks& cols, std::map<ColumnMasks, Polynomial>& memo) {
    if (cols.empty()) return Polynomial{1};
    if (auto it = memo.find(cols); it != memo.end()) return it->second;

    const std::uint64_t last = cols.back();
    const std::uint64_t row = std::uint64_t{1} << (63 - std::countl_zero(last));

    ColumnMasks deleted(cols.begin(), cols.end() - 1);
    if (last != row) deleted.push_back(last & ~row);

    ColumnMasks removed;
    removed.reserve(cols.size() - 1);
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
        if (const std::uint64_t m = cols[i] & ~row; m != 0) removed.push_back(m);
    }

    Polynomial result = recurse(deleted, memo) + times_x(recurse(removed, memo));
    memo.emplace(cols, result);
    return result;
}

BigInt binomial(const BigInt& n, std::size_t k) {
    if (n < BigInt(k)) return 0;
    BigInt c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

}  // namespace

Polynomial rook_polynomial_general(const Board& board) {
    if (board.empty() || board.cell_count() == 0) return Polynomial{1};

    const bool over_rows = occupied(board, false) <= occupied(board, true);
    const std::size_t width = over_rows ? occupied(board, false) : occupied(board, true);
    if (width > kMaxDpRows) {
        throw Error(ErrorCode::TooManyRows, "board needs a DP over " + std::to_string(width) +
                                                " rows; the limit is " +
                                                std::to_string(kMaxDpRows));
    }
    const LineMasks lm = compress(board, over_rows);
    if (auto r = subset_dp_u64(lm)) return Polynomial(std::move(*r));
    return Polynomial(subset_dp_wide(lm));
}

Polynomial rook_polynomial_recursive(const Board& board) {
    if (board.empty()) return Polynomial{1};
    const LineMasks lm = compress(board, true);
    std::map<ColumnMasks, Polynomial> memo;
    return recurse(lm.lines, memo);
}

Polynomial factorial_rook_polynomial(const FerrersBoard& board, std::size_t n) {
    const StructureData sd = structure_data(board, n);
    Polynomial p{1};
    for (Height s : sd.n_structure) p *= Polynomial{BigInt(s), BigInt(1)};
    return p;
}

Polynomial rook_polynomial_ferrers(const FerrersBoard& board) {
    const std::size_t n = board.columns();
    return Polynomial(from_factorial_basis(factorial_rook_polynomial(board, n), n));
}

bool NecessityReport::violates(int condition) const noexcept {
    for (const auto& v : violations) {
        if (v.condition == condition) return true;
    }
    return false;
}

NecessityReport check_necessary_conditions(const Polynomial& q) {
    NecessityReport report;
    const auto r = q.coeffs();
    auto name = [](std::size_t k) { return "r_" + std::to_string(k); };

    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] < 0) {
            report.violations.push_back({1, name(k) + " = " + to_decimal(r[k]) + " is negative"});
        }
    }
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
        if (r[k] == 0) {
            report.violations.push_back(
                {2, name(k) + " = 0 but a higher coefficient is nonzero"});
            break;
        }
    }
    if (q.coeff(0) != 1) {
        report.violations.push_back({3, "r_0 = " + to_decimal(q.coeff(0)) + ", expected 1"});
    }
    if (!q.is_zero()) report.implied_cells = q.coeff(1);

    // k = 0 is condition 3 and k = 1 holds with equality.
    const BigInt& r1 = q.coeff(1);
    for (std::size_t k = 2; k < r.size(); ++k) {
        const BigInt bound = binomial(r1, k);
        if (r[k] > bound) {
            report.violations.push_back({5, name(k) + " = " + to_decimal(r[k]) + " exceeds C(r_1, " +
                                                std::to_string(k) + ") = " + to_decimal(bound)});
        }
    }
    for (std::size_t k = 2; k < r.size(); ++k) {
        const BigInt bound = binomial(r[k - 1], 2);
        if (r[k] > bound) {
            report.violations.push_back({6, name(k) + " = " + to_decimal(r[k]) + " exceeds C(" +
                                                name(k - 1) + ", 2) = " + to_decimal(bound)});
        }
    }
    return report;
}

}  // namespace rook
