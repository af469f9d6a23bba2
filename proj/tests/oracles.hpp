#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: placements are counted by plain backtracking,
// partitions are generated independently, and basis changes go through
// Stirling numbers instead of coefficient peeling.

#include "rook/bigint.hpp"
#include "rook/board.hpp"
#include "rook/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

using rook::BigInt;
using rook::Height;
using rook::Polynomial;

/// Counts k-rook placements on a board given as cell predicate over
/// cols x rows, by trying every row (or none) in each column.
template <class CellFn>
Polynomial count_placements(std::size_t cols, std::size_t rows, CellFn&& cell) {
    std::vector<BigInt> r(std::min(cols, rows) + 1);
    std::vector<bool> used(rows, false);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t col, std::size_t k) {
        if (col == cols) {
            r[k] += 1;
            return;
        }
        go(col + 1, k);
        for (std::size_t row = 0; row < rows; ++row) {
            if (!used[row] && cell(col, row)) {
                used[row] = true;
                go(col + 1, k + 1);
                used[row] = false;
            }
        }
    };
    go(0, 0);
    return Polynomial(std::move(r));
}

inline Polynomial placements(const rook::Board& b) {
    return count_placements(b.cols(), b.rows(), [&](std::size_t c, std::size_t r) { return b.at(c, r); });
}

/// Heights need not be canonical; zero columns are fine.
inline Polynomial ferrers_placements(const std::vector<Height>& heights) {
    Height rows = 0;
    for (Height h : heights) rows = std::max(rows, h);
    return count_placements(heights.size(), static_cast<std::size_t>(rows),
                            [&](std::size_t c, std::size_t r) { return static_cast<Height>(r) < heights[c]; });
}

/// Partitions of n with parts <= max_part, largest part first.
inline void partitions_desc(Height n, Height max_part, bool distinct, std::vector<Height>& prefix,
                            std::vector<std::vector<Height>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (Height part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_desc(n - part, distinct ? part - 1 : part, distinct, prefix, out);
        prefix.pop_back();
    }
}

/// Height vectors (ascending) of all Ferrers boards with n cells, sorted by
/// column count and then lexicographically.
inline std::vector<std::vector<Height>> ferrers_height_vectors(Height n, bool distinct) {
    std::vector<std::vector<Height>> out;
    std::vector<Height> prefix;
    partitions_desc(n, n, distinct, prefix, out);
    for (auto& v : out) std::reverse(v.begin(), v.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/// a (a-1) ... (a-i+1)
inline BigInt falling_product(const BigInt& a, std::size_t i) {
    BigInt p = 1;
    for (std::size_t j = 0; j < i; ++j) p *= a - j;
    return p;
}

/// Stirling numbers of the second kind S(j, i), 0 <= i, j <= n.
inline std::vector<std::vector<BigInt>> stirling2(std::size_t n) {
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1));
    s[0][0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= j; ++i) s[j][i] = BigInt(i) * s[j - 1][i] + s[j - 1][i - 1];
    }
    return s;
}

/// r_k with p = sum_k r_k (x)_{n-k}, using x^j = sum_i S(j,i) (x)_i.
inline std::vector<BigInt> factorial_coefficients(const Polynomial& p, std::size_t n) {
    const auto s = stirling2(n);
    std::vector<BigInt> by_ff(n + 1);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) by_ff[i] += p.coeff(j) * s[j][i];
    }
    std::vector<BigInt> r(n + 1);
    for (std::size_t k = 0; k <= n; ++k) r[k] = by_ff[n - k];
    return r;
}

/// Increasing board read straight off the n-structure vector (n = cell
/// count): roots are -s_i; drop one each of 0..t where t is the largest;
/// remaining nonincreasing roots u give heights -u_i + t + i.
inline std::vector<Height> canonical_by_roots(const std::vector<Height>& heights) {
    std::vector<Height> h;
    for (Height v : heights) if (v > 0) h.push_back(v);
    Height n = 0;
    for (Height v : h) n += v;
    if (n == 0) return {};
    std::vector<Height> padded(static_cast<std::size_t>(n) - h.size(), 0);
    padded.insert(padded.end(), h.begin(), h.end());
    std::vector<Height> roots;
    for (std::size_t i = 0; i < padded.size(); ++i) roots.push_back(static_cast<Height>(i) - padded[i]);
    std::sort(roots.begin(), roots.end(), std::greater<>{});
    const Height t = roots.front();
    for (Height k = t; k >= 0; --k) roots.erase(std::find(roots.begin(), roots.end(), k));
    std::vector<Height> out;
    for (std::size_t i = 0; i < roots.size(); ++i) out.push_back(-roots[i] + t + static_cast<Height>(i + 1));
    return out;
}

inline std::vector<Height> heights_of(const rook::FerrersBoard& b) {
    return {b.heights().begin(), b.heights().end()};
}

inline Polynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> c;
    for (long long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace oracle
