#include "rook/inverse.hpp"

#include "rook/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace rook {

std::string_view to_string(RejectionReason reason) noexcept {
    switch (reason) {
        case RejectionReason::NecessaryConditionFailed: return "NecessaryConditionFailed";
        case RejectionReason::DegreeExceedsBound: return "DegreeExceedsBound";
        case RejectionReason::NonIntegerRoots: return "NonIntegerRoots";
        case RejectionReason::FallingFactorialNotDivisor: return "FallingFactorialNotDivisor";
        case RejectionReason::VerificationMismatch: return "VerificationMismatch";
    }
    return "Unknown";
}

std::string_view stage_of(RejectionReason reason) noexcept {
    switch (reason) {
        case RejectionReason::NecessaryConditionFailed: return "necessary_conditions";
        case RejectionReason::DegreeExceedsBound: return "degree_bound";
        case RejectionReason::NonIntegerRoots: return "integer_roots";
        case RejectionReason::FallingFactorialNotDivisor: return "falling_factorial_divisor";
        case RejectionReason::VerificationMismatch: return "verification";
    }
    return "unknown";
}

std::optional<FallingFactorialSplit> split_falling_factorial(const RootMultiset& roots) {
    FallingFactorialSplit out;
    if (roots.roots.empty()) {
        out.t = -1;
        return out;
    }
    out.rest = roots.roots;
    std::sort(out.rest.begin(), out.rest.end(), std::greater<>{});
    out.t = out.rest.front();
    for (BigInt k = out.t; k >= 0; --k) {
        auto it = std::find(out.rest.begin(), out.rest.end(), k);
        if (it == out.rest.end()) return std::nullopt;
        out.rest.erase(it);
    }
    return out;
}

InverseOutcome solve_inverse(const Polynomial& q) {
    if (q == Polynomial{1}) return InverseSolution{FerrersBoard{}, std::nullopt};

    NecessityReport report = check_necessary_conditions(q);
    if (!report.passed()) {
        std::string detail = report.violations.front().description;
        return InverseRejection{RejectionReason::NecessaryConditionFailed, std::move(detail),
                                std::move(report)};
    }

    // Any increasing board with q_1 cells has at most floor(sqrt(2 q_1))
    // nonzero columns, and a rook polynomial's degree never exceeds the
    // column count.
    const BigInt padding = boost::multiprecision::sqrt(BigInt(2 * q.coeff(1)));
    if (BigInt(q.degree()) > padding) {
        return InverseRejection{RejectionReason::DegreeExceedsBound,
                                "degree " + std::to_string(q.degree()) + " exceeds n = " +
                                    to_decimal(padding),
                                std::nullopt};
    }
    if (padding > kMaxInversePadding) {
        throw Error(ErrorCode::LimitExceeded, "padding n = " + to_decimal(padding) +
                                                  " exceeds the supported maximum " +
                                                  std::to_string(kMaxInversePadding));
    }
    const auto n = static_cast<std::size_t>(padding);

    const Polynomial p = to_factorial_form(q, n);
    const std::optional<RootMultiset> split = integer_roots(p);
    if (!split) {
        return InverseRejection{RejectionReason::NonIntegerRoots,
                                "the " + std::to_string(n) +
                                    "-factorial polynomial does not split over the integers",
                                std::nullopt};
    }

    std::optional<FallingFactorialSplit> peeled = split_falling_factorial(*split);
    if (!peeled) {
        return InverseRejection{RejectionReason::FallingFactorialNotDivisor,
                                "(x)_" + to_decimal(split->roots.front() + 1) + " does not divide the " +
                                    std::to_string(n) + "-factorial polynomial",
                                std::nullopt};
    }
    const BigInt& t = peeled->t;
    const std::vector<BigInt>& rest = peeled->rest;

    InverseDiagnostics diag;
    diag.n = n;
    diag.t = static_cast<std::int64_t>(t);
    diag.u.reserve(rest.size());
    std::vector<Height> heights;
    heights.reserve(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        diag.u.push_back(static_cast<std::int64_t>(rest[i]));
        heights.push_back(static_cast<Height>(-rest[i] + t + BigInt(i + 1)));
    }

    std::optional<FerrersBoard> board;
    try {
        board = ferrers_from_heights(heights);
    } catch (const Error& e) {
        return InverseRejection{RejectionReason::VerificationMismatch,
                                std::string("constructed heights are not a Ferrers board: ") +
                                    e.what(),
                                std::nullopt};
    }
    if (!is_increasing(*board) || board->columns() != heights.size() ||
        rook_polynomial_ferrers(*board) != q) {
        return InverseRejection{RejectionReason::VerificationMismatch,
                                "constructed board does not reproduce the input polynomial",
                                std::nullopt};
    }
    return InverseSolution{std::move(*board), std::move(diag)};
}

FerrersBoard canonical_increasing(const FerrersBoard& board) {
    const InverseOutcome outcome = solve_inverse(rook_polynomial_ferrers(board));
    if (!outcome.accepted()) {
        throw Error(ErrorCode::InternalError,
                    "inverse solver rejected the rook polynomial of a Ferrers board: " +
                        std::string(to_string(outcome.rejection().reason)) + " (" +
                        outcome.rejection().detail + ")");
    }
    return outcome.solution().board;
}

bool rook_equivalent(const FerrersBoard& a, const FerrersBoard& b) {
    return rook_polynomial_ferrers(a) == rook_polynomial_ferrers(b);
}

}  // namespace rook
