#pragma once

// Inverse rook problem for Ferrers boards: recover the unique increasing
// Ferrers board whose rook polynomial is a given integer polynomial.

#include "rook/board.hpp"
#include "rook/polynomial.hpp"
#include "rook/rookpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rook {

/// Largest padding n = floor(sqrt(2 q_1)) solve_inverse will expand.
/// Inputs that need more throw LimitExceeded.
inline constexpr std::size_t kMaxInversePadding = 1024;

enum class RejectionReason {
    NecessaryConditionFailed,
    DegreeExceedsBound,
    NonIntegerRoots,
    FallingFactorialNotDivisor,
    VerificationMismatch,
};

std::string_view to_string(RejectionReason reason) noexcept;
/// Short name of the pipeline stage that produces the rejection.
std::string_view stage_of(RejectionReason reason) noexcept;

struct InverseDiagnostics {
    std::size_t n = 0;             // padding floor(sqrt(2 q_1))
    std::int64_t t = -1;           // largest root of the n-factorial polynomial
    std::vector<std::int64_t> u;   // roots left after removing 0..t, nonincreasing
};

struct InverseSolution {
    FerrersBoard board;
    std::optional<InverseDiagnostics> diagnostics;  // absent for q = 1
};

struct InverseRejection {
    RejectionReason reason;
    std::string detail;
    std::optional<NecessityReport> report;  // NecessaryConditionFailed only
};

class InverseOutcome {
public:
    InverseOutcome(InverseSolution s) : value_(std::move(s)) {}
    InverseOutcome(InverseRejection r) : value_(std::move(r)) {}

    bool accepted() const noexcept { return std::holds_alternative<InverseSolution>(value_); }
    const InverseSolution& solution() const { return std::get<InverseSolution>(value_); }
    const InverseRejection& rejection() const { return std::get<InverseRejection>(value_); }

private:
    std::variant<InverseSolution, InverseRejection> value_;
};

struct FallingFactorialSplit {
    BigInt t;                  // largest root
    std::vector<BigInt> rest;  // remaining roots, nonincreasing
};

/// Divides (x)_{t+1} out of a split polynomial given by its roots, t being
/// the largest root. nullopt when one of 0..t is missing; nothing is
/// removed when t < 0.
std::optional<FallingFactorialSplit> split_falling_factorial(const RootMultiset& roots);

InverseOutcome solve_inverse(const Polynomial& q);

/// The increasing Ferrers board rook equivalent to board.
/// Throws InternalError if the inverse solver rejects.
FerrersBoard canonical_increasing(const FerrersBoard& board);

bool rook_equivalent(const FerrersBoard& a, const FerrersBoard& b);

}  // namespace rook
