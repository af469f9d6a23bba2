#pragma once

// Dense univariate polynomials over the integers with exact arbitrary
// precision coefficients, plus conversion to and from falling-factorial
// bases and complete integer root extraction.

#include "rook/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace rook {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<BigInt> coeffs);
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial constant(const BigInt& c);
    /// x - root
    static Polynomial linear_factor(const BigInt& root);

    /// Ascending degree; empty for the zero polynomial, never a zero leading term.
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero beyond the degree.
    const BigInt& coeff(std::size_t k) const noexcept;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    const BigInt& leading() const noexcept { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }

    /// Horner evaluation.
    BigInt evaluate(const BigInt& point) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const BigInt& s, const Polynomial& p);

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

/// (x)_i = x(x-1)...(x-i+1); (x)_0 = 1.
Polynomial falling_factorial(std::size_t i);

/// (x)_0 .. (x)_n in one pass.
std::vector<Polynomial> falling_factorial_table(std::size_t n);

/// sum_k q_k (x)_{n-k} expanded in the monomial basis.
/// Throws DegreeExceedsN when deg q > n.
Polynomial to_factorial_form(const Polynomial& q, std::size_t n);

/// Coefficients (r_0..r_n) with p = sum_k r_k (x)_{n-k}.
/// Throws DegreeExceedsN when deg p > n.
std::vector<BigInt> from_factorial_basis(const Polynomial& p, std::size_t n);

struct LinearDivision {
    Polynomial quotient;
    BigInt remainder;
};

/// Synthetic division by (x - r). Throws ZeroPolynomial.
LinearDivision divide_by_linear(const Polynomial& p, const BigInt& r);

struct RootMultiset {
    std::vector<BigInt> roots;  // nonincreasing, with multiplicity
    BigInt leading_unit{1};

    /// leading_unit * prod (x - root)
    Polynomial expand() const;
    bool operator==(const RootMultiset&) const = default;
};

/// Complete factorization of a monic polynomial into integer linear factors.
/// Returns nullopt when the polynomial does not split over the integers.
/// Throws ZeroPolynomial or NotMonic.
std::optional<RootMultiset> integer_roots(const Polynomial& p);

}  // namespace rook
