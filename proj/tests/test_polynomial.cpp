#include "oracles.hpp"
#include "rook/error.hpp"
#include "rook/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace rook;
using oracle::poly;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

Polynomial random_poly(std::mt19937_64& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK(poly({1, 1}) * poly({2, 1}) == poly({2, 3, 1}));
    CHECK(poly({2, 3, 1}).evaluate(-1) == 0);
    CHECK(Polynomial{} + poly({5, 0, 2}) == poly({5, 0, 2}));
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
    CHECK(Polynomial{}.degree() == -1);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({3, 0, 0}).degree() == 0);
}

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(0) == poly({1}));
    CHECK(falling_factorial(2) == poly({0, -1, 1}));
    CHECK(falling_factorial(3) == poly({0, 2, -3, 1}));

    for (std::size_t i = 0; i <= 10; ++i) {
        const Polynomial ff = falling_factorial(i);
        CHECK(ff.degree() == static_cast<std::ptrdiff_t>(i));
        CHECK(ff.leading() == 1);
        for (int a = -10; a <= 10; ++a) CHECK(ff.evaluate(a) == oracle::falling_product(a, i));
    }
}

TEST_CASE("to_factorial_form") {
    CHECK(to_factorial_form(poly({1, 4, 2}), 2) == poly({2, 3, 1}));
    CHECK(to_factorial_form(poly({1}), 0) == poly({1}));
    CHECK_THROWS_AS(to_factorial_form(poly({1, 4, 5, 1}), 2), Error);
    try {
        to_factorial_form(poly({1, 4, 5, 1}), 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeExceedsN);
    }

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto q = random_poly(rng, 6, 20);
        if (q.is_zero()) continue;
        std::vector<BigInt> c(q.coeffs().begin(), q.coeffs().end());
        c[0] = 1;
        q = Polynomial(c);
        for (std::size_t n = static_cast<std::size_t>(q.degree()); n <= static_cast<std::size_t>(q.degree()) + 3; ++n) {
            const auto p = to_factorial_form(q, n);
            CHECK(p.degree() == static_cast<std::ptrdiff_t>(n));
            CHECK(p.leading() == 1);
        }
    }
}

TEST_CASE("from_factorial_basis") {
    CHECK(from_factorial_basis(poly({2, 3, 1}), 2) == ints({1, 4, 2}));
    CHECK(from_factorial_basis(poly({1}), 0) == ints({1}));

    // Factorial rook polynomial of the board with heights (1,1,3,4,7) at n = 7.
    const Polynomial p7 = poly({0, -2, 7, -7, -2, 8, -5, 1});
    auto r = from_factorial_basis(p7, 7);
    CHECK(r[0] == 1);
    CHECK(r[1] == 16);
    CHECK(r == oracle::factorial_coefficients(p7, 7));
    CHECK(Polynomial(r) == oracle::ferrers_placements({1, 1, 3, 4, 7}));

    CHECK_THROWS_AS(from_factorial_basis(poly({0, 0, 1}), 1), Error);
}

TEST_CASE("basis change round trip and Stirling cross-check") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const auto q = random_poly(rng, 8, 50);
        const auto d = static_cast<std::size_t>(std::max<std::ptrdiff_t>(q.degree(), 0));
        for (std::size_t n = d; n <= d + 3; ++n) {
            const auto p = to_factorial_form(q, n);
            std::vector<BigInt> padded(n + 1);
            for (std::size_t k = 0; k <= n; ++k) padded[k] = q.coeff(k);
            CHECK(from_factorial_basis(p, n) == padded);
            CHECK(oracle::factorial_coefficients(p, n) == padded);
        }
    }
}

TEST_CASE("divide_by_linear") {
    auto a = divide_by_linear(poly({2, 3, 1}), -1);
    CHECK(a.quotient == poly({2, 1}));
    CHECK(a.remainder == 0);

    auto b = divide_by_linear(poly({1, 3, 1}), -1);
    CHECK(b.quotient == poly({2, 1}));
    CHECK(b.remainder == -1);

    auto c = divide_by_linear(poly({0, 1}), 0);
    CHECK(c.quotient == poly({1}));
    CHECK(c.remainder == 0);

    auto k = divide_by_linear(poly({7}), 3);
    CHECK(k.quotient.is_zero());
    CHECK(k.remainder == 7);

    CHECK_THROWS_AS(divide_by_linear(Polynomial{}, 1), Error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> root(-30, 30);
    for (int trial = 0; trial < 300; ++trial) {
        auto p = random_poly(rng, 9, 1000);
        if (p.is_zero()) continue;
        const BigInt r = root(rng);
        auto div = divide_by_linear(p, r);
        CHECK(Polynomial::linear_factor(r) * div.quotient + Polynomial::constant(div.remainder) == p);
        CHECK(div.remainder == p.evaluate(r));
    }
}

TEST_CASE("integer_roots examples") {
    auto a = integer_roots(poly({2, 3, 1}));
    REQUIRE(a);
    CHECK(a->roots == ints({-1, -2}));

    CHECK_FALSE(integer_roots(poly({1, 3, 1})));

    auto b = integer_roots(poly({0, -2, 7, -7, -2, 8, -5, 1}));
    REQUIRE(b);
    CHECK(b->roots == ints({2, 1, 1, 1, 1, 0, -1}));

    auto c = integer_roots(poly({0, 1}));
    REQUIRE(c);
    CHECK(c->roots == ints({0}));

    auto one = integer_roots(poly({1}));
    REQUIRE(one);
    CHECK(one->roots.empty());

    CHECK_FALSE(integer_roots(poly({1, 0, 1})));        // x^2 + 1
    CHECK_FALSE(integer_roots(poly({-2, 0, 1})));       // x^2 - 2, real but irrational
    CHECK_FALSE(integer_roots(poly({0, 0, -2, 0, 1})));  // x^2 (x^2 - 2)

    try {
        integer_roots(poly({1, 2}));
        FAIL("expected NotMonic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMonic);
    }
    CHECK_THROWS_AS(integer_roots(Polynomial{}), Error);
}

TEST_CASE("integer_roots recovers random split polynomials") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> count(0, 9);
    std::uniform_int_distribution<int> value(-40, 40);
    for (int trial = 0; trial < 400; ++trial) {
        RootMultiset expected;
        const int d = count(rng);
        for (int i = 0; i < d; ++i) expected.roots.emplace_back(value(rng));
        std::sort(expected.roots.begin(), expected.roots.end(), std::greater<>{});
        const Polynomial p = expected.expand();

        auto got = integer_roots(p);
        REQUIRE(got);
        CHECK(*got == expected);
        CHECK(got->expand() == p);

        // An irreducible quadratic factor blocks complete splitting.
        CHECK_FALSE(integer_roots(p * poly({value(rng) % 7 == 0 ? 3 : 2, 0, 1})));
    }
}
