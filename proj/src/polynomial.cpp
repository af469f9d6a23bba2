#include "rook/polynomial.hpp"

#include "rook/error.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <functional>
#include <string>
#include <utility>

namespace rook {

namespace {

const BigInt kZero{0};

// Floor division for a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

// A polynomial reduced modulo a fixed 61-bit prime, kept in step with the
// exact one so most root candidates are rejected without big arithmetic.
class ModImage {
public:
    static constexpr std::uint64_t kPrimes[] = {(std::uint64_t{1} << 61) - 1, 2305843009213693921ULL};

    ModImage(std::span<const BigInt> coeffs, std::uint64_t prime) : prime_(prime) {
        const BigInt m(prime);
        coeffs_.reserve(coeffs.size());
        for (const auto& c : coeffs) {
            BigInt r = c % m;
            if (r < 0) r += m;
            coeffs_.push_back(static_cast<std::uint64_t>(r));
        }
    }

    std::uint64_t reduce(const BigInt& x) const {
        const BigInt m(prime_);
        BigInt r = x % m;
        if (r < 0) r += m;
        return static_cast<std::uint64_t>(r);
    }

    bool vanishes_at(std::uint64_t x) const {
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = add(mul(acc, x), coeffs_[i]);
        return acc == 0;
    }

    // Synthetic division by (X - x); the caller knows x is an exact root.
    void divide(std::uint64_t x) {
        std::uint64_t carry = 0;
        std::vector<std::uint64_t> q(coeffs_.size() - 1);
        for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
            carry = add(coeffs_[i], mul(x, carry));
            q[i - 1] = carry;
        }
        coeffs_ = std::move(q);
    }

private:
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % prime_);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return s >= prime_ ? s - prime_ : s;
    }

    std::uint64_t prime_;
    std::vector<std::uint64_t> coeffs_;
};

}  // namespace

Polynomial::Polynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial{c}; }

Polynomial Polynomial::linear_factor(const BigInt& root) { return Polynomial{BigInt(-root), BigInt(1)}; }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigInt Polynomial::evaluate(const BigInt& point) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= point;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const BigInt& s, const Polynomial& p) {
    std::vector<BigInt> out(p.coeffs_.begin(), p.coeffs_.end());
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

std::vector<Polynomial> falling_factorial_table(std::size_t n) {
    std::vector<Polynomial> table;
    table.reserve(n + 1);
    table.push_back(Polynomial{1});
    for (std::size_t i = 1; i <= n; ++i) {
        // (x)_i = (x)_{i-1} * (x - (i-1)), done in place on the coefficients
        const auto& prev = table.back().coeffs();
        const BigInt shift(i - 1);
        std::vector<BigInt> next(prev.size() + 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            next[k + 1] += prev[k];
            next[k] -= shift * prev[k];
        }
        table.emplace_back(std::move(next));
    }
    return table;
}

namespace {

// (x)_i -> (x)_{i+1}
void raise(std::vector<BigInt>& ff, std::size_t i) {
    const BigInt shift(i);
    ff.emplace_back(0);
    for (std::size_t k = ff.size() - 1; k > 0; --k) ff[k] = ff[k - 1] - shift * ff[k];
    ff[0] = -shift * ff[0];
}

// (x)_{i} -> (x)_{i-1}, exact division by x - (i-1)
void lower(std::vector<BigInt>& ff, std::size_t i) {
    const BigInt root(i - 1);
    BigInt carry = 0;
    std::vector<BigInt> q(ff.size() - 1);
    for (std::size_t k = ff.size() - 1; k > 0; --k) {
        carry = ff[k] + root * carry;
        q[k - 1] = carry;
    }
    ff = std::move(q);
}

}  // namespace

Polynomial falling_factorial(std::size_t i) {
    std::vector<BigInt> ff{1};
    for (std::size_t j = 0; j < i; ++j) raise(ff, j);
    return Polynomial(std::move(ff));
}

Polynomial to_factorial_form(const Polynomial& q, std::size_t n) {
    if (q.degree() > static_cast<std::ptrdiff_t>(n)) {
        throw Error(ErrorCode::DegreeExceedsN, "degree " + std::to_string(q.degree()) +
                                                   " exceeds padding n = " + std::to_string(n));
    }
    if (q.is_zero()) return q;
    // Only (x)_{n-d} .. (x)_n are needed; walk up to them one factor at a time.
    const std::size_t d = static_cast<std::size_t>(q.degree());
    std::vector<BigInt> ff{1};
    for (std::size_t j = 0; j < n - d; ++j) raise(ff, j);
    std::vector<BigInt> p(n + 1);
    for (std::size_t i = n - d;; ++i) {
        const BigInt& c = q.coeff(n - i);
        if (c != 0) {
            for (std::size_t k = 0; k < ff.size(); ++k) p[k] += c * ff[k];
        }
        if (i == n) break;
        raise(ff, i);
    }
    return Polynomial(std::move(p));
}

std::vector<BigInt> from_factorial_basis(const Polynomial& p, std::size_t n) {
    if (p.degree() > static_cast<std::ptrdiff_t>(n)) {
        throw Error(ErrorCode::DegreeExceedsN, "degree " + std::to_string(p.degree()) +
                                                   " exceeds padding n = " + std::to_string(n));
    }
    std::vector<BigInt> ff{1};
    for (std::size_t j = 0; j < n; ++j) raise(ff, j);
    std::vector<BigInt> r(n + 1);
    std::vector<BigInt> rest(n + 1);
    std::copy(p.coeffs().begin(), p.coeffs().end(), rest.begin());
    // (x)_{n-k} is monic of degree n-k, so its coefficient is read off the
    // current remainder's x^{n-k} term.
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t i = n - k;
        r[k] = rest[i];
        if (r[k] != 0) {
            for (std::size_t j = 0; j <= i; ++j) rest[j] -= r[k] * ff[j];
        }
        if (i > 0) lower(ff, i);
    }
    for (const auto& c : rest) {
        if (c != 0) throw Error(ErrorCode::InternalError, "falling-factorial expansion left a remainder");
    }
    return r;
}

LinearDivision divide_by_linear(const Polynomial& p, const BigInt& r) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot divide the zero polynomial");
    const auto a = p.coeffs();
    const std::size_t d = a.size() - 1;
    std::vector<BigInt> q(d);
    BigInt carry = 0;
    for (std::size_t i = d; i > 0; --i) {
        carry = a[i] + r * carry;
        q[i - 1] = carry;
    }
    BigInt remainder = a[0] + r * carry;
    return {Polynomial(std::move(q)), std::move(remainder)};
}

Polynomial RootMultiset::expand() const {
    Polynomial p = Polynomial::constant(leading_unit);
    for (const auto& root : roots) p *= Polynomial::linear_factor(root);
    return p;
}

std::optional<RootMultiset> integer_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no root multiset");
    if (p.leading() != 1) {
        throw Error(ErrorCode::NotMonic, "leading coefficient " + to_decimal(p.leading()) + " is not 1");
    }

    RootMultiset result;
    const auto all = p.coeffs();
    std::size_t zeros = 0;
    while (all[zeros] == 0) ++zeros;
    result.roots.assign(zeros, BigInt(0));

    Polynomial rest(std::vector<BigInt>(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end()));
    const std::ptrdiff_t d = rest.degree();
    if (d > 0) {
        // A completely split monic polynomial has real roots with sum s and
        // sum of squares s2; each root x then obeys the Laguerre-Samuelson
        // bound (d x - s)^2 <= (d - 1)(d s2 - s^2). Candidates are the
        // integers inside that interval, screened modulo two primes first.
        const BigInt dd(d);
        const BigInt s = -rest.coeff(static_cast<std::size_t>(d - 1));
        const BigInt next = d >= 2 ? rest.coeff(static_cast<std::size_t>(d - 2)) : BigInt(0);
        const BigInt s2 = s * s - 2 * next;
        const BigInt spread = dd * s2 - s * s;
        if (spread < 0) return std::nullopt;
        const BigInt radius = boost::multiprecision::sqrt(BigInt((dd - 1) * spread));

        const BigInt trailing = rest.coeff(0);
        const BigInt magnitude = abs(trailing);
        const BigInt lo = std::max(ceil_div(s - radius, dd), BigInt(-magnitude));
        const BigInt hi = std::min(floor_div(s + radius, dd), magnitude);
        if (hi - lo > BigInt(1) << 32) {
            throw Error(ErrorCode::LimitExceeded, "integer root search interval is too wide");
        }

        ModImage first(rest.coeffs(), ModImage::kPrimes[0]);
        ModImage second(rest.coeffs(), ModImage::kPrimes[1]);
        for (BigInt x = hi; x >= lo && rest.degree() > 0; --x) {
            if (x == 0) continue;
            const std::uint64_t x1 = first.reduce(x);
            const std::uint64_t x2 = second.reduce(x);
            while (rest.degree() > 0 && first.vanishes_at(x1) && second.vanishes_at(x2)) {
                auto div = divide_by_linear(rest, x);
                if (div.remainder != 0) break;
                result.roots.push_back(x);
                rest = std::move(div.quotient);
                first.divide(x1);
                second.divide(x2);
            }
        }
        if (rest.degree() > 0) return std::nullopt;
    }
    std::sort(result.roots.begin(), result.roots.end(), std::greater<>{});
    return result;
}

}  // namespace rook
