#ifndef CIRCDET_BIPOLY_HPP
#define CIRCDET_BIPOLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circdet/errors.hpp"

namespace circdet {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair of x^r y^s.
///
/// Ordered by (r+s, r, s). This is a graded monomial order, so it is
/// compatible with multiplication and drives exact long division.
struct Monomial {
    std::uint32_t r = 0;
    std::uint32_t s = 0;

    constexpr std::uint64_t degree() const noexcept {
        return std::uint64_t{r} + std::uint64_t{s};
    }

    constexpr bool divides(const Monomial& other) const noexcept {
        return r <= other.r && s <= other.s;
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.r <=> b.r; c != 0) return c;
        return a.s <=> b.s;
    }
};

constexpr Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    return {a.r + b.r, a.s + b.s};
}

struct Term {
    Monomial m;
    BigInt c;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse bivariate polynomial over the integers.
///
/// Terms are kept sorted by the monomial order with no zero coefficients,
/// so structural equality is polynomial equality.
class BiPoly {
public:
    BiPoly() = default;

    explicit BiPoly(BigInt constant) {
        if (!constant.is_zero()) terms_.push_back({{0, 0}, std::move(constant)});
    }

    static BiPoly term(BigInt c, std::uint32_t r, std::uint32_t s) {
        BiPoly out;
        if (!c.is_zero()) out.terms_.push_back({{r, s}, std::move(c)});
        return out;
    }

    static BiPoly x() { return term(1, 1, 0); }
    static BiPoly y() { return term(1, 0, 1); }
    static BiPoly one() { return BiPoly(BigInt(1)); }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    static BiPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.m < b.m; });
        BiPoly out;
        for (auto& t : terms) {
            if (!out.terms_.empty() && out.terms_.back().m == t.m) {
                out.terms_.back().c += t.c;
            } else {
                if (!out.terms_.empty() && out.terms_.back().c.is_zero()) out.terms_.pop_back();
                out.terms_.push_back(std::move(t));
            }
        }
        if (!out.terms_.empty() && out.terms_.back().c.is_zero()) out.terms_.pop_back();
        return out;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coeff(std::uint32_t r, std::uint32_t s) const {
        const Monomial m{r, s};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.m < key; });
        if (it != terms_.end() && it->m == m) return it->c;
        return 0;
    }

    BigInt constant_term() const { return coeff(0, 0); }

    /// Largest term in the monomial order. Precondition: nonzero.
    const Term& leading() const { return terms_.back(); }

    std::uint32_t max_r() const noexcept {
        std::uint32_t out = 0;
        for (const auto& t : terms_) out = std::max(out, t.m.r);
        return out;
    }

    std::uint32_t max_s() const noexcept {
        std::uint32_t out = 0;
        for (const auto& t : terms_) out = std::max(out, t.m.s);
        return out;
    }

    BiPoly operator-() const {
        BiPoly out = *this;
        for (auto& t : out.terms_) t.c = -t.c;
        return out;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) { return merge(a, b, false); }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return merge(a, b, true); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1 && a.terms_[0].m == Monomial{}) return b.scaled(a.terms_[0].c);
        if (b.size() == 1 && b.terms_[0].m == Monomial{}) return a.scaled(b.terms_[0].c);

        const std::uint64_t rows = std::uint64_t{a.max_r()} + b.max_r() + 1;
        const std::uint64_t cols = std::uint64_t{a.max_s()} + b.max_s() + 1;
        const std::uint64_t pairs = std::uint64_t{a.size()} * b.size();
        if (rows * cols <= 4 * pairs + 4096) return dense_product(a, b, rows, cols);

        std::map<Monomial, BigInt> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc[ta.m * tb.m] += ta.c * tb.c;
        BiPoly out;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
        return out;
    }

    BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
    BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
    BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly scaled(const BigInt& k) const {
        if (k.is_zero()) return {};
        BiPoly out = *this;
        for (auto& t : out.terms_) t.c *= k;
        return out;
    }

private:
    static BiPoly merge(const BiPoly& a, const BiPoly& b, bool negate_b) {
        BiPoly out;
        out.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->m < ib->m)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->m < ia->m) {
                out.terms_.push_back({ib->m, negate_b ? BigInt(-ib->c) : ib->c});
                ++ib;
            } else {
                BigInt c = negate_b ? BigInt(ia->c - ib->c) : BigInt(ia->c + ib->c);
                if (!c.is_zero()) out.terms_.push_back({ia->m, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    static BiPoly dense_product(const BiPoly& a, const BiPoly& b, std::uint64_t rows, std::uint64_t cols) {
        std::vector<BigInt> grid(rows * cols);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                const Monomial m = ta.m * tb.m;
                grid[m.r * cols + m.s] += ta.c * tb.c;
            }
        std::vector<Term> terms;
        for (std::uint64_t r = 0; r < rows; ++r)
            for (std::uint64_t s = 0; s < cols; ++s)
                if (auto& c = grid[r * cols + s]; !c.is_zero())
                    terms.push_back({{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s)}, std::move(c)});
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.m < y.m; });
        BiPoly out;
        out.terms_ = std::move(terms);
        return out;
    }

    std::vector<Term> terms_;
};

/// Exact quotient a / b by long division in the monomial order.
///
/// Throws NonExactDivision when b does not divide a in Z[x, y].
inline BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
    if (a.is_zero()) return {};

    if (b.size() == 1 && b.leading().m == Monomial{}) {
        const BigInt& d = b.leading().c;
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            BigInt q, rem;
            boost::multiprecision::divide_qr(t.c, d, q, rem);
            if (!rem.is_zero()) throw NonExactDivision("coefficient not divisible by constant divisor");
            out.push_back({t.m, std::move(q)});
        }
        return BiPoly::from_terms(std::move(out));
    }

    const Term& lead = b.leading();
    std::map<Monomial, BigInt> rem;
    for (const auto& t : a.terms()) rem.emplace(t.m, t.c);

    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (!lead.m.divides(top->first))
            throw NonExactDivision("leading monomial of remainder not divisible");
        BigInt qc, qr;
        boost::multiprecision::divide_qr(top->second, lead.c, qc, qr);
        if (!qr.is_zero()) throw NonExactDivision("leading coefficient of remainder not divisible");
        const Monomial qm{top->first.r - lead.m.r, top->first.s - lead.m.s};
        for (const auto& t : b.terms()) {
            const Monomial m = qm * t.m;
            auto [it, inserted] = rem.try_emplace(m, 0);
            it->second -= qc * t.c;
            if (it->second.is_zero()) rem.erase(it);
        }
        quotient.push_back({qm, std::move(qc)});
    }
    std::reverse(quotient.begin(), quotient.end());
    return BiPoly::from_terms(std::move(quotient));
}

/// Exact value at an integer point.
inline BigInt eval(const BiPoly& a, const BigInt& x0, const BigInt& y0) {
    if (a.is_zero()) return 0;
    std::vector<BigInt> xp(a.max_r() + 1), yp(a.max_s() + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x0;
    for (std::size_t i = 1; i < yp.size(); ++i) yp[i] = yp[i - 1] * y0;
    BigInt out = 0;
    for (const auto& t : a.terms()) out += t.c * xp[t.m.r] * yp[t.m.s];
    return out;
}

/// Coefficients reduced to least nonnegative residues mod m (m >= 2).
inline BiPoly reduce_mod(const BiPoly& a, const BigInt& m) {
    if (m < 2) throw InvalidSpec("reduce_mod requires a modulus of at least 2");
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        BigInt c = t.c % m;
        if (c < 0) c += m;
        out.push_back({t.m, std::move(c)});
    }
    return BiPoly::from_terms(std::move(out));
}

inline BiPoly swap_xy(const BiPoly& a) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) out.push_back({{t.m.s, t.m.r}, t.c});
    return BiPoly::from_terms(std::move(out));
}

/// Same support, coefficients replaced by their absolute values.
inline BiPoly abs_coefficients(const BiPoly& a) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) out.push_back({t.m, abs(t.c)});
    return BiPoly::from_terms(std::move(out));
}

inline BiPoly pow(BiPoly base, std::uint32_t e) {
    BiPoly out = BiPoly::one();
    while (e > 0) {
        if (e & 1u) out *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return out;
}

} // namespace circdet

#endif // CIRCDET_BIPOLY_HPP
