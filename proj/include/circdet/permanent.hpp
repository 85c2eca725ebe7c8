#ifndef CIRCDET_PERMANENT_HPP
#define CIRCDET_PERMANENT_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "circdet/bipoly.hpp"
#include "circdet/circulant.hpp"
#include "circdet/errors.hpp"
#include "circdet/phi.hpp"

namespace circdet {

/// D_{p,q}(x, y) = sum N(r,s) x^r y^s: the unsigned cycle-cover counts, i.e.
/// the permanent of circ(1, x, 0, ..., y, ...).
inline BiPoly permanent_generating(std::uint32_t p, std::uint32_t q) {
    return BiPoly::from_terms(cycle_cover_counts(CirculantSpec::make(p, q)));
}

inline constexpr std::uint32_t ryser_max_p = 24;

/// Permanent of the 0-1 circulant with ones in columns 1, 2, q+1 of the first
/// row, by Ryser's inclusion-exclusion over column subsets in Gray-code order.
/// Row sums are updated in place; the matrix is never built.
inline BigInt permanent_ryser(std::uint32_t p, std::uint32_t q) {
    CirculantSpec::make(p, q);
    if (p > ryser_max_p) throw TooLarge("Ryser permanent supports p <= " + std::to_string(ryser_max_p));

    std::vector<std::int64_t> row_sum(p, 0);
    std::uint32_t zero_rows = p;
    std::int64_t nonzero_product = 1;  // at most 3^24
    __int128 total = 0;                // at most 2^24 * 3^24 in size
    std::uint32_t subset = 0;

    auto bump = [&](std::uint32_t row, int delta) {
        const std::int64_t old = row_sum[row];
        const std::int64_t now = old + delta;
        if (old == 0) --zero_rows; else nonzero_product /= old;
        if (now == 0) ++zero_rows; else nonzero_product *= now;
        row_sum[row] = now;
    };

    for (std::uint64_t step = 1; step < (std::uint64_t{1} << p); ++step) {
        const auto col = static_cast<std::uint32_t>(std::countr_zero(step));
        subset ^= 1u << col;
        const int delta = (subset >> col) & 1u ? 1 : -1;
        // Column col holds ones in rows col, col-1 and col-q (mod p).
        bump(col, delta);
        bump((col + p - 1) % p, delta);
        bump((col + p - q) % p, delta);
        if (zero_rows == 0) {
            if (std::popcount(subset) % 2 == 0)
                total += nonzero_product;
            else
                total -= nonzero_product;
        }
    }
    if (p % 2 == 1) total = -total;

    const bool negative = total < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
    BigInt out = detail::to_bigint(mag);
    return negative ? BigInt(-out) : out;
}

namespace detail {

/// Smallest u with u^3 >= n, n >= 0.
inline BigInt ceil_cbrt(const BigInt& n) {
    if (n <= 1) return n;
    BigInt lo = 0, hi = 1;
    while (hi * hi * hi < n) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (mid * mid * mid >= n) hi = mid; else lo = mid;
    }
    return hi;
}

inline BigInt factorial(std::uint32_t n) {
    BigInt out = 1;
    for (std::uint32_t i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace detail

struct PermanentReport {
    std::uint32_t p = 0, q = 0;
    BigInt d11 = 0;         ///< permanent of the 0-1 circulant
    std::string d11_source; ///< "ryser" or "cycle_cover"
    BigInt abs_sum = 0;     ///< sum of |a(r,s)| over Phi_{p,q}
    BigInt max_coeff = 0;   ///< M(p,q)
    std::size_t n_monomials = 0;
    BigInt lower_num = 0, lower_den = 1;  ///< 3^p p! / p^p
    BigInt upper_ceil = 0;                ///< ceil(6^(p/3))

    bool no_cancellation = false;  ///< d11 == abs_sum
    bool lower_holds = false;      ///< 3^p p! <= d11 p^p
    bool upper_holds = false;      ///< d11^3 <= 6^p
    bool sandwich_holds = false;   ///< d11 / N <= M <= d11

    double lower_bound() const {
        return static_cast<double>(boost::multiprecision::cpp_rational(lower_num, lower_den));
    }

    bool all_hold() const noexcept { return no_cancellation && lower_holds && upper_holds && sandwich_holds; }
};

inline PermanentReport bounds_report(std::uint32_t p, std::uint32_t q, Backend backend = Backend::Auto) {
    PermanentReport out;
    out.p = p;
    out.q = q;

    const BiPoly phi = phi_polynomial(p, q, backend);
    for (const auto& t : phi.terms()) {
        const BigInt mag = abs(t.c);
        out.abs_sum += mag;
        if (mag > out.max_coeff) out.max_coeff = mag;
    }
    out.n_monomials = phi.size();

    if (p <= ryser_max_p) {
        out.d11 = permanent_ryser(p, q);
        out.d11_source = "ryser";
    } else {
        out.d11 = eval(permanent_generating(p, q), 1, 1);
        out.d11_source = "cycle_cover";
    }

    const BigInt pow3 = boost::multiprecision::pow(BigInt(3), p);
    const BigInt pow6 = boost::multiprecision::pow(BigInt(6), p);
    const BigInt powp = boost::multiprecision::pow(BigInt(p), p);
    const BigInt fact = detail::factorial(p);
    const BigInt g = gcd(pow3 * fact, powp);
    out.lower_num = pow3 * fact / g;
    out.lower_den = powp / g;
    out.upper_ceil = detail::ceil_cbrt(pow6);

    out.no_cancellation = out.d11 == out.abs_sum;
    out.lower_holds = pow3 * fact <= out.d11 * powp;
    out.upper_holds = out.d11 * out.d11 * out.d11 <= pow6;
    out.sandwich_holds = out.d11 <= out.max_coeff * out.n_monomials && out.max_coeff <= out.d11;
    return out;
}

struct GrowthRow {
    std::uint32_t p = 0, q = 0;
    BigInt max_coeff = 0;
    BigInt d11 = 0;
    std::size_t n_monomials = 0;
    double root = 0.0;  ///< M^(1/p), display only
    bool sandwich_holds = false;
};

/// M(p,q) and its p-th root for p = max(3, q+1) .. p_max. d11 comes from the
/// permanent generating function, M and N from Phi itself.
inline std::vector<GrowthRow> growth_table(std::uint32_t q, std::uint32_t p_max, Backend backend = Backend::Auto) {
    if (q < 2) throw InvalidSpec("growth_table requires q >= 2");
    std::vector<GrowthRow> rows;
    for (std::uint32_t p = std::max(3u, q + 1); p <= p_max; ++p) {
        GrowthRow row;
        row.p = p;
        row.q = q;
        const BiPoly phi = phi_polynomial(p, q, backend);
        for (const auto& t : phi.terms())
            if (abs(t.c) > row.max_coeff) row.max_coeff = abs(t.c);
        row.n_monomials = phi.size();
        row.d11 = q <= cycle_cover_max_q ? eval(permanent_generating(p, q), 1, 1) : permanent_ryser(p, q);
        row.root = static_cast<double>(std::exp(std::log(row.max_coeff.convert_to<long double>()) / p));
        row.sandwich_holds = row.d11 <= row.max_coeff * row.n_monomials && row.max_coeff <= row.d11;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace circdet

#endif // CIRCDET_PERMANENT_HPP
