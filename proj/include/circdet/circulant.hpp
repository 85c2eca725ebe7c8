#ifndef CIRCDET_CIRCULANT_HPP
#define CIRCDET_CIRCULANT_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "circdet/arith.hpp"
#include "circdet/bipoly.hpp"
#include "circdet/errors.hpp"

namespace circdet {

/// The p x p circulant with 1 on the diagonal, -x at cyclic offset t and -y
/// at cyclic offset q. Canonical specs have t = 1.
struct CirculantSpec {
    std::uint32_t p = 3;
    std::uint32_t q = 2;
    std::uint32_t t = 1;

    static constexpr std::uint32_t max_p = 1u << 16;

    static CirculantSpec make(std::int64_t p, std::int64_t q, std::int64_t t = 1) {
        check_ranges(p, q, t);
        if (t == q)
            throw InvalidSpec("band offsets must differ (t = q = " + std::to_string(q) + ")");
        return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(t)};
    }

    bool is_canonical() const noexcept { return t == 1; }

    std::string label() const {
        std::string out = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        if (t != 1) out += " t=" + std::to_string(t);
        return out;
    }

    friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

    static void check_ranges(std::int64_t p, std::int64_t q, std::int64_t t) {
        if (p < 3 || p > max_p) throw InvalidSpec("p must lie in [3, " + std::to_string(max_p) + "]");
        if (q < 1 || q >= p) throw InvalidSpec("q must satisfy 1 <= q < p");
        if (t < 1 || t >= p) throw InvalidSpec("t must satisfy 1 <= t < p");
    }
};

struct ThetaReduction {
    CirculantSpec spec;
    /// When set, the determinant of the input equals the canonical polynomial
    /// with x and y exchanged.
    bool swapped = false;

    friend bool operator==(const ThetaReduction&, const ThetaReduction&) = default;
};

/// Maps a general three-band circulant (p, q, t) onto a canonical one.
///
/// With gcd(t, p) = 1 the x band is relabeled to offset 1 and the y band moves
/// to q * t^-1 mod p. Otherwise, with gcd(q, p) = 1, the bands trade places:
/// y gets offset 1, x gets t * q^-1 mod p, and `swapped` is set.
inline ThetaReduction reduce_theta(std::int64_t p, std::int64_t q, std::int64_t t) {
    CirculantSpec::check_ranges(p, q, t);
    if (auto inv = mod_inverse(t, p)) return {CirculantSpec::make(p, (q * *inv) % p), false};
    if (auto inv = mod_inverse(q, p)) return {CirculantSpec::make(p, (t * *inv) % p), true};
    throw IrreducibleSpec("gcd(t, p) > 1 and gcd(q, p) > 1: no canonical form for p=" + std::to_string(p) +
                          " q=" + std::to_string(q) + " t=" + std::to_string(t));
}

inline ThetaReduction reduce_theta(const CirculantSpec& spec) { return reduce_theta(spec.p, spec.q, spec.t); }

namespace detail {

inline void require_canonical(const CirculantSpec& spec) {
    CirculantSpec::make(spec.p, spec.q, spec.t);
    if (!spec.is_canonical()) throw InvalidSpec("backend requires a canonical spec (t = 1)");
}

inline std::vector<std::vector<BiPoly>> circulant_matrix(const CirculantSpec& spec) {
    const std::uint32_t p = spec.p;
    std::vector<std::vector<BiPoly>> m(p, std::vector<BiPoly>(p));
    for (std::uint32_t i = 0; i < p; ++i) {
        m[i][i] = BiPoly::one();
        m[i][(i + spec.t) % p] = -BiPoly::x();
        m[i][(i + spec.q) % p] = -BiPoly::y();
    }
    return m;
}

} // namespace detail

/// Determinant by fraction-free (Bareiss) elimination without row exchanges.
///
/// Each pivot is a leading principal minor, so its constant term is 1; this
/// is checked at every step.
inline BiPoly det_bareiss(const CirculantSpec& spec) {
    CirculantSpec::make(spec.p, spec.q, spec.t);
    auto m = detail::circulant_matrix(spec);
    const std::size_t n = m.size();
    BiPoly prev = BiPoly::one();

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const BiPoly pivot = m[k][k];
        if (pivot.constant_term() != 1)
            throw InternalInconsistency("Bareiss pivot " + std::to_string(k) + " lost its unit constant term");
        const bool prev_is_one = prev == BiPoly::one();
        const bool pivot_is_prev = pivot == prev;

        for (std::size_t i = k + 1; i < n; ++i) {
            const bool row_has_entry = !m[i][k].is_zero();
            if (!row_has_entry && pivot_is_prev) continue;
            for (std::size_t j = k + 1; j < n; ++j) {
                BiPoly num = pivot * m[i][j];
                if (row_has_entry && !m[k][j].is_zero()) num -= m[i][k] * m[k][j];
                m[i][j] = prev_is_one ? std::move(num) : exact_div(num, prev);
            }
            m[i][k] = BiPoly{};
        }
        prev = pivot;
    }
    return m[n - 1][n - 1];
}

namespace detail {

inline BigInt to_bigint(unsigned __int128 v) {
    BigInt out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

inline BigInt to_bigint(const BigInt& v) { return v; }

/// Counts N(r, s) of permutations with displacements in {0, 1, q}, r of them
/// equal to 1 and s equal to q.
///
/// Rows are scanned in order with a (q+1)-bit window of claimed columns
/// j..j+q. Columns past p wrap into 0..q-1; the wrapped set B is fixed up
/// front, so the final window must equal B. Summing displacements shows
/// r + q*s = p*|B|, so r is recovered from |B| and s alone.
template <class Acc>
std::vector<Term> cycle_cover_counts_impl(std::uint32_t p, std::uint32_t q) {
    const std::size_t nmask = std::size_t{1} << (q + 1);
    const std::size_t stride = p + 1;
    const std::array<std::uint32_t, 3> steps{0, 1, q};

    std::vector<Acc> totals((q + 1) * stride, Acc{0});
    std::vector<Acc> cur(nmask * stride, Acc{0}), next(nmask * stride, Acc{0});
    std::vector<char> seen(nmask, 0);
    std::vector<std::uint32_t> live, next_live;

    for (std::uint32_t boundary = 0; boundary < (1u << q); ++boundary) {
        for (auto mask : live) std::fill_n(cur.begin() + mask * stride, stride, Acc{0});
        live.assign(1, boundary);
        cur[boundary * stride] = Acc{1};

        for (std::uint32_t j = 0; j < p && !live.empty(); ++j) {
            next_live.clear();
            for (auto mask : live) {
                const Acc* src = &cur[mask * stride];
                for (auto d : steps) {
                    const std::uint32_t bit = 1u << d;
                    if (mask & bit) continue;
                    const std::uint32_t col = j + d;
                    if (col >= p && !((boundary >> (col - p)) & 1u)) continue;
                    const std::uint32_t claimed = mask | bit;
                    if (!(claimed & 1u)) continue;
                    const std::uint32_t shifted = claimed >> 1;
                    if (!seen[shifted]) {
                        seen[shifted] = 1;
                        next_live.push_back(shifted);
                    }
                    Acc* dst = &next[shifted * stride + (d == q ? 1 : 0)];
                    for (std::uint32_t s = 0; s <= j; ++s) dst[s] += src[s];
                }
            }
            for (auto mask : live) std::fill_n(cur.begin() + mask * stride, stride, Acc{0});
            for (auto mask : next_live) seen[mask] = 0;
            std::swap(cur, next);
            std::swap(live, next_live);
        }

        if (std::find(live.begin(), live.end(), boundary) != live.end()) {
            const auto ell = static_cast<std::uint32_t>(std::popcount(boundary));
            for (std::size_t s = 0; s < stride; ++s) totals[ell * stride + s] += cur[boundary * stride + s];
        }
    }

    std::vector<Term> out;
    for (std::uint32_t ell = 0; ell <= q; ++ell)
        for (std::uint32_t s = 0; s <= p; ++s) {
            const Acc& count = totals[ell * stride + s];
            if (count == Acc{0}) continue;
            const std::int64_t r = std::int64_t{p} * ell - std::int64_t{q} * s;
            if (r < 0 || r + s > p)
                throw InternalInconsistency("cycle-cover DP produced an impossible exponent pair");
            out.push_back({{static_cast<std::uint32_t>(r), s}, to_bigint(count)});
        }
    return out;
}

} // namespace detail

/// Largest q accepted by the cycle-cover backends.
inline constexpr std::uint32_t cycle_cover_max_q = 16;

/// Unsigned cycle-cover counts N(r, s) for a canonical spec.
inline std::vector<Term> cycle_cover_counts(const CirculantSpec& spec) {
    detail::require_canonical(spec);
    if (spec.q > cycle_cover_max_q)
        throw StateSpaceTooLarge("cycle-cover DP supports q <= " + std::to_string(cycle_cover_max_q) +
                                 ", got q=" + std::to_string(spec.q));
    // Every DP cell counts partial assignments, so it is at most 3^p < 2^128 for p <= 80.
    if (spec.p <= 80) return detail::cycle_cover_counts_impl<unsigned __int128>(spec.p, spec.q);
    return detail::cycle_cover_counts_impl<BigInt>(spec.p, spec.q);
}

/// Determinant from the signed cycle-cover count: a(r,s) = (-1)^gcd(r,s,l) N(r,s)
/// with l = (r + s q) / p.
inline BiPoly det_cycle_cover(const CirculantSpec& spec) {
    auto terms = cycle_cover_counts(spec);
    for (auto& t : terms) {
        const std::uint64_t ell = (std::uint64_t{t.m.r} + std::uint64_t{t.m.s} * spec.q) / spec.p;
        if (gcd3(t.m.r, t.m.s, ell) % 2 == 1) t.c = -t.c;
    }
    return BiPoly::from_terms(std::move(terms));
}

inline constexpr std::uint32_t bruteforce_max_p = 10;

/// Sum of sgn(sigma) (-x)^r (-y)^s over every permutation of [p] whose
/// displacements all lie in {0, t, q}. Factorial cost; the ground-truth oracle.
inline BiPoly det_bruteforce(const CirculantSpec& spec) {
    CirculantSpec::make(spec.p, spec.q, spec.t);
    const std::uint32_t p = spec.p;
    if (p > bruteforce_max_p)
        throw TooLarge("brute-force expansion supports p <= " + std::to_string(bruteforce_max_p));

    std::vector<std::int64_t> acc((p + 1) * (p + 1), 0);
    std::vector<std::uint32_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<char> seen(p);
    do {
        std::uint32_t r = 0, s = 0;
        bool allowed = true;
        for (std::uint32_t j = 0; j < p && allowed; ++j) {
            const std::uint32_t d = (perm[j] + p - j) % p;
            if (d == spec.t)
                ++r;
            else if (d == spec.q)
                ++s;
            else if (d != 0)
                allowed = false;
        }
        if (!allowed) continue;

        std::fill(seen.begin(), seen.end(), 0);
        std::uint32_t cycles = 0;
        for (std::uint32_t j = 0; j < p; ++j) {
            if (seen[j]) continue;
            ++cycles;
            for (std::uint32_t v = j; !seen[v]; v = perm[v]) seen[v] = 1;
        }
        const int sign = (p - cycles) % 2 == 0 ? 1 : -1;
        const int minus = (r + s) % 2 == 0 ? 1 : -1;
        acc[r * (p + 1) + s] += sign * minus;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Term> terms;
    for (std::uint32_t r = 0; r <= p; ++r)
        for (std::uint32_t s = 0; s <= p; ++s)
            if (acc[r * (p + 1) + s] != 0) terms.push_back({{r, s}, acc[r * (p + 1) + s]});
    return BiPoly::from_terms(std::move(terms));
}

struct FloatCheckReport {
    bool pass = false;
    double max_deviation = 0.0;
    double worst_x = 0.0;
    double worst_y = 0.0;
    std::size_t points = 0;
};

inline constexpr double float_check_rel_tol = 1e-6;

/// Compares a candidate against prod_j (1 - x w^(tj) - y w^(qj)) over complex
/// p-th roots of unity on the grid {-1, -1/2, 1/2, 1}^2. Advisory only.
inline FloatCheckReport det_float_check(const CirculantSpec& spec, const BiPoly& candidate) {
    CirculantSpec::make(spec.p, spec.q, spec.t);
    using cplx = std::complex<long double>;
    const std::uint32_t p = spec.p;
    std::vector<cplx> roots(p);
    for (std::uint32_t j = 0; j < p; ++j)
        roots[j] = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * j / p);

    std::uint64_t max_degree = 0;
    for (const auto& t : candidate.terms()) max_degree = std::max(max_degree, t.m.degree());

    // Candidate at (a/2, b/2): sum c a^r b^s 2^(D-r-s), exact, then scaled by 2^-D.
    auto exact_at = [&](int a, int b) -> long double {
        BigInt total = 0;
        for (const auto& t : candidate.terms()) {
            BigInt term = t.c * boost::multiprecision::pow(BigInt(a), t.m.r) *
                          boost::multiprecision::pow(BigInt(b), t.m.s);
            term <<= static_cast<unsigned>(max_degree - t.m.degree());
            total += term;
        }
        return std::ldexp(total.convert_to<long double>(), -static_cast<int>(max_degree));
    };

    FloatCheckReport report;
    report.pass = true;
    const std::array<int, 4> grid{-2, -1, 1, 2};
    for (int a : grid)
        for (int b : grid) {
            const long double x = a / 2.0L, y = b / 2.0L;
            cplx prod = 1.0L;
            for (std::uint32_t j = 0; j < p; ++j)
                prod *= 1.0L - x * roots[(std::uint64_t{spec.t} * j) % p] - y * roots[(std::uint64_t{spec.q} * j) % p];
            const long double value = exact_at(a, b);
            const long double dev = std::abs(prod - cplx(value, 0.0L));
            if (!(dev < float_check_rel_tol * (1.0L + std::fabs(value)))) report.pass = false;
            if (dev > report.max_deviation || report.points == 0) {
                report.max_deviation = static_cast<double>(dev);
                report.worst_x = static_cast<double>(x);
                report.worst_y = static_cast<double>(y);
            }
            ++report.points;
        }
    return report;
}

} // namespace circdet

#endif // CIRCDET_CIRCULANT_HPP
