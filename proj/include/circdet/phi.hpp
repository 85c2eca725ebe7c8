#ifndef CIRCDET_PHI_HPP
#define CIRCDET_PHI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "circdet/arith.hpp"
#include "circdet/bipoly.hpp"
#include "circdet/circulant.hpp"
#include "circdet/errors.hpp"

namespace circdet {

enum class Backend { Auto, Bareiss, CycleCover, BruteForce };

inline std::string_view to_string(Backend b) noexcept {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Bareiss: return "bareiss";
        case Backend::CycleCover: return "cycle_cover";
        case Backend::BruteForce: return "bruteforce";
    }
    return "?";
}

inline std::optional<Backend> parse_backend(std::string_view name) noexcept {
    for (Backend b : {Backend::Auto, Backend::Bareiss, Backend::CycleCover, Backend::BruteForce})
        if (name == to_string(b)) return b;
    return std::nullopt;
}

/// Largest p for which Auto picks Bareiss.
inline constexpr std::uint32_t auto_bareiss_max_p = 64;
/// Largest q for which Auto falls back to the cycle-cover DP beyond that.
inline constexpr std::uint32_t auto_cycle_cover_max_q = 12;

/// Auto: Bareiss up to p = 64, then the cycle-cover DP while q <= 12, then
/// Bareiss again (slow, but exact).
inline Backend resolve_backend(const CirculantSpec& spec, Backend b) noexcept {
    if (b != Backend::Auto) return b;
    if (spec.p <= auto_bareiss_max_p) return Backend::Bareiss;
    if (spec.q <= auto_cycle_cover_max_q) return Backend::CycleCover;
    return Backend::Bareiss;
}

/// x^r y^s appears in Phi_{p,q} iff r + s <= p, p | r + s q, and (s > 0 or r in {0, p}).
inline bool support(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::uint32_t s) noexcept {
    if (std::uint64_t{r} + s > p) return false;
    if ((std::uint64_t{r} + std::uint64_t{s} * q) % p != 0) return false;
    return s > 0 || r == 0 || r == p;
}

/// (-1)^gcd(r, s, (r + s q)/p); +1 for the constant term.
inline int predicted_sign(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::uint32_t s) noexcept {
    const std::uint64_t ell = (std::uint64_t{r} + std::uint64_t{s} * q) / p;
    return gcd3(r, s, ell) % 2 == 0 ? 1 : -1;
}

/// Phi_{p,q} from the chosen backend. The support of the result is checked
/// against support(); a mismatch raises InternalInconsistency.
inline BiPoly phi_polynomial(std::uint32_t p, std::uint32_t q, Backend backend = Backend::Auto) {
    const auto spec = CirculantSpec::make(p, q);
    BiPoly out;
    switch (resolve_backend(spec, backend)) {
        case Backend::Bareiss: out = det_bareiss(spec); break;
        case Backend::CycleCover: out = det_cycle_cover(spec); break;
        case Backend::BruteForce: out = det_bruteforce(spec); break;
        case Backend::Auto: break;
    }

    std::size_t expected = 0;
    for (std::uint32_t s = 0; s <= p; ++s)
        for (std::uint32_t r = 0; r + s <= p; ++r) expected += support(p, q, r, s);
    for (const auto& t : out.terms())
        if (!support(p, q, t.m.r, t.m.s))
            throw InternalInconsistency("Phi_{" + std::to_string(p) + "," + std::to_string(q) +
                                        "} has a term outside the predicted support");
    if (out.size() != expected)
        throw InternalInconsistency("Phi_{" + std::to_string(p) + "," + std::to_string(q) +
                                    "} is missing a predicted monomial");
    return out;
}

struct CoefficientReport {
    std::uint32_t p = 0, q = 0, r = 0, s = 0;
    bool present = false;
    std::optional<std::uint64_t> ell;
    std::optional<std::uint64_t> k;
    int sign = 0;  ///< 0 when absent
    BigInt magnitude = 0;
    BigInt value = 0;
};

/// Report for a(r, s) read off an already computed Phi_{p,q}. The sign is
/// recomputed from the gcd rule and must match the polynomial.
inline CoefficientReport coefficient(const BiPoly& phi, std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                     std::uint32_t s) {
    CoefficientReport out;
    out.p = p;
    out.q = q;
    out.r = r;
    out.s = s;
    out.present = support(p, q, r, s);
    out.value = phi.coeff(r, s);
    out.magnitude = abs(out.value);

    const std::string where = "a_{" + std::to_string(p) + "," + std::to_string(q) + "}(" + std::to_string(r) +
                              "," + std::to_string(s) + ")";
    if (!out.present) {
        if (!out.value.is_zero()) throw InternalInconsistency(where + " is nonzero outside the support");
        return out;
    }
    out.ell = (std::uint64_t{r} + std::uint64_t{s} * q) / p;
    out.k = gcd3(r, s, *out.ell);
    out.sign = *out.k % 2 == 0 ? 1 : -1;
    if (out.value.is_zero()) throw InternalInconsistency(where + " vanishes inside the support");
    if ((out.value > 0 ? 1 : -1) != out.sign) throw InternalInconsistency(where + " has the wrong sign");
    return out;
}

inline CoefficientReport coefficient(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::uint32_t s,
                                     Backend backend = Backend::Auto) {
    return coefficient(phi_polynomial(p, q, backend), p, q, r, s);
}

/// q used by primality_check; any valid q works, 2 is valid for every p >= 3.
inline constexpr std::uint32_t primality_q = 2;

/// True iff 1 - Phi_{p,2} is congruent to (x + y)^p modulo p.
inline bool primality_check(std::uint32_t p, Backend backend = Backend::Auto) {
    if (p < 3) throw InvalidSpec("primality_check requires p >= 3");
    const BiPoly f = BiPoly::one() - phi_polynomial(p, primality_q, backend);
    const BiPoly binomial = pow(BiPoly::x() + BiPoly::y(), p);
    return reduce_mod(f - binomial, p).is_zero();
}

} // namespace circdet

#endif // CIRCDET_PHI_HPP
