#ifndef CIRCDET_ARITH_HPP
#define CIRCDET_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <optional>

namespace circdet {

inline std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return std::gcd(std::gcd(a, b), c);
}

/// Inverse of a modulo m, if it exists.
inline std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) noexcept {
    std::int64_t old_r = ((a % m) + m) % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) return std::nullopt;
    return ((old_s % m) + m) % m;
}

/// Residue of v modulo p in {1, ..., p}: 0 maps to p.
inline std::uint32_t residue(std::int64_t v, std::uint32_t p) noexcept {
    const std::int64_t m = ((v % p) + p) % p;
    return m == 0 ? p : static_cast<std::uint32_t>(m);
}

inline bool is_prime_trial(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace circdet

#endif // CIRCDET_ARITH_HPP
