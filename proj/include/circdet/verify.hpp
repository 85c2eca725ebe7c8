#ifndef CIRCDET_VERIFY_HPP
#define CIRCDET_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "circdet/arith.hpp"
#include "circdet/bipoly_io.hpp"
#include "circdet/circulant.hpp"
#include "circdet/permanent.hpp"
#include "circdet/permclass.hpp"
#include "circdet/phi.hpp"

namespace circdet::verify {

// Each suite is split into independent cases (one per (p, q), one per p, or
// one per random batch). Cases are pure, so callers may run them in any order
// or concurrently and then reduce in case order.

enum class QPolicy { All, Coprime };

struct Options {
    std::uint32_t p_min = 3;
    std::uint32_t p_max = 9;
    QPolicy q_policy = QPolicy::All;
    std::uint64_t seed = 20070301;
    std::uint64_t random_cases = 10000;  ///< per lemma, for the `lemmas` suite
};

struct Case {
    std::string suite;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint64_t batch = 0;  ///< lemma index and batch, `lemmas` only
    std::uint64_t count = 0;  ///< random draws in this batch
    std::uint64_t seed = 0;
};

struct Outcome {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_counterexample = what;
    }
};

struct SuiteResult {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;

    bool passed() const noexcept { return failures == 0; }
};

inline constexpr std::array<std::string_view, 7> suite_names{"support", "sign",  "cycle", "witness",
                                                             "permanent", "prime", "lemmas"};

inline bool is_suite(std::string_view name) {
    return std::find(suite_names.begin(), suite_names.end(), name) != suite_names.end();
}

namespace detail {

inline std::string pq(std::uint32_t p, std::uint32_t q) {
    return "p=" + std::to_string(p) + " q=" + std::to_string(q);
}

inline std::string pqrs(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::uint32_t s) {
    return pq(p, q) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

/// Phi from the brute-force oracle where it is affordable, the DP otherwise.
inline BiPoly reference_phi(std::uint32_t p, std::uint32_t q) {
    const auto spec = CirculantSpec::make(p, q);
    return p <= 9 ? det_bruteforce(spec) : det_cycle_cover(spec);
}

inline void run_support(const Case& c, Outcome& out) {
    const BiPoly phi = reference_phi(c.p, c.q);
    for (const auto& t : phi.terms())
        out.check(t.m.degree() <= c.p, pqrs(c.p, c.q, t.m.r, t.m.s) + ": term of total degree above p");
    for (std::uint32_t s = 0; s <= c.p; ++s)
        for (std::uint32_t r = 0; r + s <= c.p; ++r) {
            const bool nonzero = !phi.coeff(r, s).is_zero();
            out.check(nonzero == support(c.p, c.q, r, s),
                      pqrs(c.p, c.q, r, s) + (nonzero ? ": nonzero outside support" : ": zero inside support"));
        }
}

inline void run_sign(const Case& c, Outcome& out) {
    const auto spec = CirculantSpec::make(c.p, c.q);
    std::vector<std::pair<std::string, BiPoly>> polys;
    polys.emplace_back("bareiss", det_bareiss(spec));
    if (c.q <= cycle_cover_max_q) polys.emplace_back("cycle_cover", det_cycle_cover(spec));
    if (c.p <= 9) polys.emplace_back("bruteforce", det_bruteforce(spec));
    for (const auto& [name, phi] : polys)
        for (const auto& t : phi.terms()) {
            const int sign = t.c > 0 ? 1 : -1;
            out.check(sign == predicted_sign(c.p, c.q, t.m.r, t.m.s),
                      pqrs(c.p, c.q, t.m.r, t.m.s) + ": " + name + " sign disagrees with the gcd rule");
        }
}

/// (r_i, s_i) of the cycle through `start`.
inline std::pair<std::uint32_t, std::uint32_t> cycle_steps(const Permutation& sigma, std::uint32_t start,
                                                           std::uint32_t q) {
    std::uint32_t ones = 0, qs = 0;
    const std::uint32_t p = sigma.size();
    std::uint32_t v = start;
    do {
        const std::uint32_t d = (sigma(v) + p - v) % p;
        ones += d == 1;
        qs += d == q;
        v = sigma(v);
    } while (v != start);
    return {ones, qs};
}

inline void run_cycle(const Case& c, Outcome& out) {
    const BiPoly phi = reference_phi(c.p, c.q);
    for (std::uint32_t s = 0; s <= c.p; ++s)
        for (std::uint32_t r = 0; r + s <= c.p; ++r) {
            const auto key = PermClassKey::make(c.p, c.q, r, s);
            const auto members = enumerate_class(key);
            const std::string where = pqrs(c.p, c.q, r, s);
            out.check(members.empty() == key.empty_class(), where + ": class emptiness disagrees with p | r+sq");
            out.check(BigInt(members.size()) == abs(phi.coeff(r, s)), where + ": |class| != |a(r,s)|");
            if (members.empty()) continue;

            const auto predicted = predict_structure(key);
            for (const auto& sigma : members) {
                out.check(sigma.cycle_type() == predicted.cycle_type(), where + ": member " + sigma.one_line() +
                                                                            " has an unexpected cycle type");
                out.check(sigma.sign() == predicted.sign, where + ": member " + sigma.one_line() +
                                                              " has an unexpected sign");
                if (c.p % 2 == 1)
                    out.check((sigma.sign() == -1) == (r % 2 == 1 && s % 2 == 1),
                              where + ": odd-p sign shortcut fails for " + sigma.one_line());
                for (const auto& cyc : sigma.cycles()) {
                    const auto [ri, si] = cycle_steps(sigma, cyc.front(), c.q);
                    const std::uint64_t total = std::uint64_t{ri} + std::uint64_t{si} * c.q;
                    out.check(total % c.p == 0 && gcd3(ri, si, total / c.p) == 1,
                              where + ": cycle of " + sigma.one_line() + " has gcd(r_i, s_i, l_i) != 1");
                }
            }
        }
}

inline void run_witness(const Case& c, Outcome& out) {
    for (std::uint32_t s = 0; s <= c.p; ++s)
        for (std::uint32_t r = 0; r + s <= c.p; ++r) {
            const auto key = PermClassKey::make(c.p, c.q, r, s);
            if (key.empty_class() || r + s == 0) continue;
            const std::string where = pqrs(c.p, c.q, r, s);
            std::optional<Permutation> sigma;
            try {
                sigma = construct_witness(key);
            } catch (const Error& e) {
                out.check(false, where + ": construct_witness threw: " + e.what());
                continue;
            }
            const auto profile = displacement_profile(*sigma, c.q);
            out.check(profile && profile->r == r && profile->s == s,
                      where + ": witness " + sigma->one_line() + " has the wrong displacement profile");
            const auto k = key.k();
            const auto cycles = sigma->cycles();
            bool shape = cycles.size() == k;
            for (const auto& cyc : cycles) {
                const auto [ri, si] = cycle_steps(*sigma, cyc.front(), c.q);
                shape = shape && ri == r / k && si == s / k;
            }
            out.check(shape, where + ": witness " + sigma->cycle_notation() + " does not have k equal cycles");
            if (c.p <= 9) {
                const auto members = enumerate_class(key);
                out.check(std::binary_search(members.begin(), members.end(), *sigma),
                          where + ": witness not found by enumeration");
            }
        }
}

inline void run_permanent(const Case& c, Outcome& out) {
    const std::string where = pq(c.p, c.q);
    const BiPoly phi = phi_polynomial(c.p, c.q, Backend::Auto);
    const BiPoly gen = permanent_generating(c.p, c.q);
    out.check(gen == abs_coefficients(phi), where + ": D(x,y) is not |Phi| termwise");
    const BigInt from_gen = eval(gen, 1, 1);
    BigInt abs_sum = 0;
    for (const auto& t : phi.terms()) abs_sum += abs(t.c);
    out.check(from_gen == abs_sum, where + ": D(1,1) != sum |a(r,s)|");
    if (c.p <= ryser_max_p)
        out.check(permanent_ryser(c.p, c.q) == abs_sum, where + ": Ryser permanent != sum |a(r,s)|");
    const auto report = bounds_report(c.p, c.q);
    out.check(report.no_cancellation, where + ": report says D(1,1) != sum |a(r,s)|");
    out.check(report.lower_holds, where + ": 3^p p! > D(1,1) p^p");
    out.check(report.upper_holds, where + ": D(1,1)^3 > 6^p");
    out.check(report.sandwich_holds, where + ": D/N <= M <= D fails");
}

inline void run_prime(const Case& c, Outcome& out) {
    out.check(primality_check(c.p) == is_prime_trial(c.p),
              "p=" + std::to_string(c.p) + ": (x+y)^p congruence disagrees with trial division");
}

/// Randomized batteries. batch 0: cyclic order is preserved by z -> z + q;
/// batch 1: lattice path bound; batch 2: divisibility gap.
inline void run_lemma(const Case& c, Outcome& out) {
    std::mt19937_64 rng(c.seed);
    auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (std::uint64_t i = 0; i < c.count; ++i) {
        if (c.batch == 0) {
            const auto p = static_cast<std::uint32_t>(uniform(3, 64));
            const auto q = static_cast<std::uint32_t>(uniform(1, p - 1));
            const auto m = static_cast<std::size_t>(uniform(3, std::min<std::int64_t>(p, 10)));
            std::vector<std::uint32_t> pool(p);
            std::iota(pool.begin(), pool.end(), 1u);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<std::uint32_t> z(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
            if (uniform(0, 1) == 0) {
                std::sort(z.begin(), z.end());
                std::rotate(z.begin(), z.begin() + uniform(0, static_cast<std::int64_t>(m) - 1), z.end());
            }
            std::vector<std::uint32_t> moved;
            for (auto v : z) moved.push_back(residue(std::int64_t{v} + q, p));
            out.check(cyclic_order(z) == cyclic_order(moved),
                      "cyclic order not preserved: p=" + std::to_string(p) + " q=" + std::to_string(q));
        } else if (c.batch == 1) {
            const auto r = static_cast<std::uint32_t>(uniform(0, 60));
            const auto s = static_cast<std::uint32_t>(uniform(r == 0 ? 1 : 0, 60));
            out.check(path_bound_check(build_path(r, s), r, s),
                      "path bound fails: r=" + std::to_string(r) + " s=" + std::to_string(s));
        } else {
            const std::int64_t p = uniform(3, 200), q = uniform(2, p - 1);
            const std::int64_t b = uniform(-100, 100), s = uniform(-100, 100);
            const std::int64_t a = uniform(-50, 50) * p - b * q;
            const std::int64_t r = uniform(-50, 50) * p - s * q;
            out.check(lattice_gap_holds(a, b, r, s, p),
                      "gap fails: a=" + std::to_string(a) + " b=" + std::to_string(b) + " r=" + std::to_string(r) +
                          " s=" + std::to_string(s) + " p=" + std::to_string(p));
        }
    }
}

} // namespace detail

/// Cases for a suite, in reduction order.
inline std::vector<Case> suite_cases(std::string_view suite, const Options& opt) {
    if (!is_suite(suite)) throw InvalidSpec("unknown suite '" + std::string(suite) + "'");
    std::vector<Case> out;
    const std::string name(suite);
    if (suite == "lemmas") {
        constexpr std::uint64_t batch_size = 2500;
        for (std::uint64_t lemma = 0; lemma < 3; ++lemma)
            for (std::uint64_t done = 0, idx = 0; done < opt.random_cases; done += batch_size, ++idx) {
                const std::uint64_t n = std::min(batch_size, opt.random_cases - done);
                out.push_back({name, 0, 0, lemma, n, opt.seed + 1000003 * lemma + idx});
            }
        return out;
    }
    if (opt.p_min < 3 || opt.p_max < opt.p_min) throw InvalidSpec("need 3 <= pmin <= pmax");
    if (suite == "prime") {
        for (std::uint32_t p = opt.p_min; p <= opt.p_max; ++p) out.push_back({name, p, primality_q});
        return out;
    }
    if ((suite == "cycle") && opt.p_max > enumerate_max_p)
        throw TooLarge("suite 'cycle' enumerates classes and supports pmax <= " + std::to_string(enumerate_max_p));
    for (std::uint32_t p = opt.p_min; p <= opt.p_max; ++p)
        for (std::uint32_t q = 2; q < p; ++q) {
            if (opt.q_policy == QPolicy::Coprime && std::gcd(p, q) != 1) continue;
            if ((suite == "support" || suite == "permanent") && p > 9 && q > cycle_cover_max_q) continue;
            out.push_back({name, p, q});
        }
    return out;
}

inline Outcome run_case(const Case& c) {
    Outcome out;
    try {
        if (c.suite == "support") detail::run_support(c, out);
        else if (c.suite == "sign") detail::run_sign(c, out);
        else if (c.suite == "cycle") detail::run_cycle(c, out);
        else if (c.suite == "witness") detail::run_witness(c, out);
        else if (c.suite == "permanent") detail::run_permanent(c, out);
        else if (c.suite == "prime") detail::run_prime(c, out);
        else if (c.suite == "lemmas") detail::run_lemma(c, out);
    } catch (const InternalInconsistency& e) {
        out.check(false, detail::pq(c.p, c.q) + ": " + e.what());
    }
    return out;
}

inline SuiteResult reduce(std::string_view suite, const std::vector<Outcome>& outcomes) {
    SuiteResult res;
    res.suite = std::string(suite);
    for (const auto& o : outcomes) {
        ++res.cases;
        res.checks += o.checks;
        if (o.failures > 0 && res.failures == 0) res.first_counterexample = o.first_counterexample;
        res.failures += o.failures;
    }
    return res;
}

inline SuiteResult run_suite(std::string_view suite, const Options& opt) {
    std::vector<Outcome> outcomes;
    for (const auto& c : suite_cases(suite, opt)) outcomes.push_back(run_case(c));
    return reduce(suite, outcomes);
}

} // namespace circdet::verify

#endif // CIRCDET_VERIFY_HPP
