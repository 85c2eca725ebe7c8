#include <gtest/gtest.h>

#include "circdet/bipoly_io.hpp"
#include "circdet/phi.hpp"
#include "oracles.hpp"

using namespace circdet;

TEST(Support, Examples) {
    EXPECT_TRUE(support(8, 3, 5, 1));
    EXPECT_FALSE(support(5, 3, 1, 1));
    EXPECT_TRUE(support(7, 4, 0, 0));
    EXPECT_TRUE(support(5, 3, 5, 0));
    EXPECT_FALSE(support(6, 3, 3, 0));  // p | r + s q, but only r in {0, p} survives for s = 0
    EXPECT_FALSE(support(5, 3, 5, 5));
}

TEST(Support, MatchesBruteForce) {
    for (std::uint32_t p = 3; p <= 9; ++p)
        for (std::uint32_t q = 2; q < p; ++q) {
            const BiPoly phi = det_bruteforce(CirculantSpec::make(p, q));
            for (std::uint32_t s = 0; s <= p; ++s)
                for (std::uint32_t r = 0; r + s <= p; ++r)
                    EXPECT_EQ(!phi.coeff(r, s).is_zero(), support(p, q, r, s)) << p << q << r << s;
        }
}

TEST(Sign, GcdRuleOnComputedPolynomials) {
    for (std::uint32_t p = 3; p <= 24; ++p)
        for (std::uint32_t q = 2; q < p; ++q) {
            const BiPoly phi = phi_polynomial(p, q);
            for (const auto& t : phi.terms()) {
                const std::uint64_t ell = (t.m.r + std::uint64_t{t.m.s} * q) / p;
                const int expected = oracle::gcd3(t.m.r, t.m.s, ell) % 2 == 0 ? 1 : -1;
                EXPECT_EQ(t.c > 0 ? 1 : -1, expected) << p << " " << q;
            }
        }
}

TEST(PhiPolynomial, Examples) {
    EXPECT_EQ(to_string(phi_polynomial(8, 3)), "1 - x^8 - 8*x^5*y - 12*x^2*y^2 + 2*x^4*y^4 - 8*x*y^5 - y^8");
    EXPECT_EQ(to_string(phi_polynomial(5, 3)), "1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5");
    const BiPoly phi73 = phi_polynomial(7, 3);
    EXPECT_EQ(phi73, det_bruteforce(CirculantSpec::make(7, 3)));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> mons;
    for (const auto& t : phi73.terms()) mons.emplace_back(t.m.r, t.m.s);
    EXPECT_EQ(mons, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                        {0, 0}, {1, 2}, {4, 1}, {2, 4}, {0, 7}, {7, 0}}));
    for (auto b : {Backend::Bareiss, Backend::CycleCover, Backend::BruteForce})
        EXPECT_EQ(phi_polynomial(8, 3, b), phi_polynomial(8, 3));
}

TEST(Backend, Names) {
    for (auto b : {Backend::Auto, Backend::Bareiss, Backend::CycleCover, Backend::BruteForce})
        EXPECT_EQ(parse_backend(to_string(b)), b);
    EXPECT_FALSE(parse_backend("ryser").has_value());
    EXPECT_EQ(resolve_backend(CirculantSpec::make(64, 20), Backend::Auto), Backend::Bareiss);
    EXPECT_EQ(resolve_backend(CirculantSpec::make(100, 5), Backend::Auto), Backend::CycleCover);
    EXPECT_EQ(resolve_backend(CirculantSpec::make(100, 50), Backend::Auto), Backend::Bareiss);
}

TEST(Coefficient, Examples) {
    const auto a = coefficient(8, 3, 2, 2);
    EXPECT_TRUE(a.present);
    EXPECT_EQ(a.ell, 1u);
    EXPECT_EQ(a.k, 1u);
    EXPECT_EQ(a.sign, -1);
    EXPECT_EQ(a.magnitude, 12);
    EXPECT_EQ(a.value, -12);

    const auto b = coefficient(8, 3, 4, 4);
    EXPECT_EQ(b.ell, 2u);
    EXPECT_EQ(b.k, 2u);
    EXPECT_EQ(b.sign, 1);
    EXPECT_EQ(b.magnitude, 2);

    const auto c = coefficient(5, 3, 2, 1);
    EXPECT_EQ(c.sign, -1);
    EXPECT_EQ(c.magnitude, 5);

    const auto d = coefficient(5, 3, 1, 1);
    EXPECT_FALSE(d.present);
    EXPECT_EQ(d.sign, 0);
    EXPECT_EQ(d.value, 0);
    EXPECT_FALSE(d.k.has_value());

    EXPECT_FALSE(coefficient(5, 3, 4, 4).present);
}

TEST(Primality, Examples) {
    EXPECT_TRUE(primality_check(5));
    EXPECT_FALSE(primality_check(8));
    EXPECT_FALSE(primality_check(9));
    EXPECT_THROW(primality_check(2), InvalidSpec);
}

TEST(Primality, MatchesTrialDivision) {
    for (std::uint32_t p = 3; p <= 40; ++p) EXPECT_EQ(primality_check(p), oracle::is_prime(p)) << p;
}
