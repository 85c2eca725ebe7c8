#include <random>

#include <gtest/gtest.h>

#include "circdet/bipoly_io.hpp"
#include "circdet/circulant.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

BiPoly P(std::string_view s) { return parse_bipoly(s); }

const BiPoly phi53 = P("1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5");
const BiPoly phi83 = P("1 - x^8 - 8*x^5*y - 12*x^2*y^2 + 2*x^4*y^4 - 8*x*y^5 - y^8");
const BiPoly phi32 = P("1 - x^3 - 3*x*y - y^3");

} // namespace

TEST(CirculantSpec, Validation) {
    EXPECT_NO_THROW(CirculantSpec::make(3, 2));
    EXPECT_THROW(CirculantSpec::make(2, 1), InvalidSpec);
    EXPECT_THROW(CirculantSpec::make(5, 0), InvalidSpec);
    EXPECT_THROW(CirculantSpec::make(5, 5), InvalidSpec);
    EXPECT_THROW(CirculantSpec::make(5, 1), InvalidSpec);
    EXPECT_THROW(CirculantSpec::make(5, 3, 3), InvalidSpec);
    EXPECT_THROW(CirculantSpec::make(5, 3, 0), InvalidSpec);
    EXPECT_TRUE(CirculantSpec::make(5, 3).is_canonical());
    EXPECT_FALSE(CirculantSpec::make(5, 3, 2).is_canonical());
}

TEST(ReduceTheta, Examples) {
    const auto same = reduce_theta(8, 3, 1);
    EXPECT_EQ(same.spec, CirculantSpec::make(8, 3));
    EXPECT_FALSE(same.swapped);

    const auto moved = reduce_theta(5, 3, 2);
    EXPECT_EQ(moved.spec, CirculantSpec::make(5, 4));
    EXPECT_FALSE(moved.swapped);

    EXPECT_THROW(reduce_theta(6, 3, 2), IrreducibleSpec);
    EXPECT_THROW(reduce_theta(6, 3, 3), IrreducibleSpec);

    // gcd(t, p) > 1 but q is a unit: the bands trade places.
    const auto swapped = reduce_theta(8, 3, 2);
    EXPECT_TRUE(swapped.swapped);
    EXPECT_EQ(swapped.spec, CirculantSpec::make(8, 6));
}

TEST(ReduceTheta, PreservesDeterminant) {
    for (std::uint32_t p = 3; p <= 8; ++p)
        for (std::uint32_t q = 1; q < p; ++q)
            for (std::uint32_t t = 1; t < p; ++t) {
                if (q == t) continue;
                ThetaReduction red;
                try {
                    red = reduce_theta(p, q, t);
                } catch (const IrreducibleSpec&) {
                    EXPECT_GT(std::gcd(p, q), 1u);
                    EXPECT_GT(std::gcd(p, t), 1u);
                    continue;
                } catch (const InvalidSpec&) {
                    continue;  // reduces to q' = 1, which coincides with the x band
                }
                BiPoly canon = det_bruteforce(red.spec);
                if (red.swapped) canon = swap_xy(canon);
                EXPECT_EQ(det_bruteforce(CirculantSpec::make(p, q, t)), canon) << p << " " << q << " " << t;
            }
}

TEST(ReduceTheta, FloatCheckOnGeneralSpec) {
    const auto spec = CirculantSpec::make(5, 3, 2);
    EXPECT_TRUE(det_float_check(spec, det_bareiss(reduce_theta(spec).spec)).pass);
}

TEST(Backends, KnownPolynomials) {
    EXPECT_EQ(det_bareiss(CirculantSpec::make(5, 3)), phi53);
    EXPECT_EQ(det_bareiss(CirculantSpec::make(8, 3)), phi83);
    EXPECT_EQ(det_bareiss(CirculantSpec::make(3, 2)), phi32);
    EXPECT_EQ(det_cycle_cover(CirculantSpec::make(5, 3)), phi53);
    EXPECT_EQ(det_cycle_cover(CirculantSpec::make(8, 3)), phi83);
    EXPECT_EQ(det_bruteforce(CirculantSpec::make(5, 3)), phi53);
    EXPECT_EQ(det_bruteforce(CirculantSpec::make(3, 2)), phi32);
    EXPECT_EQ(det_cycle_cover(CirculantSpec::make(7, 2)), det_bruteforce(CirculantSpec::make(7, 2)));
    EXPECT_EQ(det_bruteforce(CirculantSpec::make(4, 2)), det_bareiss(CirculantSpec::make(4, 2)));
}

TEST(Backends, AgreeForSmallP) {
    for (std::uint32_t p = 3; p <= 9; ++p)
        for (std::uint32_t q = 2; q < p; ++q) {
            const auto spec = CirculantSpec::make(p, q);
            const BiPoly ref = det_bruteforce(spec);
            EXPECT_EQ(det_bareiss(spec), ref) << spec.label();
            EXPECT_EQ(det_cycle_cover(spec), ref) << spec.label();
        }
}

TEST(Backends, BareissAndCycleCoverAgreeBeyondBruteForce) {
    for (std::uint32_t p = 10; p <= 26; ++p)
        for (std::uint32_t q = 2; q < std::min(p, 9u); ++q) {
            const auto spec = CirculantSpec::make(p, q);
            EXPECT_EQ(det_bareiss(spec), det_cycle_cover(spec)) << spec.label();
        }
}

TEST(Backends, MatchNumericDeterminantAtRandomPoints) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> pt(-4, 4);
    for (std::uint32_t p = 3; p <= 14; ++p)
        for (std::uint32_t q = 2; q < p; ++q) {
            const auto spec = CirculantSpec::make(p, q);
            const BiPoly phi = det_bareiss(spec);
            for (int i = 0; i < 3; ++i) {
                const BigInt x0 = pt(rng), y0 = pt(rng);
                EXPECT_EQ(eval(phi, x0, y0), oracle::circulant_det_at(p, q, 1, x0, y0)) << spec.label();
            }
        }
}

TEST(Backends, GeneralBandOffsets) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pt(-3, 3);
    for (std::uint32_t p = 3; p <= 7; ++p)
        for (std::uint32_t q = 1; q < p; ++q)
            for (std::uint32_t t = 1; t < p; ++t) {
                if (q == t) continue;
                const auto spec = CirculantSpec::make(p, q, t);
                const BiPoly brute = det_bruteforce(spec);
                EXPECT_EQ(det_bareiss(spec), brute);
                const BigInt x0 = pt(rng), y0 = pt(rng);
                EXPECT_EQ(eval(brute, x0, y0), oracle::circulant_det_at(p, q, t, x0, y0));
            }
}

TEST(Backends, StructuralInvariants) {
    for (std::uint32_t p = 3; p <= 30; ++p)
        for (std::uint32_t q = 2; q < std::min(p, 7u); ++q) {
            const BiPoly phi = det_cycle_cover(CirculantSpec::make(p, q));
            EXPECT_EQ(phi.constant_term(), 1);
            EXPECT_EQ(phi.coeff(p, 0), -1);
            for (const auto& t : phi.terms()) EXPECT_LE(t.m.degree(), p);
        }
}

TEST(Backends, Guards) {
    EXPECT_THROW(det_bruteforce(CirculantSpec::make(11, 3)), TooLarge);
    EXPECT_THROW(det_cycle_cover(CirculantSpec::make(40, 17)), StateSpaceTooLarge);
    EXPECT_THROW(det_cycle_cover(CirculantSpec::make(5, 3, 2)), InvalidSpec);
}

TEST(Backends, CycleCoverLargeP) {
    // Past the 128-bit accumulator: compare against the numeric determinant.
    const auto spec = CirculantSpec::make(90, 7);
    const BiPoly phi = det_cycle_cover(spec);
    EXPECT_EQ(eval(phi, 2, -1), oracle::circulant_det_at(90, 7, 1, 2, -1));
}

TEST(FloatCheck, PassAndFail) {
    EXPECT_TRUE(det_float_check(CirculantSpec::make(8, 3), phi83).pass);
    EXPECT_TRUE(det_float_check(CirculantSpec::make(3, 2), det_bareiss(CirculantSpec::make(3, 2))).pass);

    const auto bad = det_float_check(CirculantSpec::make(5, 3), BiPoly());
    EXPECT_FALSE(bad.pass);
    EXPECT_NEAR(bad.max_deviation, 11.0, 1e-6);
    EXPECT_EQ(bad.worst_x, 1.0);  // (1, 1) and (1, -1) both give 11

    EXPECT_FALSE(det_float_check(CirculantSpec::make(8, 3), phi83 + P("x^3*y^3")).pass);
}
