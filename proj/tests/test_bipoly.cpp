#include <random>

#include <gtest/gtest.h>

#include "circdet/bipoly.hpp"
#include "circdet/bipoly_io.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

BiPoly P(std::string_view s) { return parse_bipoly(s); }

const BiPoly phi53 = P("1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5");

BiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-9, 9), deg(0, 6), count(0, 6);
    std::vector<Term> terms;
    for (int n = count(rng); n > 0; --n)
        terms.push_back({{static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))}, coef(rng)});
    return BiPoly::from_terms(std::move(terms));
}

} // namespace

TEST(BiPoly, Add) {
    EXPECT_EQ(P("x - y") + P("y"), BiPoly::x());
    EXPECT_EQ(phi53 + BiPoly(), phi53);
    EXPECT_EQ(P("1 - x^5") + P("-5*x^2*y"), P("1 - x^5 - 5*x^2*y"));
}

TEST(BiPoly, Mul) {
    EXPECT_EQ(P("1 - x") * P("1 + x"), P("1 - x^2"));
    EXPECT_EQ(P("x + y") * P("x + y"), P("x^2 + 2*x*y + y^2"));
    EXPECT_EQ(P("1 - x - y") * BiPoly::one(), P("1 - x - y"));
    EXPECT_TRUE((phi53 * BiPoly()).is_zero());
}

TEST(BiPoly, ExactDiv) {
    EXPECT_EQ(exact_div(P("x^2 - y^2"), P("x - y")), P("x + y"));
    EXPECT_EQ(exact_div(phi53, BiPoly::one()), phi53);
    EXPECT_EQ(exact_div(P("2*x^2 + 2*x*y"), BiPoly(BigInt(2))), P("x^2 + x*y"));
    EXPECT_THROW(exact_div(P("x^2 + 1"), P("x - 1")), NonExactDivision);
    EXPECT_THROW(exact_div(P("3*x"), BiPoly(BigInt(2))), NonExactDivision);
    EXPECT_THROW(exact_div(BiPoly::x(), BiPoly()), NonExactDivision);
}

TEST(BiPoly, Eval) {
    EXPECT_EQ(eval(phi53, 1, 1), -11);
    EXPECT_EQ(eval(phi53, 0, 0), phi53.constant_term());
    EXPECT_EQ(eval(P("x^2*y"), 2, 3), 12);
}

TEST(BiPoly, ReduceMod) {
    EXPECT_EQ(reduce_mod(phi53, 5), P("1 + 4*x^5 + 4*y^5"));
    EXPECT_TRUE(reduce_mod(P("2*x^3 - 4*y + 6"), 2).is_zero());
    EXPECT_TRUE(reduce_mod(P("3*x"), 3).is_zero());
    EXPECT_THROW(reduce_mod(phi53, 1), InvalidSpec);
}

TEST(BiPoly, Canonical) {
    const BiPoly a = BiPoly::from_terms({{{1, 0}, 2}, {{0, 1}, 3}, {{1, 0}, -2}, {{0, 0}, 0}});
    EXPECT_EQ(a, P("3*y"));
    EXPECT_EQ(a.size(), 1u);
    for (std::size_t i = 1; i < phi53.size(); ++i) EXPECT_LT(phi53.terms()[i - 1].m, phi53.terms()[i].m);
    EXPECT_EQ(phi53.max_r(), 5u);
    EXPECT_EQ(phi53.max_s(), 5u);
    EXPECT_EQ(swap_xy(phi53), P("1 - y^5 - 5*y^2*x - 5*y*x^3 - x^5"));
    EXPECT_EQ(abs_coefficients(phi53), P("1 + x^5 + 5*x^2*y + 5*x*y^3 + y^5"));
    EXPECT_EQ(pow(P("x + y"), 3), P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    EXPECT_EQ(pow(phi53, 0), BiPoly::one());
}

TEST(BiPoly, RenderAndParse) {
    EXPECT_EQ(to_string(phi53), "1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5");
    EXPECT_EQ(to_string(BiPoly()), "0");
    EXPECT_EQ(to_string(P("-x")), "-x");
    EXPECT_EQ(to_string(P("-2 + x*y")), "-2 + x*y");
    EXPECT_THROW(parse_bipoly("1 +"), ParseError);
    EXPECT_THROW(parse_bipoly("x^"), ParseError);
    EXPECT_THROW(parse_bipoly("z"), ParseError);
}

TEST(BiPoly, Json) {
    const auto j = to_json(phi53);
    EXPECT_EQ(j["terms"].size(), 5u);
    EXPECT_EQ(j["terms"][0]["c"], "1");
    EXPECT_EQ(bipoly_from_json(nlohmann::json::parse(j.dump())), phi53);
    EXPECT_THROW(bipoly_from_json(nlohmann::json::parse(R"({"terms":[{"r":1,"s":0,"c":7}]})")), ParseError);
    EXPECT_THROW(bipoly_from_json(nlohmann::json::parse("[]")), ParseError);
}

TEST(BiPolyProperty, RingAxioms) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a - b, a + (-b));
    }
}

TEST(BiPolyProperty, MulMatchesOracle) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const BiPoly a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(oracle::to_sparse(a * b), oracle::mul(oracle::to_sparse(a), oracle::to_sparse(b)));
    }
}

TEST(BiPolyProperty, DivisionUndoesMultiplication) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const BiPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        EXPECT_EQ(exact_div(a * b, b), a);
    }
}

TEST(BiPolyProperty, EvalIsHomomorphism) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pt(-5, 5);
    for (int i = 0; i < 300; ++i) {
        const BiPoly a = random_poly(rng), b = random_poly(rng);
        const BigInt x0 = pt(rng), y0 = pt(rng);
        EXPECT_EQ(eval(a + b, x0, y0), eval(a, x0, y0) + eval(b, x0, y0));
        EXPECT_EQ(eval(a * b, x0, y0), eval(a, x0, y0) * eval(b, x0, y0));
    }
}

TEST(BiPolyProperty, TextAndJsonRoundTrip) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        const BiPoly a = random_poly(rng);
        EXPECT_EQ(parse_bipoly(to_string(a)), a);
        EXPECT_EQ(bipoly_from_json(nlohmann::json::parse(to_json(a).dump())), a);
    }
}

TEST(BiPolyProperty, ReduceModRange) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const BiPoly a = random_poly(rng);
        const BigInt m = 2 + static_cast<int>(rng() % 9);
        const BiPoly red = reduce_mod(a, m);
        for (const auto& t : red.terms()) {
            EXPECT_GT(t.c, 0);
            EXPECT_LT(t.c, m);
        }
        EXPECT_TRUE(reduce_mod(a - red, m).is_zero());
    }
}
