#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "circdet/bipoly_io.hpp"
#include "cli_run.hpp"
#include "oracles.hpp"

using clirun::golden;
using clirun::run;

TEST(Cli, GoldenPolynomials) {
    EXPECT_EQ(run("phi --p 8 --q 3").out, golden("phi_8_3.txt"));
    EXPECT_EQ(run("phi --p 5 --q 3").out, golden("phi_5_3.txt"));
    const auto json = run("phi --p 5 --q 3 --format json");
    EXPECT_EQ(json.status, 0);
    EXPECT_EQ(json.out, golden("phi_5_3.json"));
    EXPECT_EQ(nlohmann::json::parse(json.out)["terms"].size(), 5u);
}

TEST(Cli, Deterministic) {
    for (const char* args : {"phi --p 13 --q 5 --format json", "growth --q 3 --pmax 12",
                             "verify --suite lemmas --cases 3000 --format json"})
        EXPECT_EQ(run(args).out, run(args).out) << args;
    EXPECT_EQ(run("verify --suite witness --pmax 14 --workers 1 --format json").out,
              run("verify --suite witness --pmax 14 --workers 3 --format json").out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("phi --p 8 --q 3").status, 0);
    EXPECT_EQ(run("phi --p 6 --q 3 --t 3").status, 3);
    EXPECT_EQ(run("phi --p 6 --q 3 --t 2").status, 3);
    EXPECT_EQ(run("phi --p 2 --q 1").status, 2);
    EXPECT_EQ(run("phi --p 5 --q 5").status, 2);
    EXPECT_EQ(run("phi --p 5 --q 3 --bogus").status, 2);
    EXPECT_EQ(run("phi --q 3").status, 2);
    EXPECT_EQ(run("nosuchcommand").status, 2);
    EXPECT_EQ(run("phi --p 5 --q 3 --backend nope").status, 2);
    EXPECT_EQ(run("phi --p 12 --q 3 --backend bruteforce").status, 3);
    EXPECT_EQ(run("witness --p 5 --q 3 --r 1 --s 1").status, 3);
    EXPECT_EQ(run("coeff --p 5 --q 3 --r -1 --s 1").status, 2);
    EXPECT_EQ(run("enumerate --p 12 --q 3 --r 0 --s 0").status, 3);
    EXPECT_EQ(run("verify --suite nope").status, 2);
    EXPECT_EQ(run("verify --suite cycle --pmax 11").status, 3);
    EXPECT_EQ(run("verify --suite support --pmax 9").status, 0);
    EXPECT_EQ(run("verify --suite sign --pmax 9").status, 0);
    EXPECT_EQ(run("verify --suite prime --pmax 40").status, 0);
}

TEST(Cli, ThetaSwapsBack) {
    // (8, 3, 2) reduces with the bands exchanged.
    const auto r = run("phi --p 8 --q 3 --t 2");
    ASSERT_EQ(r.status, 0);
    const auto phi = circdet::parse_bipoly(r.out);
    for (int x0 = -2; x0 <= 2; ++x0)
        for (int y0 = -2; y0 <= 2; ++y0)
            EXPECT_EQ(eval(phi, x0, y0), oracle::circulant_det_at(8, 3, 2, x0, y0));
}

TEST(Cli, Coefficient) {
    const auto j = nlohmann::json::parse(run("coeff --p 8 --q 3 --r 4 --s 4 --format json").out);
    EXPECT_EQ(j["value"], "2");
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["sign"], 1);
}

TEST(Cli, BenchFormat) {
    const auto two = run("bench --backends bareiss,cycle_cover --p 20,30 --q 3");
    EXPECT_EQ(two.status, 0);
    std::istringstream lines(two.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "backend,p,q,status,seconds,check");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_NE(line.find(",OK,"), std::string::npos) << line;
        EXPECT_TRUE(line.ends_with(",agree")) << line;
    }
    EXPECT_EQ(rows, 4);

    const auto skip = run("bench --backends bruteforce --p 12 --q 3");
    EXPECT_NE(skip.out.find("bruteforce,12,3,SKIPPED"), std::string::npos);

    const auto ryser = run("bench --backends ryser --p 16 --q 5");
    EXPECT_EQ(std::count(ryser.out.begin(), ryser.out.end(), '\n'), 2);
    EXPECT_NE(ryser.out.find("ryser,16,5,OK"), std::string::npos);

    EXPECT_EQ(run("bench --backends nope --p 5 --q 3").status, 2);
}

TEST(Cli, GrowthCsv) {
    const auto r = run("growth --q 3 --pmax 8");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.starts_with("p,q,M,d11,n_monomials,root\n"));
    EXPECT_NE(r.out.find("\n5,3,5,13,5,1.3797\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n8,3,12,33,7,"), std::string::npos);
}
