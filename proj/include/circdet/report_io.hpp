#ifndef CIRCDET_REPORT_IO_HPP
#define CIRCDET_REPORT_IO_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circdet/bipoly_io.hpp"
#include "circdet/permanent.hpp"
#include "circdet/permclass.hpp"
#include "circdet/phi.hpp"

namespace circdet {

// Big integers always serialize as decimal strings.

inline nlohmann::ordered_json to_json(const CoefficientReport& c) {
    nlohmann::ordered_json j;
    j["p"] = c.p;
    j["q"] = c.q;
    j["r"] = c.r;
    j["s"] = c.s;
    j["present"] = c.present;
    j["ell"] = c.ell ? nlohmann::ordered_json(*c.ell) : nlohmann::ordered_json(nullptr);
    j["k"] = c.k ? nlohmann::ordered_json(*c.k) : nlohmann::ordered_json(nullptr);
    j["sign"] = c.sign;
    j["magnitude"] = c.magnitude.str();
    j["value"] = c.value.str();
    return j;
}

inline std::string to_text(const CoefficientReport& c) {
    std::string out = "a_{" + std::to_string(c.p) + "," + std::to_string(c.q) + "}(" + std::to_string(c.r) + "," +
                      std::to_string(c.s) + ") = " + c.value.str() + "\n";
    if (!c.present) return out + "absent: p does not divide r + s*q (or r + s > p)\n";
    out += "ell = " + std::to_string(*c.ell) + ", k = gcd(r,s,ell) = " + std::to_string(*c.k) + "\n";
    out += "sign = " + std::string(c.sign > 0 ? "+1" : "-1") + ", magnitude = " + c.magnitude.str() + "\n";
    return out;
}

inline nlohmann::ordered_json to_json(const Permutation& sigma) {
    nlohmann::ordered_json j;
    j["one_line"] = sigma.one_line();
    j["cycles"] = sigma.cycle_notation();
    j["images"] = std::vector<std::uint32_t>(sigma.images().begin(), sigma.images().end());
    j["sign"] = sigma.sign();
    return j;
}

inline nlohmann::ordered_json to_json(const StructureReport& s) {
    nlohmann::ordered_json j;
    j["ell"] = s.ell;
    j["k"] = s.k;
    j["ones_per_cycle"] = s.ones_per_cycle;
    j["qs_per_cycle"] = s.qs_per_cycle;
    j["cycle_length"] = s.cycle_length;
    j["fixed_points"] = s.fixed_points;
    j["sign"] = s.sign;
    return j;
}

inline nlohmann::ordered_json to_json(const PermanentReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["d11"] = r.d11.str();
    j["d11_source"] = r.d11_source;
    j["abs_sum"] = r.abs_sum.str();
    j["max_coeff"] = r.max_coeff.str();
    j["n_monomials"] = r.n_monomials;
    j["lower_bound"] = {{"num", r.lower_num.str()}, {"den", r.lower_den.str()}};
    j["upper_bound"] = r.upper_ceil.str();
    j["no_cancellation"] = r.no_cancellation;
    j["lower_holds"] = r.lower_holds;
    j["upper_holds"] = r.upper_holds;
    j["sandwich_holds"] = r.sandwich_holds;
    return j;
}

inline std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline std::string to_text(const PermanentReport& r) {
    auto flag = [](bool b) { return b ? std::string("holds") : std::string("FAILS"); };
    std::string out;
    out += "p = " + std::to_string(r.p) + ", q = " + std::to_string(r.q) + "\n";
    out += "D(1,1) = " + r.d11.str() + " (" + r.d11_source + ")\n";
    out += "sum |a(r,s)| = " + r.abs_sum.str() + " [" + flag(r.no_cancellation) + "]\n";
    out += "M = " + r.max_coeff.str() + ", N = " + std::to_string(r.n_monomials) + ", D/N <= M <= D [" +
           flag(r.sandwich_holds) + "]\n";
    out += "lower 3^p p!/p^p = " + r.lower_num.str() + "/" + r.lower_den.str() + " ~ " + fixed4(r.lower_bound()) +
           " [" + flag(r.lower_holds) + "]\n";
    out += "upper ceil(6^(p/3)) = " + r.upper_ceil.str() + " [" + flag(r.upper_holds) + "]\n";
    return out;
}

/// `p,q,M,d11,n_monomials,root` with root = M^(1/p) to 4 decimals.
inline std::string growth_csv(const std::vector<GrowthRow>& rows) {
    std::string out = "p,q,M,d11,n_monomials,root\n";
    for (const auto& r : rows)
        out += std::to_string(r.p) + "," + std::to_string(r.q) + "," + r.max_coeff.str() + "," + r.d11.str() + "," +
               std::to_string(r.n_monomials) + "," + fixed4(r.root) + "\n";
    return out;
}

inline nlohmann::ordered_json to_json(const GrowthRow& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["M"] = r.max_coeff.str();
    j["d11"] = r.d11.str();
    j["n_monomials"] = r.n_monomials;
    j["root"] = fixed4(r.root);
    j["sandwich_holds"] = r.sandwich_holds;
    return j;
}

} // namespace circdet

#endif // CIRCDET_REPORT_IO_HPP
