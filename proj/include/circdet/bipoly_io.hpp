#ifndef CIRCDET_BIPOLY_IO_HPP
#define CIRCDET_BIPOLY_IO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "circdet/bipoly.hpp"

namespace circdet {

// Text form: `1 - x^8 - 8*x^5*y - 12*x^2*y^2`. Terms are printed by ascending
// y-degree, then ascending x-degree, which is the order polynomials of this
// family are conventionally displayed in. JSON uses the monomial order.

inline std::string to_string(const BiPoly& a) {
    if (a.is_zero()) return "0";
    std::vector<const Term*> order;
    order.reserve(a.size());
    for (const auto& t : a.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* u, const Term* v) {
        return std::pair{u->m.s, u->m.r} < std::pair{v->m.s, v->m.r};
    });

    std::string out;
    bool first = true;
    for (const Term* t : order) {
        const bool negative = t->c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const BigInt mag = abs(t->c);
        std::string factors;
        auto append_var = [&factors](char var, std::uint32_t e) {
            if (e == 0) return;
            if (!factors.empty()) factors += '*';
            factors += var;
            if (e > 1) factors += '^' + std::to_string(e);
        };
        append_var('x', t->m.r);
        append_var('y', t->m.s);

        if (factors.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += factors;
        } else {
            out += mag.str() + '*' + factors;
        }
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BiPoly parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty input");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
            skip_ws();
        }
        terms.push_back(parse_term(negative));
        skip_ws();
        while (!at_end()) {
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            skip_ws();
            terms.push_back(parse_term(op == '-'));
            skip_ws();
        }
        return BiPoly::from_terms(std::move(terms));
    }

private:
    Term parse_term(bool negative) {
        Term t{{0, 0}, 1};
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.c = BigInt(read_digits());
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
            } else {
                need_factor = false;
            }
        }
        while (need_factor) {
            const char var = at_end() ? '\0' : get();
            if (var != 'x' && var != 'y') fail("expected 'x' or 'y'");
            std::uint32_t e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                get();
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                e = static_cast<std::uint32_t>(std::stoul(read_digits()));
            }
            (var == 'x' ? t.m.r : t.m.s) += e;
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) {
                get();
                skip_ws();
            }
        }
        if (negative) t.c = -t.c;
        return t;
    }

    std::string read_digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        return out;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline BiPoly parse_bipoly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// `{"terms":[{"r":..,"s":..,"c":"<decimal>"}]}` in monomial order.
inline nlohmann::ordered_json to_json(const BiPoly& a) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : a.terms()) {
        nlohmann::ordered_json j;
        j["r"] = t.m.r;
        j["s"] = t.m.s;
        j["c"] = t.c.str();
        terms.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["terms"] = std::move(terms);
    return out;
}

inline BiPoly bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial JSON must be an object with a \"terms\" array");
    std::vector<Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.contains("r") || !t.contains("s") || !t.contains("c") || !t["c"].is_string())
            throw ParseError("polynomial JSON term needs integer r, s and string c");
        try {
            terms.push_back({{t["r"].get<std::uint32_t>(), t["s"].get<std::uint32_t>()},
                             BigInt(t["c"].get<std::string>())});
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad polynomial JSON term: ") + e.what());
        }
    }
    return BiPoly::from_terms(std::move(terms));
}

} // namespace circdet

#endif // CIRCDET_BIPOLY_IO_HPP
