#ifndef CIRCDET_PERMUTATION_HPP
#define CIRCDET_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "circdet/errors.hpp"

namespace circdet {

/// Permutation of {1, ..., p}, stored as its one-line image array.
class Permutation {
public:
    using value_type = std::uint32_t;

    static Permutation identity(std::uint32_t p) {
        std::vector<value_type> images(p);
        std::iota(images.begin(), images.end(), value_type{1});
        return Permutation(std::move(images));
    }

    /// images[j-1] = sigma(j). Throws InvalidPermutation unless a bijection.
    explicit Permutation(std::vector<value_type> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (auto v : images_) {
            if (v < 1 || v > images_.size() || seen[v])
                throw InvalidPermutation("image array is not a bijection on {1..p}");
            seen[v] = true;
        }
    }

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(images_.size()); }

    /// sigma(j) for 1-based j.
    value_type operator()(value_type j) const { return images_.at(j - 1); }

    std::span<const value_type> images() const noexcept { return images_; }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<value_type>> cycles() const {
        std::vector<std::vector<value_type>> out;
        std::vector<bool> seen(images_.size() + 1, false);
        for (value_type start = 1; start <= size(); ++start) {
            if (seen[start] || (*this)(start) == start) continue;
            std::vector<value_type> cycle;
            for (value_type v = start; !seen[v]; v = (*this)(v)) {
                seen[v] = true;
                cycle.push_back(v);
            }
            out.push_back(std::move(cycle));
        }
        return out;
    }

    std::uint32_t fixed_points() const noexcept {
        std::uint32_t n = 0;
        for (value_type j = 1; j <= size(); ++j) n += images_[j - 1] == j;
        return n;
    }

    /// Cycle lengths including fixed points, sorted descending.
    std::vector<std::uint32_t> cycle_type() const {
        std::vector<std::uint32_t> out;
        for (const auto& c : cycles()) out.push_back(static_cast<std::uint32_t>(c.size()));
        out.insert(out.end(), fixed_points(), 1u);
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    /// (-1)^(p - number of cycles, fixed points included).
    int sign() const {
        const auto total = cycles().size() + fixed_points();
        return (size() - total) % 2 == 0 ? 1 : -1;
    }

    /// `{a1,a2,...,ap}`
    std::string one_line() const {
        std::string out = "{";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(images_[i]);
        }
        return out + "}";
    }

    /// `(c1,c2,...)(...)`; the identity renders as `()`.
    std::string cycle_notation() const {
        const auto cs = cycles();
        if (cs.empty()) return "()";
        std::string out;
        for (const auto& c : cs) {
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(c[i]);
            }
            out += ')';
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    std::vector<value_type> images_;
};

} // namespace circdet

#endif // CIRCDET_PERMUTATION_HPP
