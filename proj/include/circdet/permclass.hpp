#ifndef CIRCDET_PERMCLASS_HPP
#define CIRCDET_PERMCLASS_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circdet/arith.hpp"
#include "circdet/errors.hpp"
#include "circdet/permutation.hpp"

namespace circdet {

// Residues modulo p are taken in {1, ..., p} throughout this header.

struct DisplacementProfile {
    std::uint32_t r = 0;     ///< points with sigma(j) - j = 1 (mod p)
    std::uint32_t s = 0;     ///< points with sigma(j) - j = q (mod p)
    std::uint32_t fixed = 0;

    friend bool operator==(const DisplacementProfile&, const DisplacementProfile&) = default;
};

/// Counts of 1-steps, q-steps and fixed points, or nullopt if some
/// displacement lies outside {0, 1, q}.
inline std::optional<DisplacementProfile> displacement_profile(const Permutation& sigma, std::uint32_t q) {
    const std::uint32_t p = sigma.size();
    DisplacementProfile out;
    for (std::uint32_t j = 1; j <= p; ++j) {
        const std::uint32_t d = (sigma(j) + p - j) % p;
        if (d == 0)
            ++out.fixed;
        else if (d == 1)
            ++out.r;
        else if (d == q % p)
            ++out.s;
        else
            return std::nullopt;
    }
    return out;
}

/// Identifies the class T_{p,q}(r,s).
struct PermClassKey {
    std::uint32_t p = 3;
    std::uint32_t q = 2;
    std::uint32_t r = 0;
    std::uint32_t s = 0;

    static PermClassKey make(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        if (p < 3 || p > (1 << 16)) throw InvalidKey("p must lie in [3, 65536]");
        if (q < 2 || q > p - 1) throw InvalidKey("q must satisfy 2 <= q <= p-1");
        if (r < 0 || s < 0) throw InvalidKey("r and s must be nonnegative");
        if (r + s > p) throw InvalidKey("r + s must not exceed p");
        return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r),
                static_cast<std::uint32_t>(s)};
    }

    /// (r + s q) / p when p divides r + s q; nullopt marks an empty class.
    std::optional<std::uint64_t> ell() const noexcept {
        const std::uint64_t total = std::uint64_t{r} + std::uint64_t{s} * q;
        if (total % p != 0) return std::nullopt;
        return total / p;
    }

    bool empty_class() const noexcept { return !ell().has_value(); }

    /// gcd(r, s, l); 0 for the identity class (0, 0).
    std::uint64_t k() const {
        const auto l = ell();
        if (!l) throw EmptyClass(label() + ": p does not divide r + s q");
        return gcd3(r, s, *l);
    }

    std::string label() const {
        return "T(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", r=" + std::to_string(r) +
               ", s=" + std::to_string(s) + ")";
    }

    friend bool operator==(const PermClassKey&, const PermClassKey&) = default;
};

inline constexpr std::uint32_t enumerate_max_p = 10;

/// Every permutation in T_{p,q}(r,s), sorted by one-line notation.
inline std::vector<Permutation> enumerate_class(const PermClassKey& key) {
    const std::uint32_t p = key.p;
    if (p > enumerate_max_p) throw TooLarge("class enumeration supports p <= " + std::to_string(enumerate_max_p));

    std::vector<Permutation> out;
    std::vector<std::uint32_t> images(p);
    std::vector<char> used(p + 1, 0);
    const std::uint32_t fixed_target = p - key.r - key.s;
    const std::array<std::uint32_t, 3> steps{0, 1, key.q};

    // Position-by-position choice of displacement, pruned on image collisions
    // and on the remaining budget of each displacement kind.
    auto place = [&](auto&& self, std::uint32_t j, std::uint32_t r_left, std::uint32_t s_left,
                     std::uint32_t f_left) -> void {
        if (j > p) {
            out.emplace_back(images);
            return;
        }
        for (auto d : steps) {
            std::uint32_t* budget = d == 0 ? &f_left : d == 1 ? &r_left : &s_left;
            if (*budget == 0) continue;
            const std::uint32_t image = residue(std::int64_t{j} + d, p);
            if (used[image]) continue;
            used[image] = 1;
            images[j - 1] = image;
            --*budget;
            self(self, j + 1, r_left, s_left, f_left);
            ++*budget;
            used[image] = 0;
        }
    };
    place(place, 1, key.r, key.s, fixed_target);
    std::sort(out.begin(), out.end());
    return out;
}

/// Cycle structure shared by all members of a nonempty class.
struct StructureReport {
    std::uint64_t ell = 0;
    std::uint64_t k = 0;               ///< number of nontrivial cycles
    std::uint32_t ones_per_cycle = 0;  ///< r / k
    std::uint32_t qs_per_cycle = 0;    ///< s / k
    std::uint32_t cycle_length = 0;
    std::uint32_t fixed_points = 0;
    int sign = 1;

    /// Cycle lengths including fixed points, sorted descending.
    std::vector<std::uint32_t> cycle_type() const {
        std::vector<std::uint32_t> out(k, cycle_length);
        out.insert(out.end(), fixed_points, 1u);
        return out;
    }

    friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

inline StructureReport predict_structure(const PermClassKey& key) {
    StructureReport out;
    out.ell = key.ell().value_or(0);
    out.k = key.k();
    out.fixed_points = key.p - key.r - key.s;
    if (out.k == 0) return out;  // identity class
    out.ones_per_cycle = static_cast<std::uint32_t>(key.r / out.k);
    out.qs_per_cycle = static_cast<std::uint32_t>(key.s / out.k);
    out.cycle_length = out.ones_per_cycle + out.qs_per_cycle;
    out.sign = (key.r + key.s + out.k) % 2 == 0 ? 1 : -1;
    return out;
}

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// East/north path from (0,0) to (r,s).
struct LatticePath {
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::vector<LatticePoint> vertices;

    /// `E`/`N` step string.
    std::string steps() const {
        std::string out;
        for (std::size_t i = 1; i < vertices.size(); ++i) out += vertices[i].x > vertices[i - 1].x ? 'E' : 'N';
        return out;
    }

    /// Step word over {1, q}: east reads 1, north reads q.
    std::vector<std::uint32_t> word(std::uint32_t q) const {
        std::vector<std::uint32_t> out;
        for (char c : steps()) out.push_back(c == 'E' ? 1u : q);
        return out;
    }
};

/// Goes east while weakly above the line s x = r y, north otherwise. A path
/// with r = 0 can only go north; the rule is not applied there.
inline LatticePath build_path(std::uint32_t r, std::uint32_t s) {
    if (r + s == 0) throw InvalidKey("build_path requires r + s >= 1");
    LatticePath path{r, s, {{0, 0}}};
    path.vertices.reserve(r + s + 1);
    LatticePoint v{0, 0};
    for (std::uint32_t i = 0; i < r + s; ++i) {
        const bool east = v.x < r && std::int64_t{s} * v.x <= std::int64_t{r} * v.y;
        (east ? v.x : v.y) += 1;
        path.vertices.push_back(v);
    }
    return path;
}

/// True iff |a s - b r| <= r + s - 1 for every pair of vertices, with
/// (a, b) the offset between them. Malformed paths return false.
inline bool path_bound_check(const LatticePath& path, std::uint32_t r, std::uint32_t s) {
    const auto& v = path.vertices;
    if (v.size() != std::size_t{r} + s + 1 || v.front() != LatticePoint{0, 0} ||
        v.back() != LatticePoint{r, s})
        return false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const auto dx = v[i].x - v[i - 1].x, dy = v[i].y - v[i - 1].y;
        if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1))) return false;
    }
    const std::int64_t limit = std::int64_t{r} + s - 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const std::int64_t a = v[j].x - v[i].x, b = v[j].y - v[i].y;
            const std::int64_t cross = a * s - b * r;
            if ((cross < 0 ? -cross : cross) > limit) return false;
        }
    return true;
}

/// A cycle written as a start point and the displacements along it.
struct CycleWord {
    std::uint32_t start = 1;
    std::vector<std::uint32_t> word;
};

/// The single cycle encoded by `cw`, identity elsewhere. Throws NotACycle if
/// the walk revisits a point early or does not close up.
inline Permutation cycle_from_word(const CycleWord& cw, std::uint32_t p, std::uint32_t q) {
    if (cw.word.empty()) throw NotACycle("empty cycle word");
    if (cw.start < 1 || cw.start > p) throw NotACycle("start point outside {1..p}");
    std::vector<std::uint32_t> out(p);
    std::iota(out.begin(), out.end(), 1u);
    std::vector<char> visited(p + 1, 0);

    std::uint32_t v = cw.start;
    visited[v] = 1;
    for (std::size_t i = 0; i < cw.word.size(); ++i) {
        const std::uint32_t step = cw.word[i];
        if (step != 1 && step != q) throw NotACycle("cycle word letters must be 1 or q");
        const std::uint32_t next = residue(std::int64_t{v} + step, p);
        const bool last = i + 1 == cw.word.size();
        if (last ? next != cw.start : visited[next] != 0)
            throw NotACycle(last ? "cycle word does not return to its start"
                                 : "cycle word revisits point " + std::to_string(next));
        out[v - 1] = next;
        visited[next] = 1;
        v = next;
    }
    return Permutation(std::move(out));
}

/// Explicit member of a nonempty class: k = gcd(r, s, l) copies of the cycle
/// read off build_path(r/k, s/k), started at 1 + (j-1)(q-1) for j = 1..k.
inline Permutation construct_witness(const PermClassKey& key) {
    const std::uint64_t k = key.k();
    if (k == 0) return Permutation::identity(key.p);

    const auto path = build_path(static_cast<std::uint32_t>(key.r / k), static_cast<std::uint32_t>(key.s / k));
    const auto word = path.word(key.q);
    std::vector<std::uint32_t> images(key.p);
    std::iota(images.begin(), images.end(), 1u);
    for (std::uint64_t j = 1; j <= k; ++j) {
        const std::uint32_t start = residue(1 + static_cast<std::int64_t>((j - 1) * (key.q - 1)), key.p);
        const auto cycle = cycle_from_word({start, word}, key.p, key.q);
        for (std::uint32_t v = 1; v <= key.p; ++v) {
            if (cycle(v) == v) continue;
            if (images[v - 1] != v)
                throw InternalInconsistency(key.label() + ": witness cycles overlap at point " + std::to_string(v));
            images[v - 1] = cycle(v);
        }
    }
    return Permutation(std::move(images));
}

/// True iff (z_1, ..., z_m) is a rotation of a strictly increasing sequence,
/// i.e. a clockwise traversal of the circle meets them in order.
inline bool cyclic_order(std::span<const std::uint32_t> z) {
    const std::size_t m = z.size();
    std::size_t descents = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto a = z[i], b = z[(i + 1) % m];
        if (m > 1 && a == b) return false;
        descents += a > b;
    }
    return m <= 1 || descents == 1;
}

/// For p | a + b q and p | r + s q: s a - r b is 0 or at least p in size.
inline bool lattice_gap_holds(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t s, std::int64_t p) {
    const std::int64_t cross = s * a - r * b;
    return cross == 0 || (cross < 0 ? -cross : cross) >= p;
}

} // namespace circdet

#endif // CIRCDET_PERMCLASS_HPP
