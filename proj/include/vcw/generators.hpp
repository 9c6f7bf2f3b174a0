#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcw/core.hpp"

namespace vcw {

// Marsaglia xorshift64* with the published shift triple (12, 25, 27) and
// multiplier 2685821657736338717. Fixed-width arithmetic keeps every output
// identical across platforms; seed 0 (the one forbidden state) is remapped
// to the splitmix increment constant.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ull;
    }

    // uniform-ish in [0, n); modulo bias is irrelevant at desk scale
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

namespace detail {

inline std::vector<std::string> chain_names(std::size_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) names.push_back(std::to_string(i));
    return names;
}

inline std::string tuple_name(const std::vector<std::size_t>& coords) {
    std::string s = "(";
    for (std::size_t d = 0; d < coords.size(); ++d) {
        if (d) s += ',';
        s += std::to_string(coords[d]);
    }
    return s + ")";
}

} // namespace detail

// Chain 1..m with initial segments {x : x < b} per cut point b.
inline SetFamily gen_linear(std::size_t m, const std::vector<std::size_t>& cuts,
                            const Limits& lim = {}) {
    if (m < 1) throw ParseError("chain length must be >= 1");
    SetFamily f;
    f.universe = Universe(detail::chain_names(m));
    for (std::size_t b : cuts) {
        if (b < 1 || b > m)
            throw ParseError("cut point " + std::to_string(b) + " out of range 1.." +
                             std::to_string(m));
        Bitset mask(m);
        for (std::size_t x = 1; x < b; ++x) mask.set(x - 1);
        f.members.push_back({"x<" + std::to_string(b), std::move(mask)});
    }
    f.check_member_names();
    f.check_limits(lim);
    return f;
}

// Grid of side m in n dimensions; each corner carves the strict lower
// orthant {x : x_d < c_d for all d}. Corner coordinates may run to m+1 (a
// threshold above the whole axis); n = 1 degenerates to gen_linear.
inline SetFamily gen_grid(std::size_t n, std::size_t m,
                          const std::vector<std::vector<std::size_t>>& corners,
                          const Limits& lim = {}) {
    if (n < 1 || n > 3) throw ParseError("grid dimension must be 1, 2 or 3");
    if (m < 1) throw ParseError("grid side must be >= 1");
    if (n == 1) {
        std::vector<std::size_t> cuts;
        for (const auto& c : corners) {
            if (c.size() != 1) throw ParseError("corner arity does not match dimension");
            cuts.push_back(c[0]);
        }
        return gen_linear(m, cuts, lim);
    }
    std::size_t total = 1;
    for (std::size_t d = 0; d < n; ++d) {
        total *= m;
        if (total > lim.max_elements)
            throw CapError("grid universe exceeds the element cap");
    }

    // row-major element coordinates, first axis outermost
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> coords;
    names.reserve(total);
    coords.reserve(total);
    std::vector<std::size_t> cur(n, 1);
    for (;;) {
        names.push_back(detail::tuple_name(cur));
        coords.push_back(cur);
        std::size_t d = n;
        while (d > 0) {
            if (cur[d - 1] < m) { ++cur[d - 1]; break; }
            cur[d - 1] = 1;
            --d;
        }
        if (d == 0) break;
    }

    SetFamily f;
    f.universe = Universe(std::move(names));
    for (const auto& c : corners) {
        if (c.size() != n) throw ParseError("corner arity does not match dimension");
        for (std::size_t v : c)
            if (v < 1 || v > m + 1)
                throw ParseError("corner coordinate " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(m + 1));
        Bitset mask(total);
        for (std::size_t e = 0; e < total; ++e) {
            bool in = true;
            for (std::size_t d = 0; d < n && in; ++d) in = coords[e][d] < c[d];
            if (in) mask.set(e);
        }
        f.members.push_back({detail::tuple_name(c), std::move(mask)});
    }
    f.check_member_names();
    f.check_limits(lim);
    return f;
}

// Seeded corners in general position: coordinates in 2..m+1 (every orthant
// non-empty), pairwise dominance-incomparable, with coordinate sums held in
// a window around the antidiagonal. Incomparable scattered corners maximise
// realized type diversity, which is what "generic" buys on a small grid.
// Sampling is sequential, so prefixes of a draw are themselves valid draws.
inline std::vector<std::vector<std::size_t>> grid_corners(std::uint64_t seed, std::size_t n,
                                                          std::size_t m, std::size_t count) {
    if (n < 1 || n > 3) throw ParseError("grid dimension must be 1, 2 or 3");
    if (m < 2) throw ParseError("corner sampling needs side >= 2");
    Xorshift64Star rng(seed);
    std::vector<std::vector<std::size_t>> out;

    if (n == 1) {  // distinct cuts, shuffled
        if (count > m) throw ParseError("cannot draw more distinct cuts than the side");
        std::vector<std::size_t> vals;
        for (std::size_t v = 1; v <= m; ++v) vals.push_back(v);
        rng.shuffle(vals);
        for (std::size_t i = 0; i < count; ++i) out.push_back({vals[i]});
        return out;
    }

    const std::size_t hi = m + 1;
    // sum window constants, tuned for scatter on the antidiagonal
    const std::size_t target = n == 2 ? hi + 3 : 2 * hi;
    const std::size_t width = n == 2 ? 4 : 2;

    auto comparable = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        bool le = true, ge = true;
        for (std::size_t d = 0; d < n; ++d) {
            le = le && a[d] <= b[d];
            ge = ge && a[d] >= b[d];
        }
        return le || ge;
    };

    while (out.size() < count) {
        std::vector<std::size_t> cand(n);
        bool ok = false;
        // pass 1 wants the sum window and incomparability, pass 2 drops the
        // incomparability, pass 3 takes anything (totality)
        for (int pass = 0; pass < 3 && !ok; ++pass) {
            for (int tries = 0; tries < 500 && !ok; ++tries) {
                std::size_t sum = 0;
                for (std::size_t d = 0; d < n; ++d) {
                    cand[d] = 2 + static_cast<std::size_t>(rng.below(hi - 1));
                    sum += cand[d];
                }
                if (pass < 2) {
                    const std::size_t lo_s = target > width ? target - width : 0;
                    if (sum < lo_s || sum > target + width) continue;
                }
                if (pass < 1) {
                    bool clash = false;
                    for (const auto& prev : out)
                        if (comparable(cand, prev)) { clash = true; break; }
                    if (clash) continue;
                }
                bool dup = false;
                for (const auto& prev : out)
                    if (prev == cand) { dup = true; break; }
                if (!dup) ok = true;
            }
        }
        out.push_back(cand);
    }
    return out;
}

// Cycle 1..m; the member for parameters (b, c) collects the x with (x, b, c)
// in cyclic order, i.e. the open arc from c around to b.
inline SetFamily gen_cyclic(std::size_t m,
                            const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                            const Limits& lim = {}) {
    if (m < 3) throw ParseError("cycle needs at least 3 points");
    SetFamily f;
    f.universe = Universe(detail::chain_names(m));
    auto between = [](std::size_t x, std::size_t b, std::size_t c) {
        return (x < b && b < c) || (b < c && c < x) || (c < x && x < b);
    };
    for (const auto& [b, c] : arcs) {
        if (b == c) throw ParseError("degenerate arc: endpoints coincide");
        if (b < 1 || b > m || c < 1 || c > m)
            throw ParseError("arc endpoint out of range 1.." + std::to_string(m));
        Bitset mask(m);
        for (std::size_t x = 1; x <= m; ++x)
            if (between(x, b, c)) mask.set(x - 1);
        f.members.push_back({"R(" + std::to_string(b) + "," + std::to_string(c) + ")",
                             std::move(mask)});
    }
    f.check_member_names();
    f.check_limits(lim);
    return f;
}

enum class PredicateMode { Independent, Nested };

// Independent mode: k predicates realizing all 2^k sign patterns (bit i of
// the element index). Nested mode: a strictly descending chain of k tail
// segments P_0 > P_1 > ... > P_{k-1}; the chain needs only k+1 points.
inline SetFamily gen_predicates(std::size_t k, PredicateMode mode, std::size_t m,
                                const Limits& lim = {}) {
    if (mode == PredicateMode::Independent) {
        if (k >= 63 || m < (std::size_t{1} << k))
            throw ParseError("independent mode needs m >= 2^k");
    } else {
        if (m < k + 1) throw ParseError("nested mode needs m >= k + 1");
    }
    SetFamily f;
    f.universe = Universe(detail::chain_names(m));
    for (std::size_t i = 0; i < k; ++i) {
        Bitset mask(m);
        for (std::size_t e = 0; e < m; ++e) {
            const bool in = mode == PredicateMode::Independent ? ((e >> i) & 1) != 0
                                                               : e + 1 > i + 1;
            if (in) mask.set(e);
        }
        f.members.push_back({"P" + std::to_string(i), std::move(mask)});
    }
    f.check_limits(lim);
    return f;
}

// Random laminar family by recursive interval splitting of a shuffled
// chain, then a random subset of members is complemented. Complementation
// preserves independence dimension, so the output always certifies ID <= 1.
// Member count is at most 2^(depth+1) - 2.
inline SetFamily gen_random_id1(std::size_t m, std::size_t depth, std::size_t flips,
                                std::uint64_t seed, const Limits& lim = {}) {
    if (depth < 1) throw ParseError("split depth must be >= 1");
    Xorshift64Star rng(seed);
    SetFamily f;
    f.universe = Universe(detail::chain_names(m));

    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    rng.shuffle(perm);

    auto block_mask = [&](std::size_t lo, std::size_t hi) {
        Bitset mask(m);
        for (std::size_t r = lo; r < hi; ++r) mask.set(perm[r]);
        return mask;
    };
    auto split = [&](auto&& self, std::size_t lo, std::size_t hi, std::size_t d,
                     bool forced) -> void {
        if (d == 0 || hi - lo < 2) return;
        if (!forced && rng.below(4) == 0) return;  // leave some branches shallow
        const std::size_t cut = lo + 1 + static_cast<std::size_t>(rng.below(hi - lo - 1));
        f.members.push_back({"B" + std::to_string(f.members.size()), block_mask(lo, cut)});
        f.members.push_back({"B" + std::to_string(f.members.size()), block_mask(cut, hi)});
        self(self, lo, cut, d - 1, false);
        self(self, cut, hi, d - 1, false);
    };
    split(split, 0, m, depth, true);

    if (!f.members.empty() && flips > 0) {
        std::vector<std::size_t> idx(f.members.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        rng.shuffle(idx);
        const std::size_t nflip = flips < idx.size() ? flips : idx.size();
        for (std::size_t i = 0; i < nflip; ++i)
            f.members[idx[i]].mask = f.members[idx[i]].mask.flipped();
    }
    f.check_limits(lim);
    return f;
}

// m x m grid; one member per grid point p, holding the points strictly
// below p in both coordinates. The same sets arise from 2-d grid corners;
// this generator names them by the dominating point.
inline SetFamily gen_reduct_order(std::size_t m, const Limits& lim = {}) {
    if (m < 2) throw ParseError("reduct order needs side >= 2");
    std::vector<std::vector<std::size_t>> corners;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j) corners.push_back({i, j});
    return gen_grid(2, m, corners, lim);
}

} // namespace vcw
