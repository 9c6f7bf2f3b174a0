#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vcw/core.hpp"
#include "vcw/independence.hpp"

namespace vcw {

// Two members cross when A&B, A-B and B-A are all non-empty. A family
// with no crossing pair is laminar: any two members are nested or disjoint.
inline std::optional<std::pair<std::size_t, std::size_t>> check_laminar(const SetFamily& f) {
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b) {
            const Bitset& ma = f.mask(a);
            const Bitset& mb = f.mask(b);
            if (ma.intersects(mb) && !ma.is_subset_of(mb) && !mb.is_subset_of(ma))
                return std::make_pair(a, b);
        }
    return std::nullopt;
}

// Per-member convexity verdict under some order: the polarity with the
// fewest components (ties prefer the set itself) and that count.
struct ConvexOrderReport {
    struct Entry {
        std::string name;
        int polarity;
        std::size_t components;
    };
    std::vector<Entry> entries;

    bool all_convex() const {
        for (const auto& e : entries)
            if (e.components > 1) return false;
        return true;
    }
};

inline ConvexOrderReport verify_convex_order(const SetFamily& f, const LinearOrder& order,
                                             bool allow_complement = true) {
    order.validate(f.universe.size());
    ConvexOrderReport rep;
    for (const auto& m : f.members) {
        const std::size_t c1 = convex_components(order, m.mask);
        if (!allow_complement) {
            rep.entries.push_back({m.name, 1, c1});
            continue;
        }
        const std::size_t c0 = convex_components(order, m.mask.flipped());
        if (c1 <= c0) rep.entries.push_back({m.name, 1, c1});
        else rep.entries.push_back({m.name, 0, c0});
    }
    return rep;
}

namespace detail {

struct Block {
    Bitset mask;
    std::size_t origin;  // original member index, for deterministic tie-breaks
};

// Recursive interval layout for a laminar family of blocks inside a ground
// set: pick a containment-maximal block A (least origin on ties), split the
// rest into "inside A" and "disjoint from A", lay out the complement side
// first and A's side second. Every block ends up as one contiguous run.
inline void order_blocks(const Bitset& ground, std::vector<Block> blocks,
                         std::vector<std::size_t>& out) {
    // blocks equal to the ground set occupy the whole range; duplicates
    // collapse to the least origin
    std::vector<Block> live;
    for (auto& b : blocks) {
        if (b.mask.none() || b.mask == ground) continue;
        bool dup = false;
        for (const auto& kept : live)
            if (kept.mask == b.mask) { dup = true; break; }
        if (!dup) live.push_back(std::move(b));
    }
    if (live.empty()) {
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (ground.test(i)) out.push_back(i);
        return;
    }

    std::size_t pick = live.size();
    for (std::size_t i = 0; i < live.size() && pick == live.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < live.size(); ++j)
            if (j != i && live[i].mask.is_subset_of(live[j].mask)) { maximal = false; break; }
        if (maximal) pick = i;
    }
    const Bitset a = live[pick].mask;

    std::vector<Block> inside, outside;
    for (std::size_t i = 0; i < live.size(); ++i) {
        if (i == pick) continue;
        if (live[i].mask.is_subset_of(a)) inside.push_back(std::move(live[i]));
        else if (!live[i].mask.intersects(a)) outside.push_back(std::move(live[i]));
        else throw PreconditionError("blocks are not laminar");  // callers validate first
    }
    order_blocks(ground.minus(a), std::move(outside), out);
    order_blocks(a, std::move(inside), out);
}

// drop members equal to the empty set or the whole universe; they are
// convex under every order
inline std::vector<Block> nontrivial_blocks(const SetFamily& f) {
    std::vector<Block> blocks;
    const Bitset full = f.universe.full_mask();
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.mask(i).any() && f.mask(i) != full)
            blocks.push_back({f.mask(i), i});
    return blocks;
}

} // namespace detail

struct LaminarOrderResult {
    std::optional<LinearOrder> order;
    std::optional<std::pair<std::size_t, std::size_t>> crossing;
};

// Interval layout for a laminar family: under the returned order every
// member is a single run. Crossing input yields the offending pair instead.
inline LaminarOrderResult order_laminar(const SetFamily& f) {
    LaminarOrderResult res;
    if (auto crossing = check_laminar(f)) {
        res.crossing = crossing;
        return res;
    }
    std::vector<std::size_t> perm;
    perm.reserve(f.universe.size());
    detail::order_blocks(f.universe.full_mask(), detail::nontrivial_blocks(f), perm);
    res.order = LinearOrder{std::move(perm)};
    return res;
}

struct Id1OrderResult {
    std::optional<LinearOrder> order;
    ConvexOrderReport report;                 // filled when order synthesis succeeded
    std::optional<CrossingWitness> crossing;  // set when certification failed
};

// Order synthesis for a family of independence dimension <= 1: under the
// returned order every member or its complement is a single run.
//
// Anchor on the least-index nontrivial member A. The pair law gives every
// other member B a signed version B^s inside A^0 or A^1; the two adjusted
// collections are laminar on their ground sets and are laid out with the
// A^0 block before the A^1 block. Fails loudly when certification fails:
// no best-effort order is produced.
inline Id1OrderResult order_id1(const SetFamily& f) {
    Id1OrderResult res;
    if (auto crossing = certify_id_at_most_one(f)) {
        res.crossing = std::move(crossing);
        return res;
    }

    auto blocks = detail::nontrivial_blocks(f);
    std::vector<std::size_t> perm;
    perm.reserve(f.universe.size());
    if (blocks.empty()) {
        res.order = LinearOrder::identity(f.universe.size());
        res.report = verify_convex_order(f, *res.order, true);
        return res;
    }

    const Bitset anchor = blocks.front().mask;
    const Bitset grounds[2] = {anchor.flipped(), anchor};
    std::vector<detail::Block> bucket[2];
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        const Bitset& b = blocks[i].mask;
        const Bitset variants[2] = {b.flipped(), b};
        bool placed = false;
        // scan (t, s) in order (0,0),(0,1),(1,0),(1,1); existence is the pair law
        for (int t = 0; t < 2 && !placed; ++t)
            for (int s = 0; s < 2 && !placed; ++s)
                if (variants[s].is_subset_of(grounds[t])) {
                    bucket[t].push_back({variants[s], blocks[i].origin});
                    placed = true;
                }
        if (!placed)
            throw PreconditionError("pair law violated after certification");  // unreachable
    }
    detail::order_blocks(grounds[0], std::move(bucket[0]), perm);
    detail::order_blocks(grounds[1], std::move(bucket[1]), perm);
    res.order = LinearOrder{std::move(perm)};
    res.report = verify_convex_order(f, *res.order, true);
    return res;
}

// The n-th leftward ray of a set along an order: elements x whose order
// prefix contains fewer than n membership alternations. Equivalently, no
// increasing chain w_0 < ... < w_n = x alternates membership at every step.
// Rays are downward closed and nested in n.
inline Bitset leftward_ray(const LinearOrder& order, const Bitset& mask, std::size_t n) {
    if (n < 1) throw PreconditionError("ray index must be >= 1");
    order.validate(mask.size());
    Bitset out(mask.size());
    std::size_t alternations = 0;
    bool prev = false;
    for (std::size_t r = 0; r < order.permutation.size(); ++r) {
        const bool in = mask.test(order.permutation[r]);
        if (r > 0 && in != prev) ++alternations;
        if (alternations < n) out.set(order.permutation[r]);
        prev = in;
    }
    return out;
}

} // namespace vcw
