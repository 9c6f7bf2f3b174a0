#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "vcw/core.hpp"

namespace vcw {

// A subfamily is independent when all 2^k sign patterns over it have a
// non-empty cell. Equivalently: the subfamily is shattered by the points.
inline bool is_independent(const SetFamily& f, const std::vector<std::size_t>& subset) {
    std::vector<bool> seen(f.size(), false);
    for (std::size_t i : subset) {
        if (i >= f.size()) throw PreconditionError("member index out of range");
        if (seen[i]) throw PreconditionError("duplicate member index");
        seen[i] = true;
    }
    const std::size_t n = f.universe.size();
    // 2^k pairwise-disjoint non-empty cells need 2^k <= |X|
    if (subset.size() >= 64 || (std::uint64_t{1} << subset.size()) > n) return false;

    auto rec = [&](auto&& self, std::size_t j, const Bitset& acc) -> bool {
        if (acc.none()) return false;
        if (j == subset.size()) return true;
        const Bitset& m = f.mask(subset[j]);
        return self(self, j + 1, acc.minus(m)) && self(self, j + 1, acc & m);
    };
    return rec(rec, 0, f.universe.full_mask());
}

struct IdResult {
    std::size_t dimension = 0;
    std::vector<std::size_t> witness;  // lexicographically least of maximum size
    bool capped = false;               // true when the level search stopped at the cap
};

namespace detail {

inline std::vector<std::size_t> bits_of(std::uint64_t key) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; key; ++i, key >>= 1)
        if (key & 1) v.push_back(i);
    return v;
}

} // namespace detail

// Level-wise search over subfamilies, in lexicographic index order per
// level. Downward closure prunes: a size-k+1 candidate is tested only if
// all its size-k subsets were independent. Exact when dimension < cap.
inline IdResult independence_dimension(const SetFamily& f, std::size_t cap = 8) {
    if (f.size() > 64)
        throw CapError("independence search supports at most 64 members");
    IdResult res;
    if (f.size() == 0) return res;  // N = 0, exact
    if (cap == 0) {                 // nothing searched, nothing certified
        res.capped = true;
        return res;
    }

    // level 1
    std::vector<std::uint64_t> level;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (is_independent(f, {i})) level.push_back(std::uint64_t{1} << i);
    std::size_t depth = level.empty() ? 0 : 1;
    if (!level.empty()) res.witness = detail::bits_of(level.front());

    std::size_t evaluated = level.size();
    while (depth < cap && !level.empty()) {
        std::unordered_set<std::uint64_t> prev(level.begin(), level.end());
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : level) {
            const std::size_t top = 63 - static_cast<std::size_t>(std::countl_zero(s));
            for (std::size_t j = top + 1; j < f.size(); ++j) {
                const std::uint64_t t = s | (std::uint64_t{1} << j);
                bool all_sub = true;
                for (std::uint64_t rm = s; rm; rm &= rm - 1) {
                    if (!prev.count(t & ~(rm & (~rm + 1)))) { all_sub = false; break; }
                }
                if (!all_sub) continue;
                if (++evaluated > 5'000'000)
                    throw CapError("independence search exceeded the node budget");
                if (is_independent(f, detail::bits_of(t))) next.push_back(t);
            }
        }
        if (next.empty()) break;
        level = std::move(next);
        ++depth;
        res.witness = detail::bits_of(level.front());
    }
    res.dimension = depth;
    res.capped = (depth == cap && cap < f.size());
    return res;
}

// Certificate that two members are independent: all four sign patterns
// over the pair are realized.
struct CrossingWitness {
    std::size_t member_a = 0;
    std::size_t member_b = 0;
    struct Pattern {
        bool sign_a;
        bool sign_b;
        std::size_t witness_element;  // some element of the realized cell
    };
    std::vector<Pattern> patterns;  // in sign order (0,0),(0,1),(1,0),(1,1)
};

// ID <= 1 holds iff for every pair at least one of the four cells
// A^t & B^s is empty; the first offending pair (lexicographically) is
// returned otherwise.
inline std::optional<CrossingWitness> certify_id_at_most_one(const SetFamily& f) {
    for (std::size_t a = 0; a < f.size(); ++a) {
        const Bitset& ma = f.mask(a);
        const Bitset ca = ma.flipped();
        for (std::size_t b = a + 1; b < f.size(); ++b) {
            const Bitset& mb = f.mask(b);
            const Bitset cb = mb.flipped();
            const Bitset cells[4] = {ca & cb, ca & mb, ma & cb, ma & mb};
            bool crossing = true;
            for (const Bitset& c : cells)
                if (c.none()) { crossing = false; break; }
            if (!crossing) continue;
            CrossingWitness w;
            w.member_a = a;
            w.member_b = b;
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb)
                    w.patterns.push_back({sa == 1, sb == 1,
                                          cells[2 * sa + sb].find_first()});
            return w;
        }
    }
    return std::nullopt;
}

// Rows c_1..c_n and columns b_1..b_n with c_i in b_j exactly when i < j.
struct LadderResult {
    std::size_t length = 0;
    std::vector<std::size_t> row_elements;
    std::vector<std::size_t> col_members;
};

// Branch and bound for the longest ladder of length <= cap. Extensions are
// tried in (member, element) index order, and the first witness reaching a
// new best depth is kept, so results are reproducible.
inline LadderResult ladder_index(const SetFamily& f, std::size_t cap = 8) {
    if (cap < 1) throw PreconditionError("ladder cap must be >= 1");
    LadderResult best;
    if (f.size() == 0 || f.universe.size() == 0) return best;

    const std::size_t n = f.universe.size();
    std::vector<std::size_t> rows, cols;
    std::vector<bool> used_member(f.size(), false);
    Bitset used_elem(n);
    Bitset chosen(n);        // elements picked so far; b_{k+1} must contain all
    Bitset union_b(n);       // union of picked columns; c_{k+1} must avoid it

    auto rec = [&](auto&& self) -> void {
        if (rows.size() > best.length) {
            best.length = rows.size();
            best.row_elements = rows;
            best.col_members = cols;
        }
        if (rows.size() == cap) return;
        std::size_t unused_members = 0;
        for (bool u : used_member) unused_members += !u;
        if (rows.size() + unused_members <= best.length) return;

        for (std::size_t b = 0; b < f.size(); ++b) {
            if (used_member[b] || !chosen.is_subset_of(f.mask(b))) continue;
            const Bitset blocked = union_b | f.mask(b) | used_elem;
            for (std::size_t c = 0; c < n; ++c) {
                if (blocked.test(c)) continue;
                used_member[b] = true;
                used_elem.set(c);
                chosen.set(c);
                const Bitset saved = union_b;
                union_b |= f.mask(b);
                rows.push_back(c);
                cols.push_back(b);
                self(self);
                rows.pop_back();
                cols.pop_back();
                union_b = saved;
                chosen.set(c, false);
                used_elem.set(c, false);
                used_member[b] = false;
            }
        }
    };
    rec(rec);
    return best;
}

// Containment quasi-order on instances: b <= c iff mask(b) is a subset of
// mask(c). Equal masks form one class.
struct QuasiOrderReport {
    std::vector<std::vector<std::size_t>> classes;  // member indices, grouped; ordered by least index
    std::vector<std::vector<bool>> leq;             // leq[i][j]: class i's mask subset of class j's
    bool linear = false;                            // queried classes form a containment chain
};

inline QuasiOrderReport instance_quasi_order(
    const SetFamily& f, const std::vector<std::size_t>* sublist = nullptr) {
    QuasiOrderReport rep;
    std::vector<std::size_t> class_of(f.size());
    std::vector<Bitset> rep_masks;
    for (std::size_t i = 0; i < f.size(); ++i) {
        bool placed = false;
        for (std::size_t c = 0; c < rep_masks.size(); ++c) {
            if (rep_masks[c] == f.mask(i)) {
                rep.classes[c].push_back(i);
                class_of[i] = c;
                placed = true;
                break;
            }
        }
        if (!placed) {
            class_of[i] = rep_masks.size();
            rep_masks.push_back(f.mask(i));
            rep.classes.push_back({i});
        }
    }
    const std::size_t k = rep_masks.size();
    rep.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            rep.leq[i][j] = rep_masks[i].is_subset_of(rep_masks[j]);

    std::vector<bool> queried(k, false);
    if (sublist) {
        for (std::size_t i : *sublist) {
            if (i >= f.size()) throw PreconditionError("member index out of range");
            queried[class_of[i]] = true;
        }
    } else {
        queried.assign(k, true);
    }
    rep.linear = true;
    for (std::size_t i = 0; i < k && rep.linear; ++i)
        for (std::size_t j = i + 1; j < k && rep.linear; ++j)
            if (queried[i] && queried[j] && !rep.leq[i][j] && !rep.leq[j][i])
                rep.linear = false;
    return rep;
}

} // namespace vcw
