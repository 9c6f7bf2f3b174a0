#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vcw/bitset.hpp"

namespace vcw {

// Input failed to parse or violated a structural invariant (duplicate
// names, unknown elements, ...). CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (e.g. order synthesis on a
// family that is not ID<=1). CLI exit code 3.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds the configured size caps. CLI exit code 4.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural size caps. Downstream searches are exponential in the member
// count, so the defaults are deliberately small.
struct Limits {
    std::size_t max_elements = 4096;
    std::size_t max_members = 64;
};

// Finite ground set with named elements; index order is input order.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            auto [it, fresh] = index_.emplace(names_[i], i);
            if (!fresh) throw ParseError("duplicate element name \"" + names_[i] + "\"");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw ParseError("unknown element name \"" + name + "\"");
        return it->second;
    }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    Bitset empty_mask() const { return Bitset(size()); }
    Bitset full_mask() const { return Bitset(size(), true); }

    bool operator==(const Universe& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Member {
    std::string name;
    Bitset mask;
};

// A named list of subsets of one universe. Duplicate masks are allowed
// (instances of distinct formulas may coincide); duplicate names are not.
struct SetFamily {
    Universe universe;
    std::vector<Member> members;

    std::size_t size() const { return members.size(); }
    const Bitset& mask(std::size_t i) const { return members[i].mask; }
    const std::string& name(std::size_t i) const { return members[i].name; }

    std::size_t member_index(const std::string& name) const {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i].name == name) return i;
        throw ParseError("unknown set name \"" + name + "\"");
    }

    void check_limits(const Limits& lim) const {
        if (universe.size() > lim.max_elements)
            throw CapError("universe has " + std::to_string(universe.size()) +
                           " elements, cap is " + std::to_string(lim.max_elements));
        if (members.size() > lim.max_members)
            throw CapError("family has " + std::to_string(members.size()) +
                           " members, cap is " + std::to_string(lim.max_members));
    }

    void check_member_names() const {
        std::unordered_set<std::string> seen;
        for (const auto& m : members)
            if (!seen.insert(m.name).second)
                throw ParseError("duplicate member name \"" + m.name + "\"");
    }

    // collapse duplicate masks, keeping the first-named occurrence
    SetFamily deduped() const {
        SetFamily out{universe, {}};
        for (const auto& m : members) {
            bool seen = false;
            for (const auto& kept : out.members)
                if (kept.mask == m.mask) { seen = true; break; }
            if (!seen) out.members.push_back(m);
        }
        return out;
    }
};

// One sign per member; bit j = 1 means member j taken positively.
struct SignAssignment {
    Bitset signs;

    explicit SignAssignment(std::size_t family_size) : signs(family_size) {}
    explicit SignAssignment(Bitset s) : signs(std::move(s)) {}

    std::size_t size() const { return signs.size(); }
    bool positive(std::size_t j) const { return signs.test(j); }

    bool operator==(const SignAssignment&) const = default;
    bool operator<(const SignAssignment& o) const { return signs < o.signs; }
};

inline Bitset signed_mask(const SetFamily& f, std::size_t member, bool polarity) {
    return polarity ? f.mask(member) : f.mask(member).flipped();
}

// Venn cell: the intersection over all members of member^sign. The empty
// family's cell is the whole universe.
inline Bitset cell(const SetFamily& f, const SignAssignment& s) {
    if (s.size() != f.size())
        throw PreconditionError("sign assignment length " + std::to_string(s.size()) +
                                " does not match family size " + std::to_string(f.size()));
    Bitset acc = f.universe.full_mask();
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (s.positive(j)) acc &= f.mask(j);
        else acc = acc.minus(f.mask(j));
        if (acc.none()) break;
    }
    return acc;
}

// All sign assignments with a non-empty cell, in lexicographic order by
// sign string (member 0 most significant, 0 before 1). The DFS prunes on
// an empty partial intersection, so the cost is O(|X| * |F|) word ops
// rather than 2^|F|.
inline std::vector<SignAssignment> realized_cells(const SetFamily& f) {
    std::vector<SignAssignment> out;
    SignAssignment cur(f.size());
    std::vector<Bitset> stack;
    stack.reserve(f.size() + 1);
    stack.push_back(f.universe.full_mask());

    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (stack.back().none()) return;
        if (j == f.size()) {
            out.push_back(cur);
            return;
        }
        for (int sign = 0; sign < 2; ++sign) {
            cur.signs.set(j, sign == 1);
            stack.push_back(sign ? stack.back() & f.mask(j)
                                 : stack.back().minus(f.mask(j)));
            self(self, j + 1);
            stack.pop_back();
        }
        cur.signs.set(j, false);
    };
    rec(rec, 0);
    return out;
}

// Rank r holds universe index permutation[r]; rank 0 is the least element.
struct LinearOrder {
    std::vector<std::size_t> permutation;

    std::size_t size() const { return permutation.size(); }

    static LinearOrder identity(std::size_t n) {
        LinearOrder o;
        o.permutation.resize(n);
        for (std::size_t i = 0; i < n; ++i) o.permutation[i] = i;
        return o;
    }

    // rank of each universe index
    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> pos(permutation.size());
        for (std::size_t r = 0; r < permutation.size(); ++r) pos[permutation[r]] = r;
        return pos;
    }

    void validate(std::size_t universe_size) const {
        if (permutation.size() != universe_size)
            throw PreconditionError("order covers " + std::to_string(permutation.size()) +
                                    " elements, universe has " + std::to_string(universe_size));
        std::vector<bool> seen(universe_size, false);
        for (std::size_t idx : permutation) {
            if (idx >= universe_size || seen[idx])
                throw PreconditionError("order is not a permutation of the universe");
            seen[idx] = true;
        }
    }
};

// Number of maximal runs of mask members when the universe is listed in
// order; 0 iff the mask is empty.
inline std::size_t convex_components(const LinearOrder& order, const Bitset& mask) {
    std::size_t runs = 0;
    bool inside = false;
    for (std::size_t r = 0; r < order.permutation.size(); ++r) {
        const bool in = mask.test(order.permutation[r]);
        if (in && !inside) ++runs;
        inside = in;
    }
    return runs;
}

} // namespace vcw
