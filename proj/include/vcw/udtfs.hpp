#pragma once

#include <set>
#include <utility>
#include <vector>

#include "vcw/core.hpp"
#include "vcw/independence.hpp"
#include "vcw/type_density.hpp"

namespace vcw {

// One signed instance: member index plus polarity (1 = the set, 0 = its
// complement).
struct SignedInstance {
    std::size_t member = 0;
    bool polarity = true;
};

// Among the signed instances true at the element, pick one whose mask is
// containment-minimal; ties break lexicographically by (member, polarity
// 0 before 1). Entailment between instances over a fixed finite universe
// is exactly mask containment.
inline SignedInstance minimal_instance_selector(const SetFamily& f, std::size_t element) {
    if (f.size() == 0) throw PreconditionError("selector needs a non-empty family");
    if (element >= f.universe.size()) throw PreconditionError("element index out of range");

    std::vector<std::pair<SignedInstance, Bitset>> live;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (int t = 0; t < 2; ++t) {
            Bitset m = signed_mask(f, i, t == 1);
            if (m.test(element)) live.push_back({{i, t == 1}, std::move(m)});
        }
    for (const auto& [inst, mask] : live) {
        bool minimal = true;
        for (const auto& [other, omask] : live)
            if (omask != mask && omask.is_subset_of(mask)) { minimal = false; break; }
        if (minimal) return inst;
    }
    throw std::logic_error("no minimal instance");  // live is never empty
}

// The containment-based membership rule: with selected instance S = psi_i^t,
// predict "element in member j" iff
//   S subset of psi_j,  or  (not S subset of psi_j^0  and  psi_j^0 subset of S).
// The rule never looks at the element itself, only at the selected mask.
inline bool delta_decide(const SetFamily& f, SignedInstance selected, std::size_t target) {
    const Bitset sel = signed_mask(f, selected.member, selected.polarity);
    const Bitset& pos = f.mask(target);
    const Bitset neg = pos.flipped();
    if (sel.is_subset_of(pos)) return true;
    return !sel.is_subset_of(neg) && neg.is_subset_of(sel);
}

// Rebuild the element's full membership row from its selected minimal
// instance alone. For families of independence dimension <= 1 the result
// equals the actual trace row; that exactness is the point of the scheme.
inline Bitset reconstruct_type(const SetFamily& f, std::size_t element) {
    const SignedInstance sel = minimal_instance_selector(f, element);
    Bitset row(f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        if (delta_decide(f, sel, j)) row.set(j);
    return row;
}

struct Rank1Report {
    bool certified = false;
    std::size_t elements_checked = 0;
    bool exact = false;
    std::size_t scheme_size = 0;  // distinct (member, polarity) selectors used
};

// Certify ID <= 1, then reconstruct every element's type and compare with
// the trace table. certified implies exact; anything else is a bug.
inline Rank1Report rank1_report(const SetFamily& f) {
    Rank1Report rep;
    if (certify_id_at_most_one(f)) return rep;  // crossing pair: not certified
    rep.certified = true;
    rep.exact = true;
    if (f.size() == 0) {  // zero-width rows reconstruct vacuously
        rep.elements_checked = f.universe.size();
        return rep;
    }
    const TraceTable actual = trace_table(f);
    std::set<std::pair<std::size_t, bool>> selectors;
    for (std::size_t e = 0; e < f.universe.size(); ++e) {
        const SignedInstance sel = minimal_instance_selector(f, e);
        selectors.insert({sel.member, sel.polarity});
        Bitset row(f.size());
        for (std::size_t j = 0; j < f.size(); ++j)
            if (delta_decide(f, sel, j)) row.set(j);
        ++rep.elements_checked;
        if (!(row == actual.rows[e])) rep.exact = false;
    }
    rep.scheme_size = selectors.size();
    return rep;
}

} // namespace vcw
