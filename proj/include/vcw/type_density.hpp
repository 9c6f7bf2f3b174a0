#pragma once

#include <cmath>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vcw/core.hpp"

namespace vcw {

// Membership signature of every element across the family: row e, bit j set
// iff element e lies in member j. Distinct rows are the realized types.
struct TraceTable {
    std::size_t member_count = 0;
    std::vector<Bitset> rows;  // one per element, width member_count
};

inline TraceTable trace_table(const SetFamily& f) {
    TraceTable t;
    t.member_count = f.size();
    t.rows.reserve(f.universe.size());
    for (std::size_t e = 0; e < f.universe.size(); ++e) {
        Bitset row(f.size());
        for (std::size_t j = 0; j < f.size(); ++j)
            if (f.mask(j).test(e)) row.set(j);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// distinct rows in first-occurrence order
inline std::vector<Bitset> distinct_rows(const TraceTable& t) {
    std::vector<Bitset> out;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& r : t.rows)
        if (seen.insert(r).second) out.push_back(r);
    return out;
}

inline std::size_t type_count(const TraceTable& t) {
    std::unordered_set<Bitset, BitsetHash> seen(t.rows.begin(), t.rows.end());
    return seen.size();
}

inline std::size_t type_count(const SetFamily& f) { return type_count(trace_table(f)); }

struct EndpointCheck {
    bool pass = false;
    std::size_t types = 0;
    std::size_t bound = 0;  // 2K|B| + 1
};

// A member with at most K runs has at most 2K endpoints along the order, so
// |B| members cut the line into at most 2K|B| + 1 pieces and the type count
// cannot exceed that. Failure here indicates a bug, not bad input.
inline EndpointCheck endpoint_bound_check(const SetFamily& f, const LinearOrder& order,
                                          std::size_t K) {
    order.validate(f.universe.size());
    for (const auto& m : f.members) {
        const std::size_t c = convex_components(order, m.mask);
        if (c > K)
            throw PreconditionError("member \"" + m.name + "\" has " + std::to_string(c) +
                                    " components, more than K = " + std::to_string(K));
    }
    EndpointCheck res;
    res.types = type_count(f);
    res.bound = 2 * K * f.size() + 1;
    res.pass = res.types <= res.bound;
    return res;
}

struct DensityEstimate {
    std::vector<std::pair<std::size_t, std::size_t>> points;  // (|B|, type count)
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least squares of log(count) against log(|B|); the slope estimates the
// growth exponent. Needs at least 3 points with strictly increasing |B|
// and positive counts.
inline DensityEstimate density_fit(const std::vector<std::pair<std::size_t, std::size_t>>& points) {
    if (points.size() < 3)
        throw PreconditionError("density fit needs at least 3 points, got " +
                                std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].second < 1) throw PreconditionError("density fit needs counts >= 1");
        if (i > 0 && points[i].first <= points[i - 1].first)
            throw PreconditionError("density fit needs strictly increasing |B|");
    }
    const std::size_t n = points.size();
    std::vector<double> xs(n), ys(n);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log(static_cast<double>(points[i].first));
        ys[i] = std::log(static_cast<double>(points[i].second));
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    DensityEstimate est;
    est.points = points;
    est.slope = sxy / sxx;
    est.intercept = my - est.slope * mx;
    est.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return est;
}

} // namespace vcw
