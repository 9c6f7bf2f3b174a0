#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vcw/convex_order.hpp"
#include "vcw/generators.hpp"
#include "vcw/json_io.hpp"

#include "oracles.hpp"

using namespace vcw;

namespace {

bool every_member_has_a_convex_polarity(const ConvexOrderReport& rep) {
    for (const auto& e : rep.entries)
        if (e.components != 1) return false;
    return true;
}

} // namespace

TEST_CASE("check_laminar flags crossing pairs", "[convex_order]") {
    const auto ok = parse_family(
        R"({"universe":["1","2","3","4"],"sets":{"A":["1","2"],"B":["1"],"C":["3"]}})");
    REQUIRE_FALSE(check_laminar(ok).has_value());

    const auto bad = parse_family(
        R"({"universe":["1","2","3"],"sets":{"A":["1","2"],"B":["2","3"]}})");
    const auto pair = check_laminar(bad);
    REQUIRE(pair.has_value());
    REQUIRE(pair->first == 0);
    REQUIRE(pair->second == 1);

    const auto empty = parse_family(R"({"universe":["1"],"sets":{}})");
    REQUIRE_FALSE(check_laminar(empty).has_value());
}

TEST_CASE("order_laminar makes every member an interval", "[convex_order]") {
    const auto f = parse_family(
        R"({"universe":["1","2","3","4"],"sets":{"A":["1","2"],"B":["1"],"C":["3"]}})");
    const auto res = order_laminar(f);
    REQUIRE(res.order.has_value());
    for (const auto& m : f.members)
        REQUIRE(convex_components(*res.order, m.mask) == 1);

    // single member listed contiguously
    const auto one = parse_family(
        R"({"universe":["1","2","3","4","5"],"sets":{"A":["2","4"]}})");
    const auto r1 = order_laminar(one);
    REQUIRE(convex_components(*r1.order, one.mask(0)) == 1);

    // full binary laminar tree on 8 points: root + halves + quarters
    const auto tree = parse_family(R"({"universe":["1","2","3","4","5","6","7","8"],"sets":{
        "root":["1","2","3","4","5","6","7","8"],
        "L":["1","2","3","4"],"R":["5","6","7","8"],
        "LL":["1","2"],"LR":["3","4"],"RL":["5","6"],"RR":["7","8"]}})");
    const auto rt = order_laminar(tree);
    REQUIRE(rt.order.has_value());
    for (const auto& m : tree.members)
        REQUIRE(convex_components(*rt.order, m.mask) == 1);
}

TEST_CASE("order_laminar rejects crossing input with the pair", "[convex_order]") {
    const auto bad = parse_family(
        R"({"universe":["1","2","3"],"sets":{"A":["1","2"],"B":["2","3"]}})");
    const auto res = order_laminar(bad);
    REQUIRE_FALSE(res.order.has_value());
    REQUIRE(res.crossing.has_value());
    REQUIRE(*res.crossing == std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST_CASE("order_id1 handles the nested pair", "[convex_order]") {
    const auto f = parse_family(
        R"({"universe":["1","2","3","4"],"sets":{"A":["1","2"],"B":["2","3","4"]}})");
    const auto res = order_id1(f);
    REQUIRE(res.order.has_value());
    REQUIRE_FALSE(res.crossing.has_value());
    REQUIRE(every_member_has_a_convex_polarity(res.report));
}

TEST_CASE("order_id1 fails loudly on a crossing family", "[convex_order]") {
    const auto f = parse_family(
        R"({"universe":["1","2","3","4"],"sets":{"A":["1","2"],"B":["2","3"]}})");
    const auto res = order_id1(f);
    REQUIRE_FALSE(res.order.has_value());
    REQUIRE(res.crossing.has_value());
    REQUIRE(res.crossing->patterns.size() == 4);
}

TEST_CASE("order_id1 reduces to order_laminar on laminar input", "[convex_order]") {
    std::mt19937_64 seeds(5);
    for (int round = 0; round < 20; ++round) {
        const auto fam = gen_random_id1(4 + seeds() % 40, 3, 0, seeds());
        const auto res = order_id1(fam);
        REQUIRE(res.order.has_value());
        for (const auto& e : res.report.entries) {
            REQUIRE(e.components == 1);
            REQUIRE(e.polarity == 1);  // no flips: the sets themselves are intervals
        }
    }
}

TEST_CASE("order_id1 on seeded random families", "[convex_order]") {
    std::mt19937_64 seeds(6);
    for (int round = 0; round < 50; ++round) {
        const auto fam = gen_random_id1(4 + seeds() % 60, 3, seeds() % 8, seeds());
        const auto res = order_id1(fam);
        REQUIRE(res.order.has_value());
        REQUIRE(every_member_has_a_convex_polarity(res.report));
    }
}

TEST_CASE("verify_convex_order picks the lighter polarity", "[convex_order]") {
    const auto f = parse_family(
        R"({"universe":["1","2","3","4"],"sets":{"A":["1","2"]}})");
    LinearOrder order{{0, 2, 1, 3}};  // 1,3,2,4
    const auto rep = verify_convex_order(f, order, true);
    REQUIRE(rep.entries[0].polarity == 1);
    REQUIRE(rep.entries[0].components == 2);

    const auto full = parse_family(
        R"({"universe":["1","2"],"sets":{"X":["1","2"]}})");
    const auto rep2 = verify_convex_order(full, LinearOrder::identity(2), false);
    REQUIRE(rep2.entries[0].components == 1);

    LinearOrder bad{{0, 0}};
    REQUIRE_THROWS_AS(verify_convex_order(full, bad, true), PreconditionError);
}

TEST_CASE("convexity survives restriction to a sub-universe", "[convex_order]") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 2 + rng() % 12;
        const auto order = oracle::random_order(rng, n);
        // a convex mask: one contiguous run in the order
        const std::size_t lo = rng() % n;
        const std::size_t hi = lo + rng() % (n - lo);
        Bitset mask(n);
        for (std::size_t r = lo; r <= hi; ++r) mask.set(order.permutation[r]);
        const auto sub = oracle::random_mask(rng, n);

        // induced order on the sub-universe, as a new rank list
        LinearOrder induced;
        for (std::size_t r = 0; r < n; ++r)
            if (sub.test(order.permutation[r])) induced.permutation.push_back(order.permutation[r]);
        Bitset restricted = mask & sub;
        // pad the induced order back to a full permutation for the counter:
        // count runs over the induced sequence only
        std::size_t runs = 0;
        bool inside = false;
        for (std::size_t idx : induced.permutation) {
            const bool in = restricted.test(idx);
            if (in && !inside) ++runs;
            inside = in;
        }
        REQUIRE(runs <= 1);
    }
}

TEST_CASE("leftward_ray worked example", "[convex_order]") {
    // order 1..6, mask {2,3,5}
    const LinearOrder order = LinearOrder::identity(6);
    Bitset mask(6);
    mask.set(1);
    mask.set(2);
    mask.set(4);
    REQUIRE(leftward_ray(order, mask, 1).to_string() == "100000");  // {1}
    REQUIRE(leftward_ray(order, mask, 2).to_string() == "111000");  // {1,2,3}
    REQUIRE(leftward_ray(order, mask, 3).to_string() == "111100");  // {1,2,3,4}
    REQUIRE(leftward_ray(order, mask, 5) == Bitset(6, true));

    REQUIRE(leftward_ray(order, Bitset(6), 1) == Bitset(6, true));
    REQUIRE_THROWS_AS(leftward_ray(order, mask, 0), PreconditionError);
}

TEST_CASE("leftward_ray laws and oracle equivalence", "[convex_order]") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 1 + rng() % 12;
        const auto order = oracle::random_order(rng, n);
        const auto mask = oracle::random_mask(rng, n);
        Bitset prev(n);
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const Bitset ray = leftward_ray(order, mask, k);
            REQUIRE(ray == oracle::leftward_ray(order, mask, k));
            if (k > 1) REQUIRE(prev.is_subset_of(ray));  // nested in n
            // downward closed along the order
            bool seen_gap = false;
            for (std::size_t r = 0; r < n; ++r) {
                const bool in = ray.test(order.permutation[r]);
                if (!in) seen_gap = true;
                REQUIRE_FALSE(in && seen_gap);
            }
            prev = ray;
        }
        REQUIRE(prev == Bitset(n, true));  // past all alternations: everything
    }
}
