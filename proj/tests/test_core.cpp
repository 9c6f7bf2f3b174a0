#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "vcw/core.hpp"
#include "vcw/json_io.hpp"

#include "oracles.hpp"

using namespace vcw;

namespace {

SetFamily chain_family() {
    // A = {1,2}, B = {2,3} on X = {1,2,3,4}
    return parse_family(R"({"universe":["1","2","3","4"],"sets":{"A":["1","2"],"B":["2","3"]}})");
}

SignAssignment signs_of(std::initializer_list<int> bits) {
    SignAssignment s{Bitset(bits.size())};
    std::size_t j = 0;
    for (int b : bits) s.signs.set(j++, b != 0);
    return s;
}

} // namespace

TEST_CASE("parse_family transcribes the document", "[core]") {
    const auto f = parse_family(R"({"universe":["a","b"],"sets":{"A":["a"]}})");
    REQUIRE(f.size() == 1);
    REQUIRE(f.name(0) == "A");
    REQUIRE(f.mask(0).to_string() == "10");

    const auto empty = parse_family(R"({"universe":[],"sets":{}})");
    REQUIRE(empty.universe.size() == 0);
    REQUIRE(empty.size() == 0);
}

TEST_CASE("parse_family rejects bad documents", "[core]") {
    REQUIRE_THROWS_AS(parse_family(R"({"universe":["a"],"sets":{"A":["a"],"A":["a"]}})"),
                      ParseError);
    REQUIRE_THROWS_WITH(parse_family(R"({"universe":["a"],"sets":{"A":["a"],"A":["a"]}})"),
                        Catch::Matchers::ContainsSubstring("\"A\""));
    REQUIRE_THROWS_AS(parse_family(R"({"universe":["a","a"],"sets":{}})"), ParseError);
    REQUIRE_THROWS_AS(parse_family(R"({"universe":["a"],"sets":{"A":["zz"]}})"), ParseError);
    REQUIRE_THROWS_WITH(parse_family(R"({"universe":["a"],"sets":{"A":["zz"]}})"),
                        Catch::Matchers::ContainsSubstring("zz"));
    REQUIRE_THROWS_AS(parse_family("{"), ParseError);
    REQUIRE_THROWS_AS(parse_family(R"(["not","an","object"])"), ParseError);
}

TEST_CASE("parse_family enforces the caps", "[core]") {
    Limits tiny;
    tiny.max_elements = 2;
    REQUIRE_THROWS_AS(parse_family(R"({"universe":["a","b","c"],"sets":{}})", tiny), CapError);
    Limits one_member;
    one_member.max_members = 1;
    REQUIRE_THROWS_AS(
        parse_family(R"({"universe":["a"],"sets":{"A":["a"],"B":[]}})", one_member), CapError);
}

TEST_CASE("family round-trips through JSON", "[core]") {
    const auto f = chain_family();
    const auto again = parse_family(family_to_json(f).dump());
    REQUIRE(again.universe.names() == f.universe.names());
    REQUIRE(again.size() == f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        REQUIRE(again.name(j) == f.name(j));
        REQUIRE(again.mask(j) == f.mask(j));
    }
}

TEST_CASE("cell intersects signed members", "[core]") {
    const auto f = chain_family();
    REQUIRE(cell(f, signs_of({1, 1})).to_string() == "0100");  // {2}

    const auto empty = parse_family(R"({"universe":["1","2"],"sets":{}})");
    REQUIRE(cell(empty, SignAssignment{Bitset(0)}) == empty.universe.full_mask());

    const auto one = parse_family(R"({"universe":["1","2","3"],"sets":{"A":["1","2"]}})");
    REQUIRE(cell(one, signs_of({0})).to_string() == "001");  // {3}

    REQUIRE_THROWS_AS(cell(f, signs_of({1})), PreconditionError);
}

TEST_CASE("realized cells match exhaustive enumeration", "[core]") {
    const auto f = chain_family();
    REQUIRE(realized_cells(f).size() == 4);  // both sets, either side: all four patterns

    const auto all = parse_family(R"({"universe":["1","2"],"sets":{"A":["1","2"]}})");
    const auto cells = realized_cells(all);
    REQUIRE(cells.size() == 1);
    REQUIRE(cells[0].positive(0));

    std::mt19937_64 rng(2024);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 1 + rng() % 12;
        const std::size_t k = rng() % 7;
        const auto fam = oracle::random_family(rng, n, k);
        const auto got = realized_cells(fam);
        const auto want = oracle::realized_cells(fam);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < fam.size(); ++j)
                if (got[i].positive(j)) bits |= std::uint64_t{1} << j;
            REQUIRE(bits == want[i]);  // same cells, same lexicographic order
        }
    }
}

TEST_CASE("cells partition the universe", "[core]") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 25; ++round) {
        const std::size_t n = 1 + rng() % 10;
        const std::size_t k = rng() % 6;
        const auto fam = oracle::random_family(rng, n, k);
        Bitset seen(fam.universe.size());
        std::size_t total = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << fam.size()); ++s) {
            const Bitset c = oracle::cell(fam, s);
            REQUIRE_FALSE(c.intersects(seen));
            seen |= c;
            total += c.count();
        }
        REQUIRE(seen == fam.universe.full_mask());
        REQUIRE(total == fam.universe.size());
    }
}

TEST_CASE("realized cell count is bounded by the universe", "[core]") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 1 + rng() % 10;
        const std::size_t k = rng() % 6;
        const auto fam = oracle::random_family(rng, n, k);
        const auto cells = realized_cells(fam);
        REQUIRE(cells.size() <= n);
        std::vector<std::size_t> everyone(fam.size());
        for (std::size_t j = 0; j < fam.size(); ++j) everyone[j] = j;
        const bool full = cells.size() == (std::size_t{1} << fam.size());
        REQUIRE(full == oracle::independent(fam, everyone));
    }
}

TEST_CASE("convex_components counts runs", "[core]") {
    const LinearOrder id4 = LinearOrder::identity(4);
    Bitset m(4);
    m.set(1);
    m.set(2);
    REQUIRE(convex_components(id4, m) == 1);  // {2,3} in 1<2<3<4

    Bitset two(4);
    two.set(0);
    two.set(2);
    REQUIRE(convex_components(id4, two) == 2);  // {1,3}

    REQUIRE(convex_components(id4, Bitset(4)) == 0);
}

TEST_CASE("convex_components is reversal invariant", "[core]") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 1 + rng() % 14;
        const auto order = oracle::random_order(rng, n);
        const auto mask = oracle::random_mask(rng, n);
        LinearOrder rev = order;
        std::reverse(rev.permutation.begin(), rev.permutation.end());
        REQUIRE(convex_components(order, mask) == convex_components(rev, mask));

        // complement differs by at most one component
        const auto c = static_cast<long>(convex_components(order, mask));
        const auto cc = static_cast<long>(convex_components(order, mask.flipped()));
        REQUIRE(std::abs(c - cc) <= 1);
    }
}

TEST_CASE("dedupe collapses equal masks", "[core]") {
    const auto f = parse_family(
        R"({"universe":["1","2"],"sets":{"A":["1"],"B":["1"],"C":["2"]}})");
    const auto d = f.deduped();
    REQUIRE(d.size() == 2);
    REQUIRE(d.name(0) == "A");
    REQUIRE(d.name(1) == "C");
}
