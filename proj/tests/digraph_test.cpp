#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "dibc/digraph.hpp"
#include "dibc/enumerate.hpp"
#include "dibc/generate.hpp"
#include "dibc/io.hpp"

using namespace dibc;

namespace {

Digraph c3() { return directed_cycle(3); }

/// Exhaustive independent-set oracle over all subsets, n small.
int beta_oracle(const Digraph& d) {
    const int n = d.order();
    int best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && d.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

/// Brute-force 2-colorability of the underlying undirected graph.
bool bipartite_oracle(const Digraph& d) {
    const int n = d.order();
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : d.arcs())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("build validates input") {
    const Digraph d = c3();
    REQUIRE(d.order() == 3);
    REQUIRE(d.arc_count() == 3);
    REQUIRE(d.has_arc(0, 1));
    REQUIRE_FALSE(d.has_arc(1, 0));

    REQUIRE_NOTHROW(Digraph::build(2, {{0, 1}, {1, 0}}));  // digon is fine
    REQUIRE_THROWS_WITH(Digraph::build(1, {{0, 0}}), Catch::Matchers::ContainsSubstring("loop at vertex 0"));
    REQUIRE_THROWS_AS(Digraph::build(2, {{0, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Digraph::build(0, {}), std::invalid_argument);
    // duplicate arcs collapse
    REQUIRE(Digraph::build(2, {{0, 1}, {0, 1}}).arc_count() == 1);
}

TEST_CASE("adjacency mirrors the arc set") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Digraph d = random_digraph(1 + rng.below(8), rng.next());
        int out_total = 0, in_total = 0;
        for (int v = 0; v < d.order(); ++v) {
            out_total += d.out_degree(v);
            in_total += d.in_degree(v);
            for (int u : d.out(v)) REQUIRE(d.has_arc(v, u));
            for (int u : d.in(v)) REQUIRE(d.has_arc(u, v));
        }
        REQUIRE(out_total == d.arc_count());
        REQUIRE(in_total == d.arc_count());
    }
}

TEST_CASE("bipartition detection and canonical sides") {
    REQUIRE_FALSE(bipartition_of(c3()).has_value());

    const auto digon = bipartition_of(Digraph::build(2, {{0, 1}, {1, 0}}));
    REQUIRE(digon);
    REQUIRE(digon->a == std::vector<int>{0});
    REQUIRE(digon->b == std::vector<int>{1});

    const auto k22 = bipartition_of(one_directional_knm(2, 2));
    REQUIRE(k22);
    REQUIRE(k22->a == std::vector<int>{0, 1});
    REQUIRE(k22->b == std::vector<int>{2, 3});

    // disconnected: each component's smallest vertex goes to side A
    const Digraph two = disjoint_union(Digraph::build(2, {{0, 1}}), Digraph::build(2, {{0, 1}}));
    const auto bp = bipartition_of(two);
    REQUIRE(bp);
    REQUIRE(bp->a == std::vector<int>{0, 2});
    REQUIRE(bp->b == std::vector<int>{1, 3});
}

TEST_CASE("bipartition agrees with the 2-coloring oracle") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_all(n, [&](const Digraph& d) {
            REQUIRE(bipartition_of(d).has_value() == bipartite_oracle(d));
        });
    }
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Digraph d = random_digraph(5 + rng.below(2), rng.next());
        REQUIRE(bipartition_of(d).has_value() == bipartite_oracle(d));
    }
}

TEST_CASE("cycle detection inside vertex sets") {
    const Digraph d = c3();
    REQUIRE(has_cycle_within(d, {0, 1, 2}));
    REQUIRE_FALSE(has_cycle_within(d, {1, 2}));
    REQUIRE(has_cycle_within(Digraph::build(2, {{0, 1}, {1, 0}}), {0, 1}));  // digon is a 2-cycle

    for (int n = 2; n <= 6; ++n) {
        REQUIRE(is_acyclic(transitive_tournament(n)));
        REQUIRE_FALSE(is_acyclic(directed_cycle(n)));
    }
}

TEST_CASE("independence number matches the subset oracle") {
    REQUIRE(independence_number(c3()).value == 1);
    REQUIRE(independence_number(complete_symmetric_bipartite(2, 2)).value == 2);
    Rng rng(3);
    for (int i = 0; i < 10; ++i)
        REQUIRE(independence_number(random_orientation_knm(3, 5, rng.next())).value == 5);

    for (int n = 1; n <= 4; ++n) {
        enumerate_all(n, [&](const Digraph& d) {
            const IndependenceResult r = independence_number(d);
            REQUIRE(r.value == beta_oracle(d));
            // witness is actually independent
            for (size_t i = 0; i < r.witness.size(); ++i)
                for (size_t j = i + 1; j < r.witness.size(); ++j)
                    REQUIRE_FALSE(d.adjacent(r.witness[i], r.witness[j]));
        });
    }
}

TEST_CASE("enumeration counts") {
    uint64_t c1 = 0, c2 = 0, c3n = 0;
    enumerate_all(1, [&](const Digraph&) { ++c1; });
    enumerate_all(2, [&](const Digraph&) { ++c2; });
    enumerate_all(3, [&](const Digraph&) { ++c3n; });
    REQUIRE(c1 == 1);
    REQUIRE(c2 == 4);
    REQUIRE(c3n == 64);
    REQUIRE(enumeration_size(4) == 4096);
    REQUIRE_THROWS_AS(enumerate_all(5, [](const Digraph&) {}), std::invalid_argument);
    REQUIRE_NOTHROW(enumerate_all(2, [](const Digraph&) {}, 5));

    // all n=2 digraphs are distinct
    std::set<std::vector<Arc>> seen;
    enumerate_all(2, [&](const Digraph& d) { seen.insert(d.arcs()); });
    REQUIRE(seen.size() == 4);
}

TEST_CASE("generators satisfy their family invariants") {
    SECTION("complete symmetric bipartite") {
        const Digraph d = complete_symmetric_bipartite(2, 2);
        REQUIRE(d.arc_count() == 8);
        REQUIRE(degree_summary(d).delta == 2);
    }
    SECTION("circulant 2-regular") {
        REQUIRE_THROWS_AS(circulant_2regular_bipartite(3, 0), std::invalid_argument);
        for (int part = 4; part <= 8; ++part) {
            const Digraph d = circulant_2regular_bipartite(part, 42);
            const DegreeSummary deg = degree_summary(d);
            REQUIRE(deg.delta_plus == 2);
            REQUIRE(deg.delta_minus == 2);
            REQUIRE(d.is_simple());
            REQUIRE(bipartition_of(d).has_value());
        }
    }
    SECTION("orientation of a complete bipartite graph") {
        const Digraph d = random_orientation_knm(3, 5, 7);
        REQUIRE(d.arc_count() == 15);
        REQUIRE(d.is_simple());
        const auto bp = bipartition_of(d);
        REQUIRE(bp);
        REQUIRE(is_orientation_of_complete_bipartite(d, *bp));
    }
    SECTION("determinism") {
        REQUIRE(random_orientation_knm(4, 4, 9) == random_orientation_knm(4, 4, 9));
        REQUIRE_FALSE(random_orientation_knm(4, 4, 9) == random_orientation_knm(4, 4, 10));
        REQUIRE(random_simple_bipartite_min_degree(4, 5, 2, 3) ==
                random_simple_bipartite_min_degree(4, 5, 2, 3));
    }
    SECTION("random bipartite with degree floor") {
        Rng rng(5);
        for (int i = 0; i < 10; ++i) {
            const Digraph d = random_bipartite_min_degree(3, 4, 2, rng.next());
            REQUIRE(degree_summary(d).delta >= 2);
            REQUIRE(bipartition_of(d).has_value());
            const Digraph s = random_simple_bipartite_min_degree(4, 6, 2, rng.next());
            REQUIRE(degree_summary(s).delta >= 2);
            REQUIRE(s.is_simple());
        }
    }
    SECTION("balanced orientation side degrees") {
        const Digraph d = balanced_orientation_knm(2, 8, 1);
        const auto bp = bipartition_of(d);
        REQUIRE(min_side_degree(d, bp->a) == 4);
    }
    SECTION("unsatisfiable parameters are rejected") {
        REQUIRE_THROWS_AS(random_simple_bipartite_min_degree(2, 3, 2, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(generate(GenSpec{"no-such-family"}), std::invalid_argument);
    }
}

TEST_CASE("dgf round trip is bit exact") {
    Rng rng(13);
    for (int i = 0; i < 25; ++i) {
        const Digraph d = random_digraph(1 + rng.below(7), rng.next());
        const std::string text = to_dgf(d);
        std::istringstream is(text);
        const Digraph back = read_dgf(is);
        REQUIRE(back == d);
        REQUIRE(to_dgf(back) == text);
    }
}

TEST_CASE("dgf parser rejects malformed files with line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_dgf(is);
    };
    REQUIRE_THROWS_WITH(parse("a 1 2\n"), Catch::Matchers::ContainsSubstring("line 1"));
    REQUIRE_THROWS_WITH(parse("c nothing\n"), Catch::Matchers::ContainsSubstring("missing"));
    REQUIRE_THROWS_WITH(parse("p dib 2 1\n"), Catch::Matchers::ContainsSubstring("mismatch"));
    REQUIRE_THROWS_WITH(parse("p dib 2 1\na 1 1\n"), Catch::Matchers::ContainsSubstring("loop"));
    REQUIRE_THROWS_WITH(parse("p dib 2 1\na 1 3\n"), Catch::Matchers::ContainsSubstring("out of range"));
    REQUIRE_THROWS_WITH(parse("p dib 2 2\na 1 2\na 1 2\n"),
                        Catch::Matchers::ContainsSubstring("duplicate arc"));
    REQUIRE_THROWS_WITH(parse("p dib 2 0\np dib 2 0\n"),
                        Catch::Matchers::ContainsSubstring("duplicate header"));
    REQUIRE_THROWS_WITH(parse("q dib 2 0\n"), Catch::Matchers::ContainsSubstring("unrecognized"));
    // comments and the round-trip-required sort order are fine
    REQUIRE_NOTHROW(parse("c hello\np dib 3 2\na 1 2\na 2 3\n"));
}

TEST_CASE("coloring file io") {
    std::istringstream is("2 1\n1 2\n3 1\n");
    const Coloring c = read_coloring(is, 3);
    REQUIRE(c.color_of(0) == 2);
    REQUIRE(c.color_of(1) == 1);
    REQUIRE(c.color_of(2) == 1);
    REQUIRE(to_coloring_text(c) == "1 2\n2 1\n3 1\n");

    auto parse = [](const std::string& text, int n) {
        std::istringstream s(text);
        return read_coloring(s, n);
    };
    REQUIRE_THROWS_WITH(parse("1 1\n1 2\n", 2), Catch::Matchers::ContainsSubstring("twice"));
    REQUIRE_THROWS_WITH(parse("1 1\n", 2), Catch::Matchers::ContainsSubstring("no color"));
    REQUIRE_THROWS_WITH(parse("1 1\n2 3\n", 2), Catch::Matchers::ContainsSubstring("unused"));
    REQUIRE_THROWS_WITH(parse("1 0\n2 1\n", 2), Catch::Matchers::ContainsSubstring("1-based"));
}

TEST_CASE("weak components and unions") {
    const Digraph d = disjoint_union(c3(), Digraph::build(2, {{0, 1}}));
    const auto comps = weak_components(d);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0] == std::vector<int>{0, 1, 2});
    REQUIRE(comps[1] == std::vector<int>{3, 4});
    REQUIRE_FALSE(is_weakly_connected(d));
    REQUIRE(is_weakly_connected(c3()));
}
