#include <catch_amalgamated.hpp>

#include "dibc/coloring.hpp"
#include "dibc/enumerate.hpp"
#include "dibc/generate.hpp"

using namespace dibc;

namespace {

Digraph c3() { return directed_cycle(3); }

/// Independent acyclicity oracle: reachability closure per class; a class is
/// cyclic iff some member reaches itself through the class.
bool acyclic_coloring_oracle(const Digraph& d, const Coloring& c) {
    const int n = d.order();
    for (int color = 1; color <= c.num_colors(); ++color) {
        std::vector<char> in_class(static_cast<size_t>(n), 0);
        for (int v : c.color_class(color)) in_class[static_cast<size_t>(v)] = 1;
        std::vector<std::vector<char>> reach(static_cast<size_t>(n),
                                             std::vector<char>(static_cast<size_t>(n), 0));
        for (const auto& [u, v] : d.arcs())
            if (in_class[static_cast<size_t>(u)] && in_class[static_cast<size_t>(v)])
                reach[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
                        reach[static_cast<size_t>(k)][static_cast<size_t>(j)])
                        reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        for (int v = 0; v < n; ++v)
            if (in_class[static_cast<size_t>(v)] && reach[static_cast<size_t>(v)][static_cast<size_t>(v)])
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("coloring model enforces its invariants") {
    REQUIRE_THROWS_AS(Coloring::from_assignment({1, 3}), std::invalid_argument);  // color 2 unused
    REQUIRE_THROWS_AS(Coloring::from_assignment({0, 1}), std::invalid_argument);  // colors 1-based
    REQUIRE_THROWS_AS(Coloring::from_assignment({}), std::invalid_argument);
    const Coloring c = Coloring::from_assignment({2, 1, 2});
    REQUIRE(c.num_colors() == 2);
    REQUIRE(c.color_class(2) == std::vector<int>{0, 2});
}

TEST_CASE("acyclic coloring check") {
    const Digraph d = c3();
    REQUIRE_FALSE(is_acyclic_coloring(d, Coloring::from_assignment({1, 1, 1})));
    REQUIRE(is_acyclic_coloring(d, Coloring::from_assignment({1, 2, 2})));
    REQUIRE(is_acyclic_coloring(d, Coloring::from_assignment({1, 2, 3})));
    REQUIRE_THROWS_AS(is_acyclic_coloring(d, Coloring::from_assignment({1, 2})), std::invalid_argument);
}

TEST_CASE("b-plus and b-minus vertices on the directed triangle") {
    const Digraph d = c3();  // 0 -> 1 -> 2 -> 0
    const Coloring c = Coloring::from_assignment({1, 2, 2});
    REQUIRE(b_plus_vertices(d, c, 2) == std::vector<int>{2});   // 2 -> 0 colored 1
    REQUIRE(b_plus_vertices(d, c, 1) == std::vector<int>{0});   // 0 -> 1 colored 2
    REQUIRE(b_minus_vertices(d, c, 2) == std::vector<int>{1});  // 0 -> 1, 0 colored 1
    REQUIRE(b_minus_vertices(d, c, 1) == std::vector<int>{0});  // 2 -> 0, 2 colored 2
    REQUIRE_THROWS_AS(b_plus_vertices(d, c, 3), std::invalid_argument);

    // k = 1 is vacuous: the whole class qualifies on both sides
    const Coloring mono = Coloring::from_assignment({1, 1, 1});
    REQUIRE(b_plus_vertices(d, mono, 1) == std::vector<int>{0, 1, 2});
    REQUIRE(b_minus_vertices(d, mono, 1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("verify aggregates class structure") {
    const Digraph d = c3();
    SECTION("two classes form a b-coloring via a b-pair") {
        const VerificationReport rep = verify(d, Coloring::from_assignment({1, 2, 2}));
        REQUIRE(rep.is_acyclic);
        REQUIRE(rep.is_b_coloring);
        const ClassReport& cls2 = rep.class_report(2);
        REQUIRE(cls2.has_b_pair);
        REQUIRE(cls2.b_pair_witness == std::pair<int, int>{2, 1});
        REQUIRE(cls2.b_vertices.empty());
        const ClassReport& cls1 = rep.class_report(1);
        REQUIRE(cls1.b_vertices == std::vector<int>{0});
    }
    SECTION("three singletons are acyclic but not a b-coloring") {
        const VerificationReport rep = verify(d, Coloring::from_assignment({1, 2, 3}));
        REQUIRE(rep.is_acyclic);
        REQUIRE_FALSE(rep.is_b_coloring);
        REQUIRE(rep.first_bad_class() == 1);
        REQUIRE(rep.class_report(1).b_plus.empty());  // vertex 0 only reaches color 2
    }
    SECTION("one color is vacuously a b-coloring") {
        const Digraph tt4 = transitive_tournament(4);
        REQUIRE(verify(tt4, Coloring::from_assignment({1, 1, 1, 1})).is_b_coloring);
    }
    SECTION("all singletons work iff every vertex sees all other colors both ways") {
        // complete symmetric digraph on 3 vertices: every pair a digon
        const Digraph ks = Digraph::build(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
        REQUIRE(verify(ks, Coloring::from_assignment({1, 2, 3})).is_b_coloring);
        REQUIRE_FALSE(verify(c3(), Coloring::from_assignment({1, 2, 3})).is_b_coloring);
    }
}

TEST_CASE("acyclicity agrees with the closure oracle on every small instance") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_all(n, [&](const Digraph& d) {
            // every surjective assignment with colors 1..max
            int total = 1;
            for (int i = 0; i < n; ++i) total *= n;
            for (int code = 0; code < total; ++code) {
                int x = code;
                std::vector<int> assign(static_cast<size_t>(n));
                std::vector<char> used(static_cast<size_t>(n + 1), 0);
                int distinct = 0, maxc = 0;
                for (int v = 0; v < n; ++v) {
                    assign[static_cast<size_t>(v)] = 1 + x % n;
                    x /= n;
                    if (!used[static_cast<size_t>(assign[static_cast<size_t>(v)])]) {
                        used[static_cast<size_t>(assign[static_cast<size_t>(v)])] = 1;
                        ++distinct;
                    }
                    maxc = std::max(maxc, assign[static_cast<size_t>(v)]);
                }
                if (distinct != maxc) continue;
                const Coloring c = Coloring::from_assignment(assign);
                REQUIRE(is_acyclic_coloring(d, c) == acyclic_coloring_oracle(d, c));
            }
        });
    }
}

TEST_CASE("class color spread over a bipartition") {
    const Digraph d = one_directional_knm(2, 2);
    const Bipartition bp = *bipartition_of(d);
    REQUIRE(class_color_spread(d, bp, Coloring::from_assignment({1, 2, 1, 2})) ==
            std::pair<int, int>{2, 2});
    REQUIRE(class_color_spread(d, bp, Coloring::from_assignment({1, 1, 2, 2})) ==
            std::pair<int, int>{1, 1});
}
