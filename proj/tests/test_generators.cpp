#include <catch2/catch_amalgamated.hpp>

#include "biregular/feasibility.hpp"
#include "biregular/generators.hpp"
#include "biregular/regularity.hpp"

using namespace biregular;

TEST_CASE("biplane incidence graph") {
    auto gg = biplane_graph();
    const Graph& g = gg.graph;
    CHECK(g.vertexCount() == 22);
    for (int p = 0; p < 8; ++p) CHECK(g.degree(p) == 7);
    for (int b = 8; b < 22; ++b) CHECK(g.degree(b) == 4);
    CHECK(gg.declaredY == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    // every pair of points lies in exactly three common blocks
    for (int p = 0; p < 8; ++p)
        for (int q = p + 1; q < 8; ++q) {
            int common = 0;
            for (int b = 8; b < 22; ++b)
                if (g.adjacent(p, b) && g.adjacent(q, b)) ++common;
            CHECK(common == 3);
        }
}

TEST_CASE("grid incidence graphs") {
    SECTION("classified arrays") {
        auto c = classify(grid_incidence_graph(2).graph);
        auto& d = std::get<DistanceBiregular>(c);
        CHECK(d.arrayY == parse_array("2,2,1,2;1,1,1,2"));
        // the line-class tail entry b_3 is pinned to 1 by the degree split
        // c_3 + b_3 = 2 and by the dual of the point array
        CHECK(d.arrayYprime == parse_array("3,1,2,1;1,1,1,3"));
        CHECK(d.arrayYprime == dual_array(d.arrayY));
        CHECK(d.arrayYprime.c(3) + d.arrayYprime.b(3) == 2);
    }
    SECTION("the grid is the subdivision of a complete bipartite graph") {
        for (int n = 2; n <= 3; ++n) {
            auto grid = classify(grid_incidence_graph(n).graph);
            auto sub = classify(subdivision(complete_bipartite_graph(n + 1, n + 1)).graph);
            auto& a = std::get<DistanceBiregular>(grid);
            auto& b = std::get<DistanceBiregular>(sub);
            // the grid's line class plays the original-vertex role
            CHECK(a.arrayYprime == b.arrayY);
            CHECK(a.arrayY == b.arrayYprime);
        }
    }
    SECTION("girth 8 and diameter 4") {
        for (int n = 2; n <= 5; ++n) {
            auto gg = grid_incidence_graph(n);
            CHECK(girth(gg.graph) == 8);
            CHECK(gg.graph.diameter() == 4);
        }
    }
}

TEST_CASE("cycles and complete bipartite") {
    auto c = classify(cycle_graph(6).graph);
    CHECK(std::get<DistanceRegular>(c).array == parse_array("2,1,1;1,1,2"));
    auto gg = cycle_graph(6);
    CHECK(gg.declaredY == std::vector<int>{0, 2, 4});
}

TEST_CASE("subdivision") {
    SECTION("Petersen") {
        auto gg = subdivision(petersen_graph());
        CHECK(gg.graph.vertexCount() == 25);
        CHECK(gg.graph.edgeCount() == 30);
        CHECK(gg.declaredY.size() == 10);
        auto d = std::get<DistanceBiregular>(classify(gg.graph));
        CHECK(d.arrayY == parse_array("3,1,2,1,2;1,1,1,1,2"));
        CHECK(d.arrayYprime == parse_array("2,2,1,2,1,1;1,1,1,1,2,2"));
    }
    SECTION("K4") {
        auto gg = subdivision(complete_graph(4));
        auto d = std::get<DistanceBiregular>(classify(gg.graph));
        CHECK(d.arrayY == parse_array("3,1,2;1,1,2"));
    }
    SECTION("C4 becomes C8") {
        auto gg = subdivision(cycle_graph(4));
        CHECK(gg.graph.vertexCount() == 8);
        CHECK(girth(gg.graph) == 8);
        CHECK(std::get<DistanceRegular>(classify(gg.graph)).array ==
              parse_array("2,1,1,1;1,1,1,2"));
    }
    SECTION("doubles the girth, always bipartite") {
        for (const auto& base : {petersen_graph(), complete_graph(4), heawood_graph()}) {
            auto sub = subdivision(base);
            CHECK(*girth(sub.graph) == 2 * *girth(base.graph));
            CHECK_NOTHROW(bipartition(sub.graph));
        }
    }
    SECTION("original ids survive, edge vertices follow sorted edge order") {
        Graph g = build_graph(3, {{0, 2}, {0, 1}});
        auto sub = subdivision(g);
        // sorted edges: (0,1) -> vertex 3, (0,2) -> vertex 4
        CHECK(sub.graph.adjacent(0, 3));
        CHECK(sub.graph.adjacent(1, 3));
        CHECK(sub.graph.adjacent(0, 4));
        CHECK(sub.graph.adjacent(2, 4));
    }
}

TEST_CASE("incidence graph edge cases") {
    SECTION("Fano plane gives the Heawood graph") {
        auto gg = heawood_graph();
        CHECK(gg.graph.vertexCount() == 14);
        for (int v = 0; v < 14; ++v) CHECK(gg.graph.degree(v) == 3);
        CHECK(girth(gg.graph) == 6);
        CHECK(gg.graph.diameter() == 3);
    }
    SECTION("one block over all points is a star") {
        auto gg = incidence_graph(3, {{0, 1, 2}});
        auto d = std::get<DistanceBiregular>(classify(gg.graph));
        CHECK(d.arrayY == parse_array("1,2;1,1"));
        CHECK(d.arrayYprime == parse_array("3;1"));
    }
    SECTION("bad blocks") {
        CHECK_THROWS_AS(incidence_graph(3, {{}}), std::invalid_argument);
        CHECK_THROWS_AS(incidence_graph(3, {{0, 3}}), std::invalid_argument);
    }
}

TEST_CASE("subdivided cages match the closed-form arrays") {
    struct Case {
        GeneratedGraph g;
        int kappa, d;
        bool odd;
    };
    for (auto& [gg, kappa, d, odd] :
         {Case{petersen_graph(), 3, 2, true}, Case{heawood_graph(), 3, 3, false},
          Case{complete_graph(4), 3, 1, true}, Case{complete_bipartite_graph(3, 3), 3, 2, false},
          Case{cycle_graph(5), 2, 2, true}}) {
        auto sub = subdivision(gg);
        auto [ax, ar] = cage_subdivision_arrays(kappa, d, odd);
        INFO(gg.provenance);
        auto cls = classify(sub.graph);
        if (kappa == 2) {
            CHECK(std::get<DistanceRegular>(cls).array == ax);
        } else {
            auto& dbr = std::get<DistanceBiregular>(cls);
            CHECK(dbr.arrayY == ax);
            CHECK(dbr.arrayYprime == ar);
        }
    }
}

TEST_CASE("generator dispatch") {
    CHECK(generate("petersen").graph.vertexCount() == 10);
    CHECK(generate("cycle", {6}).graph.vertexCount() == 6);
    CHECK(generate("complete_bipartite", {2, 3}).graph.vertexCount() == 5);
    CHECK(generate("grid_gq", {2}).graph.vertexCount() == 15);
    CHECK_THROWS_AS(generate("nope"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {}), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {2}), std::invalid_argument);
}
