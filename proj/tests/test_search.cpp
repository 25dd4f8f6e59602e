#include <catch2/catch_amalgamated.hpp>

#include "biregular/homogeneity.hpp"
#include "biregular/search.hpp"
#include "fixtures.hpp"

using namespace biregular;

TEST_CASE("construction from arrays") {
    SECTION("complete bipartite from its pair") {
        auto out = construct_from_arrays(parse_array("3,1;1,3"), parse_array("2,2;1,2"));
        auto& f = std::get<Found>(out);
        CHECK(f.graph.graph.vertexCount() == 5);
        auto d = std::get<DistanceBiregular>(classify(f.graph.graph));
        CHECK(d.arrayY == parse_array("3,1;1,3"));
        CHECK(d.arrayYprime == parse_array("2,2;1,2"));
    }
    SECTION("infeasible pair short-circuits") {
        auto out = construct_from_arrays(parse_array("3,2,1;1,2,3"), parse_array("3,2,2;1,1,3"));
        CHECK(std::holds_alternative<InfeasibleArrays>(out));
    }
    SECTION("subdivided Petersen pair is realized") {
        auto out = construct_from_arrays(parse_array("3,1,2,1,2;1,1,1,1,2"),
                                         parse_array("2,2,1,2,1,1;1,1,1,1,2,2"));
        auto& f = std::get<Found>(out);
        CHECK(f.graph.graph.vertexCount() == 25);
        auto d = std::get<DistanceBiregular>(classify(f.graph.graph));
        CHECK(d.arrayY == parse_array("3,1,2,1,2;1,1,1,1,2"));
        CHECK(d.arrayYprime == parse_array("2,2,1,2,1,1;1,1,1,1,2,2"));
    }
    SECTION("deterministic outcome") {
        auto a = construct_from_arrays(parse_array("7,3,4;1,3,4"), parse_array("4,6,2,1;1,2,6,4"));
        auto b = construct_from_arrays(parse_array("7,3,4;1,3,4"), parse_array("4,6,2,1;1,2,6,4"));
        auto& fa = std::get<Found>(a);
        auto& fb = std::get<Found>(b);
        CHECK(fa.graph.graph.edges() == fb.graph.graph.edges());
        CHECK(fa.stats.nodes == fb.stats.nodes);
    }
    SECTION("tiny node budget reports a timeout") {
        SearchBudget tight;
        tight.maxNodes = 5;
        auto out = construct_from_arrays(parse_array("3,1,2,1,2;1,1,1,1,2"),
                                         parse_array("2,2,1,2,1,1;1,1,1,1,2,2"), tight);
        CHECK(std::holds_alternative<SearchTimeout>(out));
    }
    SECTION("vertex guard") {
        SearchBudget small;
        small.maxVertices = 10;
        CHECK_THROWS_AS(construct_from_arrays(parse_array("3,1,2,1,2;1,1,1,1,2"),
                                              parse_array("2,2,1,2,1,1;1,1,1,1,2,2"), small),
                        std::invalid_argument);
    }
}

TEST_CASE("realized enumeration candidates verify homogeneous") {
    // close the loop: enumerate -> construct -> measure
    for (const auto& cand : enumerate_families(3, 4, 4)) {
        if (cand.partial) continue;
        INFO(cand.str());
        REQUIRE(cand.dual.has_value());
        auto out = construct_from_arrays(cand.arrayY, *cand.dual);
        auto* f = std::get_if<Found>(&out);
        if (!f) continue;  // candidate feasibility never promises existence
        Coloring col = bipartition(f->graph.graph);
        auto v = homogeneity_verdict(f->graph.graph, col, Side::Y);
        CHECK(v.twoHomogeneous);
    }
}

TEST_CASE("every small generated pair is recovered") {
    for (const auto& gg : fixtures::bipartite_fixtures()) {
        if (gg.graph.vertexCount() > 30) continue;
        auto cls = classify(gg.graph);
        IntersectionArray aY, aP;
        if (auto* d = std::get_if<DistanceBiregular>(&cls)) {
            aY = d->arrayY;
            aP = d->arrayYprime;
        } else {
            aY = aP = std::get<DistanceRegular>(cls).array;
        }
        INFO(gg.provenance << " " << aY.str());
        auto out = construct_from_arrays(aY, aP);
        auto* f = std::get_if<Found>(&out);
        REQUIRE(f != nullptr);
        CHECK(f->graph.graph.vertexCount() == gg.graph.vertexCount());
    }
}
