#pragma once

// Shared graph fixtures for the property and acceptance suites.

#include <vector>

#include "biregular/generators.hpp"

namespace fixtures {

/// Point-line incidence graph of the affine plane of order 3 (the
/// 9-point Steiner triple system): a distance-biregular graph with
/// point array (4,2,3;1,1,3) that is almost but not 2-P-homogeneous.
inline biregular::GeneratedGraph ag23() {
    std::vector<std::vector<int>> lines = {
        {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
        {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
        {0, 4, 8}, {1, 5, 6}, {2, 3, 7},  // slope 1
        {0, 5, 7}, {1, 3, 8}, {2, 4, 6}   // slope 2
    };
    return biregular::incidence_graph(9, lines, "ag23");
}

/// K_{n,n} minus a perfect matching ("crown"); bipartite distance-regular
/// with intersection array (n-1, n-2, 1; 1, n-2, n-1).
inline biregular::GeneratedGraph crown(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.push_back({i, n + j});
    std::vector<int> y;
    for (int i = 0; i < n; ++i) y.push_back(i);
    return {biregular::build_graph(2 * n, edges), y, "crown(" + std::to_string(n) + ")"};
}

/// Point-line incidence graph of the projective plane of order 3: lines
/// are the translates of the perfect difference set {0,1,3,9} mod 13.
inline biregular::GeneratedGraph pg23() {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 13; ++i)
        lines.push_back({i % 13, (i + 1) % 13, (i + 3) % 13, (i + 9) % 13});
    return biregular::incidence_graph(13, lines, "pg23");
}

/// Incidence graph of the 11-point biplane (blocks are translates of the
/// quadratic residues mod 11); distance-regular with two points on two
/// common blocks.
inline biregular::GeneratedGraph paley_biplane() {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < 11; ++i) {
        std::vector<int> b;
        for (int q : {1, 3, 4, 5, 9}) b.push_back((i + q) % 11);
        blocks.push_back(b);
    }
    return biregular::incidence_graph(11, blocks, "paley_biplane");
}

/// Graphs whose classification is distance-biregular or bipartite
/// distance-regular; the workhorse set for the oracle-equivalence and
/// criterion-equivalence suites.
inline std::vector<biregular::GeneratedGraph> bipartite_fixtures() {
    using namespace biregular;
    std::vector<GeneratedGraph> out;
    out.push_back(cycle_graph(6));
    out.push_back(cycle_graph(8));
    out.push_back(complete_bipartite_graph(1, 3));
    out.push_back(complete_bipartite_graph(2, 3));
    out.push_back(complete_bipartite_graph(2, 4));
    out.push_back(complete_bipartite_graph(3, 4));
    out.push_back(complete_bipartite_graph(3, 3));
    out.push_back(heawood_graph());
    out.push_back(biplane_graph());
    out.push_back(grid_incidence_graph(2));
    out.push_back(grid_incidence_graph(3));
    out.push_back(subdivision(petersen_graph()));
    out.push_back(subdivision(heawood_graph()));
    out.push_back(subdivision(complete_graph(4)));
    out.push_back(subdivision(complete_graph(5)));
    out.push_back(subdivision(complete_bipartite_graph(3, 3)));
    out.push_back(subdivision(cycle_graph(5)));
    out.push_back(ag23());
    out.push_back(crown(5));
    out.push_back(pg23());
    out.push_back(paley_biplane());
    return out;
}

}  // namespace fixtures
