#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biregular/graph.hpp"

namespace biregular {

/// A constructed graph together with the vertex set intended as the Y
/// class (e.g. the original vertices under subdivision) and a record of
/// how it was built.
struct GeneratedGraph {
    Graph graph;
    std::vector<int> declaredY;
    std::string provenance;
};

inline GeneratedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    std::vector<int> y;
    if (n % 2 == 0)
        for (int i = 0; i < n; i += 2) y.push_back(i);
    return {build_graph(n, edges), y, "cycle(" + std::to_string(n) + ")"};
}

inline GeneratedGraph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return {build_graph(n, edges), {}, "complete(" + std::to_string(n) + ")"};
}

/// Vertices 0..m-1 form one side, m..m+n-1 the other.
inline GeneratedGraph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite sides must be nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    std::vector<int> y;
    for (int i = 0; i < m; ++i) y.push_back(i);
    return {build_graph(m + n, edges), y,
            "complete_bipartite(" + std::to_string(m) + "," + std::to_string(n) + ")"};
}

/// Outer pentagon 0..4, inner pentagram 5..9.
inline GeneratedGraph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return {build_graph(10, edges), {}, "petersen"};
}

/// Bipartite graph on points 0..p-1 and one vertex per block, joined by
/// containment; declared Y is the point side.
inline GeneratedGraph incidence_graph(int points, const std::vector<std::vector<int>>& blocks,
                                      std::string provenance = "incidence") {
    if (points < 1) throw std::invalid_argument("incidence structure needs points");
    std::vector<std::pair<int, int>> edges;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (int p : blocks[b]) {
            if (p < 0 || p >= points)
                throw std::invalid_argument("block contains out-of-range point");
            edges.push_back({p, points + static_cast<int>(b)});
        }
    }
    std::vector<int> y;
    for (int i = 0; i < points; ++i) y.push_back(i);
    return {build_graph(points + static_cast<int>(blocks.size()), edges), y,
            std::move(provenance)};
}

/// Point-line incidence graph of the Fano plane: lines {i, i+1, i+3}
/// mod 7. This is the Heawood graph (14 vertices, 3-regular, girth 6).
inline GeneratedGraph heawood_graph() {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    auto g = incidence_graph(7, lines, "heawood");
    return g;
}

/// Incidence graph of the 2-(8,4,3) biplane on points {1..8} with the
/// fixed list of 14 blocks (stored 0-based).
inline GeneratedGraph biplane_graph() {
    static const std::vector<std::vector<int>> blocks = {
        {0, 2, 6, 7}, {0, 1, 3, 7}, {1, 2, 4, 7}, {2, 3, 5, 7}, {3, 4, 6, 7},
        {0, 4, 5, 7}, {1, 5, 6, 7}, {0, 1, 2, 5}, {0, 1, 4, 6}, {0, 2, 3, 4},
        {0, 3, 5, 6}, {1, 2, 3, 6}, {1, 3, 4, 5}, {2, 4, 5, 6}};
    return incidence_graph(8, blocks, "biplane_2_8_4_3");
}

/// Incidence graph of the n-grid: points x_{ij} (0 <= i,j <= n) on rows
/// L_0..L_n and columns M_0..M_n. Point x_{ij} has id i*(n+1)+j; line
/// L_k has id P+k and M_k id P+n+1+k where P=(n+1)^2.
inline GeneratedGraph grid_incidence_graph(int n) {
    if (n < 1) throw std::invalid_argument("grid parameter must be at least 1");
    int side = n + 1;
    int points = side * side;
    std::vector<std::vector<int>> lines(2 * side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            lines[i].push_back(i * side + j);        // L_i
            lines[side + j].push_back(i * side + j);  // M_j
        }
    return incidence_graph(points, lines, "grid_gq(" + std::to_string(n) + ")");
}

/// Replaces every edge by a path of length 2. Original vertices keep
/// their ids; edge-vertices are appended in sorted edge order. Declared
/// Y is the original vertex set.
inline GeneratedGraph subdivision(const Graph& g, const std::string& base = "graph") {
    int n = g.vertexCount();
    auto es = g.edges();
    std::vector<std::pair<int, int>> edges;
    for (size_t idx = 0; idx < es.size(); ++idx) {
        int mid = n + static_cast<int>(idx);
        edges.push_back({es[idx].first, mid});
        edges.push_back({mid, es[idx].second});
    }
    std::vector<int> y;
    for (int i = 0; i < n; ++i) y.push_back(i);
    return {build_graph(n + static_cast<int>(es.size()), edges), y, "subdivision(" + base + ")"};
}

inline GeneratedGraph subdivision(const GeneratedGraph& g) {
    return subdivision(g.graph, g.provenance);
}

/// Named generator dispatch used by the CLI. Parameter counts:
/// cycle(n), complete(n), complete_bipartite(m,n), grid_gq(n); the named
/// graphs take none.
inline GeneratedGraph generate(const std::string& name, const std::vector<int>& params = {}) {
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw std::invalid_argument(name + " expects " + std::to_string(count) +
                                        " parameter(s)");
    };
    if (name == "cycle") {
        want(1);
        return cycle_graph(params[0]);
    }
    if (name == "complete") {
        want(1);
        return complete_graph(params[0]);
    }
    if (name == "complete_bipartite") {
        want(2);
        return complete_bipartite_graph(params[0], params[1]);
    }
    if (name == "petersen") {
        want(0);
        return petersen_graph();
    }
    if (name == "heawood") {
        want(0);
        return heawood_graph();
    }
    if (name == "biplane_2_8_4_3") {
        want(0);
        return biplane_graph();
    }
    if (name == "grid_gq") {
        want(1);
        return grid_incidence_graph(params[0]);
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace biregular
