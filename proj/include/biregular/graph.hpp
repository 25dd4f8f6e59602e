#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biregular/numeric.hpp"

namespace biregular {

/// Immutable simple undirected graph with sorted adjacency lists and a
/// precomputed all-pairs distance matrix. Vertices are 0..n-1. Intended
/// scale is at most a few thousand vertices, so the dense n*n matrix is
/// fine and keeps every downstream sphere count a table lookup.
class Graph {
public:
    static constexpr int kUnreachable = -1;

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) continue;  // drop duplicate edges
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        computeDistances();
    }

    int vertexCount() const { return n_; }

    int edgeCount() const {
        int twice = 0;
        for (const auto& nb : adj_) twice += static_cast<int>(nb.size());
        return twice / 2;
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Shortest-path distance, or kUnreachable when u and v lie in
    /// different components.
    int dist(int u, int v) const {
        uint16_t d = dist_[static_cast<size_t>(u) * n_ + v];
        return d == kFar ? kUnreachable : d;
    }

    bool connected() const { return connected_; }

    /// Max distance from v to any vertex; requires a connected graph.
    int eccentricity(int v) const {
        int e = 0;
        for (int u = 0; u < n_; ++u) {
            int d = dist(v, u);
            if (d == kUnreachable) throw NotConnectedError();
            e = std::max(e, d);
        }
        return e;
    }

    int diameter() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.push_back({u, v});
        return out;
    }

    /// All vertices at distance exactly i from v.
    std::vector<int> sphere(int v, int i) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (dist(v, u) == i) out.push_back(u);
        return out;
    }

private:
    static constexpr uint16_t kFar = 0xFFFF;

    void computeDistances() {
        dist_.assign(static_cast<size_t>(n_) * n_, kFar);
        std::vector<int> queue(n_);
        for (int s = 0; s < n_; ++s) {
            uint16_t* row = dist_.data() + static_cast<size_t>(s) * n_;
            row[s] = 0;
            int head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail) {
                int u = queue[head++];
                uint16_t du = row[u];
                for (int w : adj_[u]) {
                    if (row[w] == kFar) {
                        row[w] = static_cast<uint16_t>(du + 1);
                        queue[tail++] = w;
                    }
                }
            }
        }
        connected_ = true;
        for (int v = 0; v < n_ && connected_; ++v)
            if (dist_[v] == kFar) connected_ = false;
        if (n_ == 0) connected_ = false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint16_t> dist_;
    bool connected_ = false;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

enum class Side { Y, Yprime };

inline Side other(Side s) { return s == Side::Y ? Side::Yprime : Side::Y; }

inline const char* to_string(Side s) { return s == Side::Y ? "Y" : "Y'"; }

/// The 2-coloring of a connected bipartite graph. By convention the
/// class containing vertex 0 is labeled Y, so reports are deterministic.
/// Valencies are only set when the class is regular.
struct Coloring {
    std::vector<Side> side;
    std::optional<int> valencyY;       // k, if class Y is regular
    std::optional<int> valencyYprime;  // k'
    int eccY = 0;                      // max eccentricity over class Y
    int eccYprime = 0;
    int sizeY = 0;
    int sizeYprime = 0;

    std::vector<int> classVertices(Side s) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(side.size()); ++v)
            if (side[v] == s) out.push_back(v);
        return out;
    }

    /// Same coloring with the Y/Y' labels exchanged.
    Coloring swapped() const {
        Coloring c = *this;
        for (auto& s : c.side) s = other(s);
        std::swap(c.valencyY, c.valencyYprime);
        std::swap(c.eccY, c.eccYprime);
        std::swap(c.sizeY, c.sizeYprime);
        return c;
    }
};

/// Unique 2-coloring of a connected bipartite graph; throws
/// NotConnectedError / NotBipartiteError otherwise.
inline Coloring bipartition(const Graph& g) {
    if (!g.connected()) throw NotConnectedError();
    int n = g.vertexCount();
    Coloring col;
    col.side.assign(n, Side::Y);
    for (int v = 0; v < n; ++v) {
        int d = g.dist(0, v);
        col.side[v] = (d % 2 == 0) ? Side::Y : Side::Yprime;
    }
    // Distances from vertex 0 2-color every graph; the coloring is proper
    // exactly when no edge joins vertices of equal parity.
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (col.side[u] == col.side[v]) throw NotBipartiteError(u);

    bool uniformY = true, uniformP = true;
    int degY = -1, degP = -1;
    for (int v = 0; v < n; ++v) {
        int e = g.eccentricity(v);
        if (col.side[v] == Side::Y) {
            ++col.sizeY;
            col.eccY = std::max(col.eccY, e);
            if (degY < 0) degY = g.degree(v);
            uniformY = uniformY && g.degree(v) == degY;
        } else {
            ++col.sizeYprime;
            col.eccYprime = std::max(col.eccYprime, e);
            if (degP < 0) degP = g.degree(v);
            uniformP = uniformP && g.degree(v) == degP;
        }
    }
    if (uniformY && degY >= 0) col.valencyY = degY;
    if (uniformP && degP >= 0) col.valencyYprime = degP;
    return col;
}

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int n = g.vertexCount();
    int best = -1;
    std::vector<int> depth(n), parent(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int w : g.neighbors(u)) {
                if (w == parent[u]) continue;
                if (depth[w] == -1) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else {
                    // Non-tree edge closes a cycle through the BFS root.
                    int len = depth[u] + depth[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// --- graph text format ----------------------------------------------------
//
// '#'-prefixed comment lines; first non-comment line "n m"; then m lines
// "u v" with 0-based ids. Writers emit edges sorted lexicographically.

inline Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("bad header line: " + line);
        } else {
            int u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
            edges.push_back({u, v});
        }
    }
    if (n < 0) throw std::invalid_argument("empty graph file");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                    ", file has " + std::to_string(edges.size()));
    return build_graph(n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g,
                        const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << "\n";
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    out << g.vertexCount() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
}

}  // namespace biregular
