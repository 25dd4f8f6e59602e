#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "biregular/feasibility.hpp"
#include "biregular/generators.hpp"
#include "biregular/graph.hpp"
#include "biregular/regularity.hpp"
#include "biregular/scalars.hpp"

namespace biregular {

struct SearchBudget {
    long long maxNodes = 10'000'000;
    double maxSeconds = 60.0;
    int maxVertices = 64;
};

struct SearchStats {
    long long nodes = 0;
    double seconds = 0.0;
};

struct Found {
    GeneratedGraph graph;
    SearchStats stats;
};
struct ExhaustedNoGraph {
    SearchStats stats;
};
struct SearchTimeout {
    SearchStats stats;
};
struct InfeasibleArrays {
    FeasibilityReport report;
};

using SearchOutcome = std::variant<Found, ExhaustedNoGraph, SearchTimeout, InfeasibleArrays>;

namespace detail {

/// Depth-first construction of a graph realizing an array pair. Only the
/// root's distance partition is enforced while extending: layer i holds
/// exactly k_i vertices, each with c_i edges into layer i-1 and b_i into
/// layer i+1, plus an upper bound on the common-neighbor count of every
/// same-class pair. Full distance-regularity is only checked at leaves;
/// that keeps the search sound without incremental all-pairs upkeep.
///
/// Untouched vertices of a layer are interchangeable, so they may only
/// be connected smallest-id first; touched vertices therefore always
/// form a prefix of their layer.
class LayeredSearch {
public:
    LayeredSearch(const IntersectionArray& aY, const IntersectionArray& aP, SearchBudget budget)
        : aY_(aY), aP_(aP), budget_(budget) {
        std::vector<Int> k = layer_sizes(aY);
        D_ = aY.diameter();
        Int total = 0;
        for (int i = 0; i <= D_; ++i) total += k[i];
        if (total > budget.maxVertices)
            throw std::invalid_argument("array pair needs " + total.str() +
                                        " vertices, above the configured maximum of " +
                                        std::to_string(budget.maxVertices));
        offset_.assign(1, 0);
        for (int i = 0; i <= D_; ++i) offset_.push_back(offset_.back() + static_cast<int>(k[i]));
        n_ = offset_.back();
        upDeg_.assign(n_, 0);
        adj_.assign(n_, {});
        common_.assign(static_cast<size_t>(n_) * n_, 0);
        evenBound_ = D_ >= 2 ? aY.c(2) : 1;
        oddBound_ = aP.diameter() >= 2 ? aP.c(2) : 1;
    }

    SearchOutcome run() {
        start_ = std::chrono::steady_clock::now();
        bool found = false;
        try {
            found = extend(0);
        } catch (const BudgetExceeded&) {
            return SearchTimeout{stats()};
        }
        if (!found) return ExhaustedNoGraph{stats()};
        Graph g = build_graph(n_, edges_);
        verify(g);  // never trust the search state
        std::vector<int> evens;
        for (int i = 0; i <= D_; i += 2)
            for (int v = offset_[i]; v < offset_[i + 1]; ++v) evens.push_back(v);
        return Found{
            GeneratedGraph{std::move(g), std::move(evens), "constructed" + aY_.str() + aP_.str()},
            stats()};
    }

private:
    int layerOf(int v) const {
        int i = 0;
        while (offset_[i + 1] <= v) ++i;
        return i;
    }

    SearchStats stats() const {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return SearchStats{nodes_, secs};
    }

    void tick() {
        ++nodes_;
        if (nodes_ > budget_.maxNodes) throw BudgetExceeded("node budget exhausted");
        if ((nodes_ & 1023) == 0) {
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (secs > budget_.maxSeconds) throw BudgetExceeded("time budget exhausted");
        }
    }

    int pairBound(int layer) const { return layer % 2 == 0 ? evenBound_ : oddBound_; }

    int& common(int a, int b) { return common_[static_cast<size_t>(a) * n_ + b]; }

    // Inserts edge u-w (u one layer above w); rejects it when some
    // same-class pair would exceed its closing count.
    bool addEdge(int u, int w) {
        for (int t : adj_[w]) ++common(u, t), ++common(t, u);
        for (int s : adj_[u]) ++common(w, s), ++common(s, w);
        bool ok = true;
        for (int t : adj_[w])
            if (common(u, t) > pairBound(layerOf(u))) ok = false;
        for (int s : adj_[u])
            if (common(w, s) > pairBound(layerOf(w))) ok = false;
        if (!ok) {
            for (int t : adj_[w]) --common(u, t), --common(t, u);
            for (int s : adj_[u]) --common(w, s), --common(s, w);
            return false;
        }
        adj_[u].push_back(w);
        adj_[w].push_back(u);
        ++upDeg_[w];
        edges_.push_back({u, w});
        return true;
    }

    void removeEdge(int u, int w) {
        adj_[u].pop_back();
        adj_[w].pop_back();
        --upDeg_[w];
        edges_.pop_back();
        for (int t : adj_[w]) --common(u, t), --common(t, u);
        for (int s : adj_[u]) --common(w, s), --common(s, w);
    }

    // Chooses the full down-neighborhood of vertex u; vertices are
    // processed in id order, so every earlier vertex is already wired.
    bool extend(int u) {
        if (u == offset_[D_]) return leaf();
        int layer = layerOf(u);
        return chooseFrom(u, layer + 1, offset_[layer + 1], aY_.b(layer));
    }

    bool chooseFrom(int u, int targetLayer, int from, int need) {
        if (need == 0) {
            tick();
            if (!quotaReachable(u, targetLayer)) return false;
            return extend(u + 1);
        }
        int end = offset_[targetLayer + 1];
        int cap = aY_.c(targetLayer);
        for (int v = from; v < end; ++v) {
            if (end - v < need) break;
            if (upDeg_[v] >= cap) continue;
            bool fresh = upDeg_[v] == 0;
            if (addEdge(u, v)) {
                if (chooseFrom(u, targetLayer, v + 1, need - 1)) return true;
                removeEdge(u, v);
            }
            // Skipping the first untouched vertex closes the layer: any
            // later candidate is untouched too and picking it instead
            // would be isomorphic.
            if (fresh) break;
        }
        return false;
    }

    // Every still-open slot in the next layer must be fillable by the
    // vertices of u's layer that have not been processed yet.
    bool quotaReachable(int u, int targetLayer) const {
        int remaining = offset_[layerOf(u) + 1] - (u + 1);
        int cap = aY_.c(targetLayer);
        for (int v = offset_[targetLayer]; v < offset_[targetLayer + 1]; ++v)
            if (cap - upDeg_[v] > remaining) return false;
        return true;
    }

    bool matches(const Classification& cls) const {
        if (aY_ == aP_) {
            auto* dr = std::get_if<DistanceRegular>(&cls);
            return dr && dr->array == aY_;
        }
        auto* dbr = std::get_if<DistanceBiregular>(&cls);
        return dbr && dbr->arrayY == aY_ && dbr->arrayYprime == aP_;
    }

    bool leaf() {
        tick();
        Graph g = build_graph(n_, edges_);
        return matches(classify(g));
    }

    void verify(const Graph& g) const {
        if (!matches(classify(g)))
            throw TheoremViolation("constructed graph fails re-classification");
    }

    IntersectionArray aY_, aP_;
    SearchBudget budget_;
    int D_ = 0, n_ = 0;
    std::vector<int> offset_;
    std::vector<int> upDeg_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> common_;
    int evenBound_ = 1, oddBound_ = 1;
    long long nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Attempts to build a graph realizing the pair by layered backtracking.
/// Deterministic for fixed inputs and budget; an infeasible pair short-
/// circuits before any search starts.
inline SearchOutcome construct_from_arrays(const IntersectionArray& aY,
                                           const IntersectionArray& aP,
                                           SearchBudget budget = {}) {
    FeasibilityReport rep = validate_pair(aY, aP);
    if (!rep.feasible) return InfeasibleArrays{std::move(rep)};
    detail::LayeredSearch search(aY, aP, budget);
    return search.run();
}

}  // namespace biregular
