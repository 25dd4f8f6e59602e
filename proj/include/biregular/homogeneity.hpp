#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biregular/graph.hpp"
#include "biregular/regularity.hpp"
#include "biregular/scalars.hpp"

namespace biregular {

struct TripleWitness {
    int x = -1, y = -1, z = -1;
    long long count = 0;
};

/// Outcome of measuring one counting level by brute force over all
/// admissible (x, y, z) triples of one color class.
struct GammaProfile {
    enum class Status { Constant, NonConstant, Vacuous };

    int level = 0;
    Status status = Status::Vacuous;
    std::optional<long long> value;  // set when Constant
    std::optional<std::pair<TripleWitness, TripleWitness>> witness;  // set when NonConstant
    long long domainSize = 0;

    bool constantOrVacuous() const { return status != Status::NonConstant; }
};

namespace detail {

struct LevelMeasurement {
    GammaProfile gamma;
    GammaProfile deltaMeasured;  // |Γ_1(z) ∩ Γ_{i-1,i-1}(x,y)| over the same triples
};

inline void fold(GammaProfile& p, int x, int y, int z, long long count) {
    ++p.domainSize;
    if (p.status == GammaProfile::Status::Vacuous) {
        p.status = GammaProfile::Status::Constant;
        p.value = count;
        p.witness = {TripleWitness{x, y, z, count}, TripleWitness{}};
    } else if (p.status == GammaProfile::Status::Constant && *p.value != count) {
        p.status = GammaProfile::Status::NonConstant;
        p.witness->second = TripleWitness{x, y, z, count};
        p.value.reset();
    }
}

inline LevelMeasurement measure_level(const Graph& g, const std::vector<int>& classVerts, int i,
                                      long long& budget) {
    LevelMeasurement m;
    m.gamma.level = i;
    m.deltaMeasured.level = i;
    for (int x : classVerts) {
        for (int y : classVerts) {
            if (g.dist(x, y) != 2) continue;
            for (int z = 0; z < g.vertexCount(); ++z) {
                if (g.dist(x, z) != i || g.dist(y, z) != i) continue;
                if (--budget < 0)
                    throw BudgetExceeded("triple-inspection budget exhausted at level " +
                                         std::to_string(i));
                long long gcount = 0;
                for (int w : g.neighbors(x))
                    if (g.dist(y, w) == 1 && g.dist(z, w) == i - 1) ++gcount;
                long long dcount = 0;
                for (int w : g.neighbors(z))
                    if (g.dist(x, w) == i - 1 && g.dist(y, w) == i - 1) ++dcount;
                fold(m.gamma, x, y, z, gcount);
                fold(m.deltaMeasured, x, y, z, dcount);
            }
        }
    }
    // Clean up witnesses on constant levels; they were only provisional.
    if (m.gamma.status != GammaProfile::Status::NonConstant) m.gamma.witness.reset();
    if (m.deltaMeasured.status != GammaProfile::Status::NonConstant)
        m.deltaMeasured.witness.reset();
    return m;
}

}  // namespace detail

inline constexpr long long kDefaultTripleBudget = 100'000'000;

/// Measures |Γ_{i-1}(z) ∩ Γ_1(x) ∩ Γ_1(y)| over all x in the selected
/// class, y at distance 2 from x and z equidistant i from both, and
/// reports whether the count is independent of the choices.
inline GammaProfile gamma_profile(const Graph& g, const Coloring& col, Side side, int i,
                                  long long budget = kDefaultTripleBudget) {
    if (i < 1) throw std::invalid_argument("level must be positive");
    auto cls = col.classVertices(side);
    return detail::measure_level(g, cls, i, budget).gamma;
}

/// Full homogeneity decision for one color class: direct counting is
/// the ground truth, the scalar criterion is recomputed alongside and
/// any disagreement (within the hypotheses of the criterion) is raised
/// as a TheoremViolation.
struct HomogeneityVerdict {
    Side classChecked = Side::Y;
    bool twoHomogeneous = false;
    bool almostHomogeneous = false;
    std::vector<GammaProfile> gamma;          // levels 1..D-1
    std::vector<GammaProfile> deltaMeasured;  // same levels
    std::map<int, Int> deltaScalars;
    std::optional<bool> criterionConsistent;  // empty when criterion hypotheses fail
    int eccentricity = 0;
    int dualValency = 0;
};

inline HomogeneityVerdict homogeneity_verdict(const Graph& g, const Coloring& col, Side side,
                                              long long budget = kDefaultTripleBudget) {
    Classification cls = classify(g);
    IntersectionArray aY, aP;
    if (auto* dbr = std::get_if<DistanceBiregular>(&cls)) {
        // the classification labels the class of vertex 0 as Y; honor the
        // caller's coloring, which may be the swapped view
        bool sameLabeling = col.side.empty() || col.side[0] == Side::Y;
        bool pickFirst = (side == Side::Y) == sameLabeling;
        aY = pickFirst ? dbr->arrayY : dbr->arrayYprime;
        aP = pickFirst ? dbr->arrayYprime : dbr->arrayY;
    } else if (auto* dr = std::get_if<DistanceRegular>(&cls)) {
        // Bipartite distance-regular graphs carry one array for both sides.
        bipartition(g);
        aY = dr->array;
        aP = dr->array;
    } else {
        throw std::invalid_argument(
            "homogeneity verdict needs a distance-biregular or bipartite distance-regular graph");
    }

    HomogeneityVerdict v;
    v.classChecked = side;
    int D = aY.diameter();
    v.eccentricity = D;
    v.dualValency = aY.dualValency();
    if (D == 0) {  // single vertex: trivially homogeneous
        v.twoHomogeneous = v.almostHomogeneous = true;
        return v;
    }
    auto classVerts = col.classVertices(side);

    bool allUpToDm2 = true, allUpToDm1 = true;
    for (int i = 1; i <= D - 1; ++i) {
        auto m = detail::measure_level(g, classVerts, i, budget);
        if (!m.gamma.constantOrVacuous()) {
            if (i <= D - 2) allUpToDm2 = false;
            allUpToDm1 = false;
        }
        v.gamma.push_back(std::move(m.gamma));
        v.deltaMeasured.push_back(std::move(m.deltaMeasured));
    }
    v.almostHomogeneous = allUpToDm2;
    v.twoHomogeneous = allUpToDm1;

    if (D >= 2) v.deltaScalars = delta_sequence(aY, aP);

    if (v.dualValency >= 3 && D >= 3) {
        bool scalarsVanishAll = true, scalarsVanishAlmost = true;
        for (const auto& [lvl, val] : v.deltaScalars) {
            if (val != 0) {
                scalarsVanishAll = false;
                if (lvl <= D - 2) scalarsVanishAlmost = false;
            }
        }
        if (scalarsVanishAll != v.twoHomogeneous || scalarsVanishAlmost != v.almostHomogeneous)
            throw TheoremViolation(
                "scalar homogeneity criterion disagrees with direct counting on class " +
                std::string(to_string(side)));
        v.criterionConsistent = true;
    }
    return v;
}

/// Distance partition relative to a vertex pair at distance 2, with the
/// equitability check and quotient counts.
struct EquitableResult {
    bool equitable = true;
    std::vector<std::pair<int, int>> cells;  // (dist to x, dist to y) per cell id
    std::map<int, std::map<int, int>> quotient;  // cell -> cell -> neighbor count
    std::optional<bool> crossStepConsistent;  // quotient entries forced by c_i - c_{i-2}
    std::optional<std::pair<int, int>> witness;  // two vertices breaking equitability
};

inline EquitableResult equitable_check(const Graph& g, int x, int y) {
    if (g.dist(x, y) != 2) throw std::invalid_argument("vertices must be at distance 2");
    int n = g.vertexCount();
    std::map<std::pair<int, int>, int> cellId;
    std::vector<int> cellOf(n);
    EquitableResult res;
    for (int v = 0; v < n; ++v) {
        auto key = std::make_pair(g.dist(x, v), g.dist(y, v));
        auto [it, fresh] = cellId.insert({key, static_cast<int>(res.cells.size())});
        if (fresh) res.cells.push_back(key);
        cellOf[v] = it->second;
    }

    int numCells = static_cast<int>(res.cells.size());
    std::vector<std::vector<int>> rowOf(numCells);  // first-seen neighbor profile per cell
    std::vector<int> sample(numCells, -1);
    for (int v = 0; v < n; ++v) {
        std::vector<int> row(numCells, 0);
        for (int w : g.neighbors(v)) ++row[cellOf[w]];
        int c = cellOf[v];
        if (sample[c] == -1) {
            sample[c] = v;
            rowOf[c] = row;
        } else if (row != rowOf[c] && res.equitable) {
            res.equitable = false;
            res.witness = {sample[c], v};
        }
    }
    if (res.equitable) {
        for (int c = 0; c < numCells; ++c)
            for (int d = 0; d < numCells; ++d)
                if (rowOf[c][d] != 0) res.quotient[c][d] = rowOf[c][d];

        // When both endpoints are distance-regularized with one profile,
        // a vertex of cell (i, i-2) must see exactly c_i - c_{i-2}
        // neighbors in cell (i-1, i-1).
        auto px = vertex_intersection_numbers(g, x);
        auto py = vertex_intersection_numbers(g, y);
        auto* vx = std::get_if<VertexProfile>(&px);
        auto* vy = std::get_if<VertexProfile>(&py);
        if (vx && vy && vx->array() == vy->array()) {
            bool ok = true;
            auto cAt = [&](int i) { return i <= 0 ? 0 : vx->c[i - 1]; };
            for (int c = 0; c < numCells; ++c) {
                auto [di, dj] = res.cells[c];
                int i, j;
                if (dj == di - 2) i = di, j = dj;
                else if (di == dj - 2) i = dj, j = di;
                else continue;
                auto mid = cellId.find({i - 1, i - 1});
                if (mid == cellId.end()) continue;
                int have = rowOf[c][mid->second];
                if (have != cAt(i) - cAt(i - 2)) ok = false;
            }
            res.crossStepConsistent = ok;
        }
    }
    return res;
}

}  // namespace biregular
