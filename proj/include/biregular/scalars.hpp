#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "biregular/numeric.hpp"
#include "biregular/regularity.hpp"

namespace biregular {

/// Raised when a derived scalar is requested outside the hypotheses of
/// the result that defines it (e.g. a gamma value at a level whose
/// homogeneity scalar does not vanish).
class NotApplicableError : public std::runtime_error {
public:
    explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// prod over f(lo..hi); empty when lo > hi
template <typename F>
Rat range_product(int lo, int hi, F f) {
    Rat p = 1;
    for (int i = lo; i <= hi; ++i) p *= f(i);
    return p;
}

inline Int require_count(const Rat& r, const char* check, int index) {
    if (!is_integral(r))
        throw InfeasibleError(check, index, "non-integral value " + r.str());
    if (r < 0) throw InfeasibleError(check, index, "negative value " + r.str());
    return to_int(r);
}

}  // namespace detail

/// Layer sizes k_0..k_D of the class, each verified integral.
inline std::vector<Int> layer_sizes(const IntersectionArray& a) {
    a.requireValid();
    int D = a.diameter();
    std::vector<Int> k;
    k.reserve(D + 1);
    k.push_back(1);
    Rat cur = 1;
    for (int i = 1; i <= D; ++i) {
        cur *= a.b(i - 1);
        cur /= a.c(i);
        k.push_back(detail::require_count(cur, "layer_size", i));
    }
    return k;
}

/// Sizes of the rank-1 diagram cells for x in the class of aY and y a
/// neighbor of x: nearerRoot[i] counts vertices at distance (i, i+1)
/// from (x, y), nearerNeighbor[i] those at distance (i+1, i).
struct Rank1Counts {
    std::vector<Int> nearerNeighbor;  // index 1..D-1
    std::vector<Int> nearerRoot;      // index 1..D'-1
};

inline Rank1Counts rank1_counts(const IntersectionArray& aY, const IntersectionArray& aP) {
    int D = aY.diameter(), Dp = aP.diameter();
    Rank1Counts r;
    r.nearerNeighbor.assign(D, 0);
    r.nearerRoot.assign(Dp, 0);
    for (int i = 1; i <= D - 1; ++i) {
        Rat v = detail::range_product(1, i, [&](int j) { return Rat(aY.b(j)); }) /
                detail::range_product(1, i, [&](int j) { return Rat(aP.c(j)); });
        r.nearerNeighbor[i] = detail::require_count(v, "rank1_nearer_neighbor", i);
        if (r.nearerNeighbor[i] == 0)
            throw InfeasibleError("rank1_nearer_neighbor", i, "count must stay positive");
    }
    for (int i = 1; i <= Dp - 1; ++i) {
        Rat v = detail::range_product(1, i, [&](int j) { return Rat(aP.b(j)); }) /
                detail::range_product(1, i, [&](int j) { return Rat(aY.c(j)); });
        r.nearerRoot[i] = detail::require_count(v, "rank1_nearer_root", i);
        if (r.nearerRoot[i] == 0)
            throw InfeasibleError("rank1_nearer_root", i, "count must stay positive");
    }
    return r;
}

/// Sizes of the rank-2 diagram cells for x in the class of aY and y at
/// distance two: at distance i from x a vertex sits at distance i-2, i
/// or i+2 from y. Indexed 0..D; cells outside their valid range are 0.
struct Rank2Counts {
    std::vector<Int> inward;   // |{v : d(x,v)=i, d(y,v)=i-2}|
    std::vector<Int> level;    // |{v : d(x,v)=i, d(y,v)=i}|
    std::vector<Int> outward;  // |{v : d(x,v)=i, d(y,v)=i+2}|
};

inline Rank2Counts rank2_counts(const IntersectionArray& aY, const IntersectionArray& aP) {
    int D = aY.diameter();
    if (D < 2)
        throw std::invalid_argument("rank-2 diagram needs eccentricity at least 2");
    std::vector<Int> k = layer_sizes(aY);
    auto bprod = [&](int lo, int hi) {
        return detail::range_product(lo, hi, [&](int j) { return Rat(aY.b(j)); });
    };
    auto cprod = [&](int lo, int hi) {
        return detail::range_product(lo, hi, [&](int j) { return Rat(aY.c(j)); });
    };

    Rank2Counts r;
    r.inward.assign(D + 1, 0);
    r.level.assign(D + 1, 0);
    r.outward.assign(D + 1, 0);
    r.outward[0] = 1;
    if (D >= 2) r.inward[2] = 1;
    for (int i = 3; i <= D; ++i)
        r.inward[i] = detail::require_count(bprod(2, i - 1) / cprod(1, i - 2), "rank2_inward", i);
    for (int i = 1; i <= D - 2; ++i)
        r.outward[i] =
            detail::require_count(bprod(2, i + 1) / cprod(1, i), "rank2_outward", i);

    Int kk = aY.valency();
    for (int i = 1; i <= D; ++i) {
        Rat v;
        if (i == 1) {
            v = aY.c(2);
        } else if (i == D) {
            v = bprod(2, D - 1) / cprod(1, D) * (kk * aY.b(1) - Int(aY.c(D - 1)) * aY.c(D));
        } else if (i == D - 1) {
            v = bprod(2, D - 2) / cprod(1, D - 1) *
                (kk * aY.b(1) - Int(aY.c(D - 2)) * aY.c(D - 1));
        } else if (i == 2) {
            // only reached with D >= 4, so b(3) is in range
            v = Rat(kk * aY.b(1) - Int(aY.b(2)) * aY.b(3) - aY.c(2)) / aY.c(2);
        } else {
            v = bprod(2, i - 1) / cprod(1, i) *
                (kk * aY.b(1) - Int(aY.b(i)) * aY.b(i + 1) - Int(aY.c(i - 1)) * aY.c(i));
        }
        r.level[i] = detail::require_count(v, "rank2_level", i);
        if (r.inward[i] + r.level[i] + r.outward[i] != k[i])
            throw InfeasibleError("sphere_split", i,
                                  "rank-2 cells do not partition layer of size " + k[i].str());
    }
    // Positivity forced by the diagram: the outermost same-level cell at
    // D-1 cannot be empty.
    if (D >= 2 && r.level[D - 1] == 0)
        throw InfeasibleError("rank2_level", D - 1, "cell at level D-1 must be nonempty");
    return r;
}

struct PValues {
    std::vector<Int> p2ii;  // |Γ_i(x) ∩ Γ_i(y)|, d(x,y)=2; index 1..D
    std::vector<Int> pi2i;  // |Γ_2(x) ∩ Γ_i(z)|, d(x,z)=i; index 1..D
};

/// The two linked families of intersection numbers, tied together by
/// k_2 * p2ii = k_i * pi2i.
inline PValues p_values(const IntersectionArray& aY, const IntersectionArray& aP) {
    Rank2Counts r2 = rank2_counts(aY, aP);
    std::vector<Int> k = layer_sizes(aY);
    int D = aY.diameter();
    PValues p;
    p.p2ii.assign(D + 1, 0);
    p.pi2i.assign(D + 1, 0);
    for (int i = 1; i <= D; ++i) {
        p.p2ii[i] = r2.level[i];
        p.pi2i[i] = detail::require_count(Rat(k[2] * p.p2ii[i]) / Rat(k[i]), "p_i_2i", i);
    }
    return p;
}

/// Homogeneity scalars: one integer per level 2..min(D-1, D'-1); the
/// graph behind the pair is 2-Y-homogeneous exactly when all of them
/// vanish (and almost when those up to D-2 do), provided k' >= 3.
inline std::map<int, Int> delta_sequence(const IntersectionArray& aY,
                                         const IntersectionArray& aP) {
    int D = aY.diameter(), Dp = aP.diameter();
    std::map<int, Int> out;
    int hi = std::min(D - 1, Dp - 1);
    if (hi < 2) return out;
    PValues p = p_values(aY, aP);
    Int cp2 = aP.c(2);
    for (int i = 2; i <= hi; ++i) {
        Int v;
        if (i % 2 == 0)
            v = Int(aY.b(i - 1) - 1) * Int(aY.c(i + 1) - 1) - p.pi2i[i] * (cp2 - 1);
        else
            v = Int(aP.b(i - 1) - 1) * Int(aP.c(i + 1) - 1) - p.pi2i[i] * (cp2 - 1);
        out[i] = v;
    }
    return out;
}

/// Value gamma_i forced by a vanishing homogeneity scalar at level i.
/// gamma_1 is 1 by definition; when D' = D-1 the level D-1 value is c_2
/// regardless of the scalars.
inline Int gamma_from_arrays(const IntersectionArray& aY, const IntersectionArray& aP, int i) {
    int D = aY.diameter(), Dp = aP.diameter();
    if (i < 1 || i > D - 1)
        throw std::invalid_argument("gamma level out of range: " + std::to_string(i));
    if (i == 1) return 1;
    if (Dp == D - 1 && i == D - 1) return aY.c(2);
    if (aY.dualValency() < 3)
        throw NotApplicableError("gamma from arrays requires the dual valency to be at least 3");
    auto delta = delta_sequence(aY, aP);
    auto it = delta.find(i);
    if (it == delta.end())
        throw NotApplicableError("no homogeneity scalar at level " + std::to_string(i));
    if (it->second != 0)
        throw NotApplicableError("homogeneity scalar nonzero at level " + std::to_string(i));
    PValues p = p_values(aY, aP);
    if (p.pi2i[i] == 0) throw InfeasibleError("gamma", i, "division by zero count");
    Rat g = (i % 2 == 0) ? Rat(Int(aY.c(i)) * (aY.b(i - 1) - 1)) / Rat(p.pi2i[i])
                         : Rat(Int(aP.c(i)) * (aP.b(i - 1) - 1)) / Rat(p.pi2i[i]);
    return detail::require_count(g, "gamma", i);
}

/// Triple counts around x, y at distance 2 and a common neighbor w:
/// withCloser  = |{v : d(x,v)=i, d(y,v)=i, d(w,v)=i-1}|
/// withFarther = |{v : d(x,v)=i, d(y,v)=i, d(w,v)=i+1}|
/// crossPair   = |{v : d(u,v)=i-1, d(v',v)=i+1}| for u, v' in the other
///               class at distance 2.
struct TripleCounts {
    Int withCloser;
    Int withFarther;
    Int crossPair;
};

inline TripleCounts triple_counts(const IntersectionArray& aY, const IntersectionArray& aP,
                                  int i) {
    int D = aY.diameter(), Dp = aP.diameter();
    if (i < 2 || i > std::min(D - 1, Dp - 1))
        throw std::invalid_argument("triple count level out of range: " + std::to_string(i));
    std::vector<Int> k = layer_sizes(aY);
    Int kb = Int(aY.valency()) * aY.b(1);
    Int kbp = Int(aY.valency()) * aP.b(1);
    TripleCounts t;
    if (i % 2 == 0) {
        t.withCloser =
            detail::require_count(Rat(Int(aY.c(i)) * k[i] * (aY.b(i - 1) - 1)) / Rat(kb),
                                  "triple_with_closer", i);
        t.withFarther =
            detail::require_count(Rat(Int(aY.b(i)) * k[i] * (aY.c(i + 1) - 1)) / Rat(kb),
                                  "triple_with_farther", i);
        t.crossPair = detail::require_count(Rat(k[i] * aY.b(i) * aY.c(i)) / Rat(kbp),
                                            "triple_cross_pair", i);
    } else {
        t.withCloser =
            detail::require_count(Rat(Int(aP.c(i)) * k[i] * (aP.b(i - 1) - 1)) / Rat(kb),
                                  "triple_with_closer", i);
        t.withFarther =
            detail::require_count(Rat(Int(aP.b(i)) * k[i] * (aP.c(i + 1) - 1)) / Rat(kb),
                                  "triple_with_farther", i);
        t.crossPair = detail::require_count(Rat(k[i] * aP.b(i) * aP.c(i)) / Rat(kbp),
                                            "triple_cross_pair", i);
    }
    return t;
}

/// Every derived scalar of an array pair, all exact. Construction throws
/// InfeasibleError if any count fails integrality or sign constraints.
struct ScalarTable {
    std::vector<Int> layerY;       // k_0..k_D
    std::vector<Int> layerYprime;  // k'_0..k'_{D'}
    Rank1Counts rank1;
    Rank2Counts rank2;
    PValues p;
    std::map<int, Int> delta;           // level -> scalar, 2..min(D-1,D'-1)
    std::map<int, Int> gamma;           // level -> value, where defined
    std::map<int, TripleCounts> triples;
};

inline ScalarTable build_scalar_table(const IntersectionArray& aY,
                                      const IntersectionArray& aP) {
    ScalarTable t;
    t.layerY = layer_sizes(aY);
    t.layerYprime = layer_sizes(aP);
    t.rank1 = rank1_counts(aY, aP);
    int D = aY.diameter(), Dp = aP.diameter();
    if (D >= 2) {
        t.rank2 = rank2_counts(aY, aP);
        t.p = p_values(aY, aP);
        t.delta = delta_sequence(aY, aP);
        for (int i = 1; i <= D - 1; ++i) {
            try {
                t.gamma[i] = gamma_from_arrays(aY, aP, i);
            } catch (const NotApplicableError&) {
            }
        }
        for (int i = 2; i <= std::min(D - 1, Dp - 1); ++i) t.triples[i] = triple_counts(aY, aP, i);
    }
    return t;
}

}  // namespace biregular
