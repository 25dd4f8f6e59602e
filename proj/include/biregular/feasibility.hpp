#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "biregular/numeric.hpp"
#include "biregular/regularity.hpp"
#include "biregular/scalars.hpp"

namespace biregular {

/// Computes the intersection array of the opposite color class from the
/// rank-1 diagram: every vertex counted by |Γ_{i,i+1}(x,z)| has exactly
/// c'_{i+1} - c_i neighbors in Γ_{i+1,i}(x,z) and vice versa, so
///
///   c'_{i+1} = c_i + (c_{i+1} - c'_i) * |Γ_{i+1,i}| / |Γ_{i,i+1}|
///
/// with both diagram counts given by products of array entries. Every
/// intermediate value must be a non-negative integer and every diagram
/// count must stay positive; the opposite eccentricity lands in
/// {D-1, D, D+1} depending on where the b' entries hit zero.
inline IntersectionArray dual_array(const IntersectionArray& aY) {
    aY.requireValid();
    int D = aY.diameter();
    int k = aY.valency();
    if (D == 1) {
        // A class of eccentricity 1 forces a star; the other class are
        // leaves of degree 1.
        if (k == 1) return aY;
        return IntersectionArray{{1, k - 1}, {1, 1}};
    }
    int kp = aY.dualValency();
    auto fullValency = [&](int i) { return i % 2 == 0 ? kp : k; };

    std::vector<int> cp = {1};   // c'_1 ..
    std::vector<int> bp = {kp};  // b'_0 ..
    Rat prodB = 1, prodC = 1, prodBp = 1, prodCp = 1;
    for (int i = 1; i <= D - 1; ++i) {
        int bpi = fullValency(i) - cp[i - 1];
        if (bpi < 0)
            throw InfeasibleError("dual_branch", i, "b' would be negative");
        if (bpi == 0) {
            // Opposite class already exhausted: only legal at the last
            // step of an even eccentricity, giving D' = D - 1.
            if (i != D - 1 || D % 2 != 0)
                throw InfeasibleError("dual_branch", i, "b' hits zero before the final level");
            return IntersectionArray{bp, cp};
        }
        bp.push_back(bpi);
        prodB *= aY.b(i);
        prodC *= aY.c(i);
        prodBp *= bpi;
        prodCp *= cp[i - 1];
        Rat countDown = prodB / prodCp;  // |Γ_{i+1,i}(x,z)|
        Rat countUp = prodBp / prodC;    // |Γ_{i,i+1}(x,z)|
        if (!is_integral(countDown) || countDown < 1)
            throw InfeasibleError("dual_diagram", i, "invalid count " + countDown.str());
        if (!is_integral(countUp) || countUp < 1)
            throw InfeasibleError("dual_diagram", i, "invalid count " + countUp.str());
        Rat next = aY.c(i) + Rat(aY.c(i + 1) - cp[i - 1]) * countDown / countUp;
        if (!is_integral(next) || next < 1)
            throw InfeasibleError("dual_closing", i + 1, "invalid entry " + next.str());
        if (next > fullValency(i + 1))
            throw InfeasibleError("dual_closing", i + 1, "entry exceeds the class valency");
        cp.push_back(static_cast<int>(to_int(next)));
    }
    int bD = fullValency(D) - cp[D - 1];
    if (bD < 0) throw InfeasibleError("dual_branch", D, "b' would be negative");
    if (bD > 0) {
        // One extra layer: D' = D + 1 and the last closing count is the
        // full valency.
        bp.push_back(bD);
        cp.push_back(fullValency(D + 1));
    }
    return IntersectionArray{bp, cp};
}

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Aggregated verdict on an array pair. Feasibility is necessary, never
/// sufficient: a clean report says "no violation found", not "a graph
/// exists".
struct FeasibilityReport {
    bool feasible = true;
    std::vector<CheckResult> checks;
    std::optional<ScalarTable> derived;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
        feasible = feasible && pass;
    }

    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
        return out;
    }
};

namespace detail {

// One-sided identity checks, run once per orientation.
inline void side_checks(FeasibilityReport& rep, const IntersectionArray& a,
                        const IntersectionArray& d, const char* tag) {
    int D = a.diameter(), Dp = d.diameter();
    int k = a.valency(), kp = d.valency();

    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= D; ++i) {
            int want = i % 2 == 0 ? k : kp;
            if (a.c(i) + a.b(i) != want) {
                ok = false;
                detail = "c+b at level " + std::to_string(i) + " is " +
                         std::to_string(a.c(i) + a.b(i)) + ", expected " + std::to_string(want);
                break;
            }
        }
        rep.add(std::string("parity_sums[") + tag + "]", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        // closing counts interleave: c'_i <= c_{i+1}
        for (int i = 1; i <= D - 1 && ok; ++i)
            if (i <= Dp && d.c(i) > a.c(i + 1)) {
                ok = false;
                detail = "c'_" + std::to_string(i) + " > c_" + std::to_string(i + 1);
            }
        rep.add(std::string("closing_interleave[") + tag + "]", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        // branching counts interleave: b_i <= b'_{i-1}
        for (int i = 1; i <= D - 1 && ok; ++i)
            if (i - 1 <= Dp && a.b(i) > d.b(i - 1)) {
                ok = false;
                detail = "b_" + std::to_string(i) + " > b'_" + std::to_string(i - 1);
            }
        rep.add(std::string("branching_interleave[") + tag + "]", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        // c_i <= b_j whenever i + j <= D is even
        for (int i = 1; i <= D && ok; ++i)
            for (int j = 0; i + j <= D && ok; ++j)
                if ((i + j) % 2 == 0 && a.c(i) > a.b(j)) {
                    ok = false;
                    detail = "c_" + std::to_string(i) + " > b_" + std::to_string(j);
                }
        rep.add(std::string("closing_branching_bound[") + tag + "]", ok, detail);
    }
}

}  // namespace detail

/// Runs every identity, inequality and integrality test available on an
/// array pair; violations are recorded as data, never thrown.
inline FeasibilityReport validate_pair(const IntersectionArray& aY,
                                       const IntersectionArray& aP) {
    FeasibilityReport rep;
    try {
        aY.requireValid();
        aP.requireValid();
        rep.add("structure", true);
    } catch (const std::invalid_argument& e) {
        rep.add("structure", false, e.what());
        return rep;
    }
    int D = aY.diameter(), Dp = aP.diameter();

    rep.add("valency_link", aY.dualValency() == aP.valency() &&
                                aP.dualValency() == aY.valency(),
            "each array must start at the other's derived valency");
    rep.add("eccentricity_gap", std::abs(D - Dp) <= 1,
            "eccentricities differ by " + std::to_string(std::abs(D - Dp)));
    // the deeper class cannot have odd eccentricity: its far sphere would
    // lie in the other class and push that eccentricity at least as high
    rep.add("eccentricity_parity",
            !(Dp == D + 1 && Dp % 2 == 1) && !(D == Dp + 1 && D % 2 == 1),
            "the larger eccentricity must be even");
    if (!rep.feasible) return rep;

    detail::side_checks(rep, aY, aP, "Y");
    detail::side_checks(rep, aP, aY, "Y'");

    {
        bool ok = true;
        std::string detail;
        Int prodC = 1, prodCp = 1, prodB = 1, prodBp = 1;
        for (int i = 1; i <= std::min(D, Dp); ++i) {
            prodC *= aY.c(i);
            prodCp *= aP.c(i);
            if (i >= 2) {
                prodB *= aY.b(i - 1);
                prodBp *= aP.b(i - 1);
            }
            if (i % 2 == 1 && i >= 3 && (prodC != prodCp || prodB != prodBp)) {
                ok = false;
                detail = "path-count products differ at level " + std::to_string(i);
                break;
            }
        }
        rep.add("odd_level_products", ok, detail);
    }
    if (D >= 2 && Dp >= 2)
        rep.add("edge_count_identity",
                Int(aY.b(1)) * (aY.c(2) - 1) == Int(aP.b(1)) * (aP.c(2) - 1),
                "b1(c2-1) must match on both classes");
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= std::min(D - 1, Dp - 1) && ok; ++i) {
            bool eqF = aP.c(i + 1) == aY.c(i), eqB = aY.c(i + 1) == aP.c(i);
            bool gtF = aP.c(i + 1) > aY.c(i), gtB = aY.c(i + 1) > aP.c(i);
            if (eqF != eqB || gtF != gtB) {
                ok = false;
                detail = "shifted closing counts disagree at level " + std::to_string(i);
            }
        }
        rep.add("closing_shift_equivalence", ok, detail);
    }

    std::optional<ScalarTable> table;
    try {
        table = build_scalar_table(aY, aP);
        build_scalar_table(aP, aY);
        rep.add("scalar_integrality", true);
    } catch (const InfeasibleError& e) {
        rep.add("scalar_integrality", false, e.what());
    }
    if (table) {
        if (aY.dualValency() >= 3) {
            bool ok = true;
            std::string detail;
            for (const auto& [lvl, val] : table->delta)
                if (val < 0) {
                    ok = false;
                    detail = "negative scalar at level " + std::to_string(lvl);
                    break;
                }
            rep.add("delta_nonnegative[Y]", ok, detail);
        }
        if (aY.valency() >= 3) {
            bool ok = true;
            std::string detail;
            for (const auto& [lvl, val] : delta_sequence(aP, aY))
                if (val < 0) {
                    ok = false;
                    detail = "negative scalar at level " + std::to_string(lvl);
                    break;
                }
            rep.add("delta_nonnegative[Y']", ok, detail);
        }
        if (D >= 2) {
            rep.add("terminal_level_nonempty", table->p.p2ii[D - 1] > 0,
                    "level D-1 same-distance cell must be nonempty");
            bool expectZero = (D % 2 == 0 && aY.b(D - 1) == 1) ||
                              (D % 2 == 1 && Dp == D && aP.b(D - 1) == 1);
            rep.add("terminal_zero_pattern", (table->p.p2ii[D] == 0) == expectZero,
                    "vanishing of the top same-distance cell must match the array pattern");
        }
    }

    for (auto [from, to, name] : {std::tuple{&aY, &aP, "dual_match[Y->Y']"},
                                  std::tuple{&aP, &aY, "dual_match[Y'->Y]"}}) {
        try {
            IntersectionArray d = dual_array(*from);
            rep.add(name, d == *to,
                    d == *to ? "" : "derived opposite array is " + d.str());
        } catch (const InfeasibleError& e) {
            rep.add(name, false, e.what());
        }
    }

    if (rep.feasible) rep.derived = std::move(table);
    return rep;
}

/// Intersection arrays of the subdivision of a κ-regular girth-g graph
/// of diameter d, for both classes (original vertices first). Odd and
/// even girth give different shapes; κ = 2 collapses to one cycle array
/// for both classes.
inline std::pair<IntersectionArray, IntersectionArray> cage_subdivision_arrays(int kappa, int d,
                                                                               bool oddGirth) {
    if (kappa < 2 || d < 1) throw std::invalid_argument("need valency >= 2 and diameter >= 1");
    auto chainArray = [&](int D, int last) {
        IntersectionArray a;
        a.bs.push_back(kappa);
        for (int i = 1; i <= D - 1; ++i) a.bs.push_back(i % 2 == 1 ? 1 : kappa - 1);
        a.cs.assign(D - 1, 1);
        a.cs.push_back(last);
        return a;
    };
    if (kappa == 2) {
        // Subdividing a cycle gives a longer cycle; both classes agree.
        int D = oddGirth ? 2 * d + 1 : 2 * d;
        IntersectionArray a = chainArray(D, 2);
        return {a, a};
    }
    if (oddGirth) {
        IntersectionArray x = chainArray(2 * d + 1, 2);
        IntersectionArray r;
        r.bs.push_back(2);
        for (int i = 1; i <= 2 * d; ++i) r.bs.push_back(i % 2 == 1 ? kappa - 1 : 1);
        r.bs.push_back(kappa - 2);
        r.cs.assign(2 * d, 1);
        r.cs.push_back(2);
        r.cs.push_back(2);
        return {x, r};
    }
    IntersectionArray x = chainArray(2 * d, kappa);
    IntersectionArray r;
    r.bs.push_back(2);
    for (int i = 1; i <= 2 * d - 1; ++i) r.bs.push_back(i % 2 == 1 ? kappa - 1 : 1);
    r.cs.assign(2 * d - 1, 1);
    r.cs.push_back(2);
    return {x, r};
}

enum class Family { D3, D4, D5, C2primeIs1Odd, C2primeIs1Even, C2primeIs2Prefix };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::D3: return "D3";
        case Family::D4: return "D4";
        case Family::D5: return "D5";
        case Family::C2primeIs1Odd: return "C2primeIs1Odd";
        case Family::C2primeIs1Even: return "C2primeIs1Even";
        case Family::C2primeIs2Prefix: return "C2primeIs2Prefix";
    }
    return "?";
}

/// A parameter tuple matching one of the characterized array shapes of
/// 2-Y-homogeneous distance-biregular graphs, together with its derived
/// array (or array prefix, for the open c'_2 = 2 case).
struct FamilyCandidate {
    Family family = Family::D3;
    int k = 0, kprime = 0, c = 0;
    std::map<std::string, int> derivedParams;
    IntersectionArray arrayY;
    bool partial = false;  // prefix only; not validated
    std::optional<IntersectionArray> dual;

    std::string str() const {
        std::ostringstream os;
        os << to_string(family) << " k=" << k << " k'=" << kprime << " c=" << c << " "
           << arrayY.str();
        if (partial) os << " (prefix)";
        return os.str();
    }
};

struct EnumerationResult {
    std::vector<FamilyCandidate> accepted;
    std::vector<std::pair<FamilyCandidate, FeasibilityReport>> rejected;
};

namespace detail {

// A full candidate survives when its derived dual exists, the pair
// passes every feasibility check, and (for dual valency >= 3) all
// homogeneity scalars vanish, which is what the characterization
// demands of a 2-Y-homogeneous graph.
inline void admit(EnumerationResult& out, FamilyCandidate cand) {
    IntersectionArray d;
    try {
        d = dual_array(cand.arrayY);
    } catch (const InfeasibleError& e) {
        FeasibilityReport rep;
        rep.add("dual", false, e.what());
        out.rejected.push_back({std::move(cand), std::move(rep)});
        return;
    }
    FeasibilityReport rep = validate_pair(cand.arrayY, d);
    if (rep.feasible && cand.arrayY.dualValency() >= 3) {
        for (const auto& [lvl, val] : rep.derived->delta)
            if (val != 0) {
                rep.add("homogeneity_scalars_vanish", false,
                        "scalar nonzero at level " + std::to_string(lvl));
                break;
            }
    }
    if (rep.feasible) {
        cand.dual = std::move(d);
        out.accepted.push_back(std::move(cand));
    } else {
        out.rejected.push_back({std::move(cand), std::move(rep)});
    }
}

inline IntersectionArray c2prime1_chain(int D, int k, int kp) {
    IntersectionArray a;
    a.bs.push_back(k);
    for (int i = 1; i <= D - 1; ++i) a.bs.push_back(i % 2 == 1 ? kp - 1 : k - 1);
    a.cs.assign(D - 1, 1);
    a.cs.push_back(D % 2 == 1 ? kp : k);
    return a;
}

}  // namespace detail

/// Enumerates all candidate intersection arrays of 2-Y-homogeneous
/// distance-biregular graphs with the requested eccentricity within the
/// parameter bounds, in lexicographic (k, k', c) order. For the open
/// c'_2 = 2 case only the forced prefix is emitted, marked partial.
inline EnumerationResult enumerate_families_detailed(int D, int kMax, int kprimeMax) {
    if (D < 3 || D > 5) throw std::invalid_argument("eccentricity must be 3, 4 or 5");
    if (kMax < 2 || kprimeMax < 2) throw std::invalid_argument("bounds must be at least 2");
    EnumerationResult out;

    for (int k = 2; k <= kMax; ++k) {
        for (int kp = 2; kp <= kprimeMax; ++kp) {
            FamilyCandidate cand;
            cand.family = D % 2 == 1 ? Family::C2primeIs1Odd : Family::C2primeIs1Even;
            cand.k = k;
            cand.kprime = kp;
            cand.c = 1;
            cand.arrayY = detail::c2prime1_chain(D, k, kp);
            detail::admit(out, std::move(cand));
        }
    }

    if (D == 3) {
        for (int k = 3; k <= kMax; ++k)
            for (int c = 2; c < k; ++c) {
                if (c + 1 > kprimeMax) continue;
                FamilyCandidate cand;
                cand.family = Family::D3;
                cand.k = k;
                cand.kprime = c + 1;
                cand.c = c;
                cand.arrayY = IntersectionArray{{k, c, k - c}, {1, c, c + 1}};
                detail::admit(out, std::move(cand));
            }
    }

    if (D == 4 || D == 5) {
        for (int k = 3; k <= kMax; ++k) {
            for (int kp = 3; kp <= kprimeMax; ++kp) {
                for (int c = 2; c < k; ++c) {
                    // c' and gamma are forced by the counting identities and
                    // must come out integral.
                    if ((kp - 1) * (c - 1) % (k - 1) != 0) continue;
                    int cp = (kp - 1) * (c - 1) / (k - 1) + 1;
                    if ((c - 1) * (cp - 2) % (kp - 2) != 0) continue;
                    int gamma = (c - 1) * (cp - 2) / (kp - 2) + 1;
                    if (gamma < 1) continue;
                    if (c * (cp - 1) % gamma != 0) continue;
                    int x = c * (cp - 1) / gamma;
                    FamilyCandidate cand;
                    cand.k = k;
                    cand.kprime = kp;
                    cand.c = c;
                    cand.derivedParams = {{"cprime", cp}, {"gamma", gamma}};
                    if (D == 4) {
                        int b3 = kp - 1 - x, c3 = x + 1;
                        if (b3 < 1 || c3 < 1) continue;
                        cand.family = Family::D4;
                        cand.derivedParams["c3"] = c3;
                        cand.derivedParams["b3"] = b3;
                        cand.arrayY = IntersectionArray{{k, kp - 1, k - c, b3}, {1, c, c3, k}};
                    } else {
                        int c3 = kp - 1 - x, b3 = 1 + x;
                        if (c3 < 1) continue;
                        Int num = Int(k) * (kp - 1) * (c - 1) - Int(c) * (b3 - 1) * (k - 1);
                        if (num % (Int(c - 1) * c3) != 0) continue;
                        Int c4big = num / (Int(c - 1) * c3);
                        if (c4big < 1 || c4big > k - 1) continue;
                        int c4 = static_cast<int>(c4big);
                        int b4 = k - c4;
                        cand.family = Family::D5;
                        cand.derivedParams["c3"] = c3;
                        cand.derivedParams["b3"] = b3;
                        cand.derivedParams["c4"] = c4;
                        cand.derivedParams["b4"] = b4;
                        cand.arrayY =
                            IntersectionArray{{k, kp - 1, k - c, b3, b4}, {1, c, c3, c4, kp}};
                    }
                    detail::admit(out, std::move(cand));
                }
            }
        }
    }

    if (D >= 4) {
        // c'_2 = 2: only the first entries of the array are pinned down;
        // the full shape is open. Emit the prefix, unvalidated.
        for (int k = 3; k <= kMax; ++k)
            for (int c = 2; c < k; ++c) {
                if ((k - 1) % (c - 1) != 0) continue;
                int b1 = (k - 1) / (c - 1);
                if (b1 + 1 > kprimeMax) continue;
                int b3 = b1 - c;
                if (b3 < 1) continue;
                FamilyCandidate cand;
                cand.family = Family::C2primeIs2Prefix;
                cand.k = k;
                cand.kprime = b1 + 1;
                cand.c = c;
                cand.partial = true;
                cand.arrayY = IntersectionArray{{k, b1, k - c, b3}, {1, c, c + 1}};
                out.accepted.push_back(std::move(cand));
            }
    }

    auto key = [](const FamilyCandidate& f) {
        return std::tuple(f.k, f.kprime, f.c, static_cast<int>(f.family));
    };
    std::sort(out.accepted.begin(), out.accepted.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::sort(out.rejected.begin(), out.rejected.end(),
              [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
    return out;
}

inline std::vector<FamilyCandidate> enumerate_families(int D, int kMax, int kprimeMax) {
    return enumerate_families_detailed(D, kMax, kprimeMax).accepted;
}

}  // namespace biregular
