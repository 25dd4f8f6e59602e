#pragma once

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "biregular/feasibility.hpp"
#include "biregular/graph.hpp"
#include "biregular/homogeneity.hpp"
#include "biregular/regularity.hpp"
#include "biregular/scalars.hpp"

namespace biregular {

// Field order is part of the report contract, so the ordered flavour.
using json = nlohmann::ordered_json;

inline json to_json(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();  // values past 64 bits render as strings
}

inline json to_json(const IntersectionArray& a) {
    json j;
    j["b"] = a.bs;
    j["c"] = a.cs;
    j["text"] = a.str();
    return j;
}

inline json to_json(const ScalarTable& t) {
    json j;
    auto seq = [](const std::vector<Int>& v) {
        json arr = json::array();
        for (const auto& x : v) arr.push_back(to_json(x));
        return arr;
    };
    auto levels = [](const std::map<int, Int>& m) {
        json obj = json::object();
        for (const auto& [k, v] : m) obj[std::to_string(k)] = to_json(v);
        return obj;
    };
    j["layers_Y"] = seq(t.layerY);
    j["layers_Yprime"] = seq(t.layerYprime);
    j["rank1_nearer_neighbor"] = seq(t.rank1.nearerNeighbor);
    j["rank1_nearer_root"] = seq(t.rank1.nearerRoot);
    j["rank2_inward"] = seq(t.rank2.inward);
    j["rank2_level"] = seq(t.rank2.level);
    j["rank2_outward"] = seq(t.rank2.outward);
    j["p2ii"] = seq(t.p.p2ii);
    j["pi2i"] = seq(t.p.pi2i);
    j["delta"] = levels(t.delta);
    j["gamma"] = levels(t.gamma);
    json trip = json::object();
    for (const auto& [lvl, tc] : t.triples)
        trip[std::to_string(lvl)] = {{"with_closer", to_json(tc.withCloser)},
                                     {"with_farther", to_json(tc.withFarther)},
                                     {"cross_pair", to_json(tc.crossPair)}};
    j["triples"] = trip;
    return j;
}

inline json to_json(const GammaProfile& p) {
    json j;
    j["level"] = p.level;
    switch (p.status) {
        case GammaProfile::Status::Constant:
            j["status"] = "constant";
            j["value"] = *p.value;
            break;
        case GammaProfile::Status::NonConstant: {
            j["status"] = "non-constant";
            const auto& [a, b] = *p.witness;
            j["witness"] = {{"first", {a.x, a.y, a.z}},
                            {"first_count", a.count},
                            {"second", {b.x, b.y, b.z}},
                            {"second_count", b.count}};
            break;
        }
        case GammaProfile::Status::Vacuous:
            j["status"] = "vacuous";
            break;
    }
    j["domain"] = p.domainSize;
    return j;
}

inline json to_json(const HomogeneityVerdict& v) {
    json j;
    j["class"] = to_string(v.classChecked);
    j["eccentricity"] = v.eccentricity;
    j["two_homogeneous"] = v.twoHomogeneous;
    j["almost_homogeneous"] = v.almostHomogeneous;
    json gam = json::array(), del = json::array();
    for (const auto& p : v.gamma) gam.push_back(to_json(p));
    for (const auto& p : v.deltaMeasured) del.push_back(to_json(p));
    j["gamma_profiles"] = gam;
    j["delta_profiles"] = del;
    json ds = json::object();
    for (const auto& [lvl, val] : v.deltaScalars) ds[std::to_string(lvl)] = to_json(val);
    j["delta_scalars"] = ds;
    j["criterion_consistent"] =
        v.criterionConsistent ? json(*v.criterionConsistent) : json(nullptr);
    return j;
}

inline json to_json(const FeasibilityReport& r) {
    json j;
    j["feasible"] = r.feasible;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

inline json to_json(const FamilyCandidate& f) {
    json j;
    j["family"] = to_string(f.family);
    j["k"] = f.k;
    j["kprime"] = f.kprime;
    j["c"] = f.c;
    for (const auto& [name, val] : f.derivedParams) j[name] = val;
    j["array"] = f.arrayY.str();
    j["partial"] = f.partial;
    if (f.dual) j["dual"] = f.dual->str();
    return j;
}

/// Full analysis of one graph: classification, measured arrays, derived
/// scalars, homogeneity verdicts for both classes and the feasibility
/// cross-check of the measured pair.
inline json analyze_report(const Graph& g, long long budget = kDefaultTripleBudget) {
    json rep;
    rep["command"] = "analyze";
    rep["inputs"] = {{"vertices", g.vertexCount()}, {"edges", g.edgeCount()}};
    auto gi = girth(g);
    rep["inputs"]["girth"] = gi ? json(*gi) : json("infinite");
    json warnings = json::array();

    Classification cls = classify(g);
    json arrays = json::object();
    json scalars = json::object();
    json homog = json::object();
    json feas;

    if (std::holds_alternative<NotConnected>(cls)) {
        rep["classification"] = {{"kind", "not-connected"}};
    } else if (auto* w = std::get_if<NotDistanceRegularized>(&cls)) {
        rep["classification"] = {
            {"kind", "not-distance-regularized"},
            {"witness",
             {{"vertex", w->witness.vertex},
              {"level", w->witness.level},
              {"pair", {w->witness.first, w->witness.second}}}}};
    } else {
        rep["inputs"]["diameter"] = g.diameter();
        IntersectionArray aY, aP;
        bool bipartiteCase = true;
        if (auto* dr = std::get_if<DistanceRegular>(&cls)) {
            rep["classification"] = {{"kind", "distance-regular"}};
            arrays["array"] = to_json(dr->array);
            aY = aP = dr->array;
            try {
                bipartition(g);
            } catch (const NotBipartiteError&) {
                bipartiteCase = false;
                warnings.push_back("homogeneity analysis requires a bipartite graph");
            } catch (const NotConnectedError&) {
                bipartiteCase = false;
            }
        } else {
            auto& dbr = std::get<DistanceBiregular>(cls);
            rep["classification"] = {{"kind", "distance-biregular"}};
            arrays["Y"] = to_json(dbr.arrayY);
            arrays["Yprime"] = to_json(dbr.arrayYprime);
            aY = dbr.arrayY;
            aP = dbr.arrayYprime;
        }
        if (bipartiteCase) {
            Coloring col = bipartition(g);
            try {
                if (aY.diameter() >= 1) {
                    scalars["Y"] = to_json(build_scalar_table(aY, aP));
                    scalars["Yprime"] = to_json(build_scalar_table(aP, aY));
                }
            } catch (const InfeasibleError& e) {
                warnings.push_back(std::string("scalar table failed: ") + e.what());
            }
            homog["Y"] = to_json(homogeneity_verdict(g, col, Side::Y, budget));
            if (col.sizeYprime > 0)
                homog["Yprime"] = to_json(homogeneity_verdict(g, col, Side::Yprime, budget));
            if (aY.diameter() >= 1) feas = to_json(validate_pair(aY, aP));
        }
    }
    rep["arrays"] = arrays;
    rep["scalars"] = scalars;
    rep["homogeneity"] = homog;
    rep["feasibility"] = feas.is_null() ? json::object() : feas;
    rep["warnings"] = warnings;
    return rep;
}

/// Human rendering of a report; same facts as the document itself.
inline void render_report(std::ostream& os, const json& rep) {
    os << "command: " << rep["command"].get<std::string>() << "\n";
    if (rep.contains("inputs")) {
        os << "inputs:";
        for (auto& [k, v] : rep["inputs"].items()) os << " " << k << "=" << v.dump();
        os << "\n";
    }
    if (rep.contains("classification"))
        os << "classification: " << rep["classification"].dump() << "\n";
    if (rep.contains("arrays") && !rep["arrays"].empty()) {
        os << "arrays:\n";
        for (auto& [k, v] : rep["arrays"].items())
            os << "  " << k << ": " << v["text"].get<std::string>() << "\n";
    }
    if (rep.contains("scalars") && !rep["scalars"].empty()) {
        for (auto& [side, tab] : rep["scalars"].items()) {
            os << "scalars[" << side << "]: layers=" << tab["layers_Y"].dump()
               << " p2ii=" << tab["p2ii"].dump() << " delta=" << tab["delta"].dump()
               << " gamma=" << tab["gamma"].dump() << "\n";
        }
    }
    if (rep.contains("homogeneity") && !rep["homogeneity"].empty()) {
        for (auto& [side, v] : rep["homogeneity"].items()) {
            os << "homogeneity[" << side << "]: two=" << v["two_homogeneous"].dump()
               << " almost=" << v["almost_homogeneous"].dump()
               << " criterion_consistent=" << v["criterion_consistent"].dump() << "\n";
            for (auto& p : v["gamma_profiles"])
                os << "  level " << p["level"].get<int>() << ": "
                   << p["status"].get<std::string>()
                   << (p.contains("value") ? " value=" + p["value"].dump() : "") << "\n";
        }
    }
    if (rep.contains("feasibility") && !rep["feasibility"].empty()) {
        os << "feasibility: " << (rep["feasibility"]["feasible"].get<bool>() ? "ok" : "VIOLATED")
           << "\n";
        for (auto& c : rep["feasibility"]["checks"])
            if (!c["pass"].get<bool>())
                os << "  violated: " << c["name"].get<std::string>() << " "
                   << (c.contains("detail") ? c["detail"].get<std::string>() : "") << "\n";
    }
    if (rep.contains("warnings"))
        for (auto& w : rep["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace biregular
