#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "biregular/biregular.hpp"

namespace {

using namespace biregular;

int failExpectation(const std::string& what) {
    std::cerr << "expectation failed: " << what << "\n";
    return 1;
}

bool checkExpect(const json& rep, const std::string& token, std::string& why) {
    std::string side = "Y";
    std::string t = token;
    if (t.rfind("Yprime:", 0) == 0) {
        side = "Yprime";
        t = t.substr(7);
    }
    auto kind = [&]() { return rep["classification"]["kind"].get<std::string>(); };
    auto verdict = [&](const char* field) {
        if (!rep["homogeneity"].contains(side)) return false;
        return rep["homogeneity"][side][field].get<bool>();
    };
    bool ok;
    if (t == "distance-regular") ok = kind() == "distance-regular";
    else if (t == "distance-biregular") ok = kind() == "distance-biregular";
    else if (t == "2Y-homog") ok = verdict("two_homogeneous");
    else if (t == "not-2Y-homog") ok = !verdict("two_homogeneous");
    else if (t == "almost-2Y-homog") ok = verdict("almost_homogeneous");
    else if (t == "not-almost-2Y-homog") ok = !verdict("almost_homogeneous");
    else throw CLI::ValidationError("--expect", "unknown expectation '" + token + "'");
    if (!ok) why = token;
    return ok;
}

int runAnalyze(const std::string& file, bool asJson, const std::vector<std::string>& expects,
               long long budget) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open graph file '" << file << "'\n";
        return 2;
    }
    Graph g = read_graph(in);
    json rep = analyze_report(g, budget);
    if (asJson) std::cout << rep.dump(2) << "\n";
    else render_report(std::cout, rep);
    for (const auto& e : expects) {
        std::string why;
        if (!checkExpect(rep, e, why)) return failExpectation(why);
    }
    return 0;
}

int runGenerate(const std::string& name, const std::vector<int>& params, bool subdivide,
                const std::string& outFile) {
    GeneratedGraph gg = generate(name, params);
    if (subdivide) gg = subdivision(gg);
    std::vector<std::string> comments = {gg.provenance};
    {
        std::string ys = "Y:";
        for (int v : gg.declaredY) ys += " " + std::to_string(v);
        if (!gg.declaredY.empty()) comments.push_back(ys);
    }
    if (outFile.empty()) {
        write_graph(std::cout, gg.graph, comments);
    } else {
        std::ofstream out(outFile);
        if (!out) {
            std::cerr << "cannot open output file '" << outFile << "'\n";
            return 2;
        }
        write_graph(out, gg.graph, comments);
    }
    return 0;
}

int runFeasible(const std::string& arrayText, bool wantDual, bool asJson,
                const std::vector<std::string>& expects) {
    IntersectionArray a = parse_array(arrayText);
    json rep;
    rep["command"] = "feasible";
    rep["inputs"] = {{"array", a.str()}};
    json warnings = json::array();

    std::optional<IntersectionArray> dual;
    try {
        dual = dual_array(a);
    } catch (const InfeasibleError& e) {
        warnings.push_back(std::string("dual array does not exist: ") + e.what());
    }
    if (dual) {
        if (wantDual) rep["inputs"]["dual"] = dual->str();
        FeasibilityReport fr = validate_pair(a, *dual);
        rep["feasibility"] = to_json(fr);
        if (fr.derived) rep["scalars"] = to_json(*fr.derived);
    } else {
        FeasibilityReport fr;
        fr.add("dual", false, "no opposite array exists");
        rep["feasibility"] = to_json(fr);
    }
    rep["warnings"] = warnings;

    if (asJson) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "array: " << a.str() << "\n";
        if (wantDual && dual) std::cout << "dual:  " << dual->str() << "\n";
        bool ok = rep["feasibility"]["feasible"].get<bool>();
        std::cout << "verdict: " << (ok ? "Feasible (no violation found)" : "Infeasible") << "\n";
        for (auto& c : rep["feasibility"]["checks"])
            if (!c["pass"].get<bool>())
                std::cout << "  violated: " << c["name"].get<std::string>() << " "
                          << (c.contains("detail") ? c["detail"].get<std::string>() : "") << "\n";
        for (auto& w : rep["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
    }
    bool feasibleNow = rep["feasibility"]["feasible"].get<bool>();
    for (const auto& e : expects) {
        if (e == "feasible" && !feasibleNow) return failExpectation(e);
        if (e == "infeasible" && feasibleNow) return failExpectation(e);
    }
    return 0;
}

int runEnumerate(int D, int kMax, int kprimeMax, bool asJson, bool showRejected) {
    EnumerationResult res = enumerate_families_detailed(D, kMax, kprimeMax);
    if (asJson) {
        json rep;
        rep["command"] = "enumerate";
        rep["inputs"] = {{"D", D}, {"k_max", kMax}, {"kprime_max", kprimeMax}};
        json acc = json::array();
        for (const auto& f : res.accepted) acc.push_back(to_json(f));
        rep["candidates"] = acc;
        if (showRejected) {
            json rej = json::array();
            for (const auto& [f, r] : res.rejected) {
                json e = to_json(f);
                e["violations"] = r.violations();
                rej.push_back(e);
            }
            rep["rejected"] = rej;
        }
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const auto& f : res.accepted) std::cout << f.str() << "\n";
        std::cout << res.accepted.size() << " candidate(s)\n";
        if (showRejected) {
            for (const auto& [f, r] : res.rejected) {
                std::cout << "rejected " << f.str() << ":";
                for (const auto& v : r.violations()) std::cout << " " << v << ";";
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int runSearch(const std::string& arrY, const std::string& arrP, long long nodes, double seconds,
              int maxVertices, const std::string& outFile,
              const std::vector<std::string>& expects) {
    IntersectionArray aY = parse_array(arrY);
    IntersectionArray aP = parse_array(arrP);
    SearchBudget budget;
    budget.maxNodes = nodes;
    budget.maxSeconds = seconds;
    budget.maxVertices = maxVertices;
    SearchOutcome out = construct_from_arrays(aY, aP, budget);
    std::string status;
    if (auto* f = std::get_if<Found>(&out)) {
        status = "found";
        std::cout << "found graph on " << f->graph.graph.vertexCount() << " vertices after "
                  << f->stats.nodes << " nodes (" << f->stats.seconds << "s)\n";
        if (!outFile.empty()) {
            std::ofstream o(outFile);
            if (!o) {
                std::cerr << "cannot open output file '" << outFile << "'\n";
                return 2;
            }
            write_graph(o, f->graph.graph, {f->graph.provenance});
        } else {
            write_graph(std::cout, f->graph.graph, {f->graph.provenance});
        }
    } else if (auto* ex = std::get_if<ExhaustedNoGraph>(&out)) {
        status = "exhausted";
        std::cout << "no graph exists: search tree exhausted after " << ex->stats.nodes
                  << " nodes\n";
    } else if (auto* to = std::get_if<SearchTimeout>(&out)) {
        status = "timeout";
        std::cout << "budget exhausted after " << to->stats.nodes << " nodes ("
                  << to->stats.seconds << "s); no conclusion\n";
    } else {
        auto& inf = std::get<InfeasibleArrays>(out);
        status = "infeasible";
        std::cout << "arrays are infeasible:\n";
        for (const auto& v : inf.report.violations()) std::cout << "  " << v << "\n";
    }
    for (const auto& e : expects)
        if (e != status) return failExpectation(e + " (got " + status + ")");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic analyzer for distance-biregular graphs"};
    app.require_subcommand(1);

    std::string graphFile, outFile, arrayText, arrYText, arrPText, genName;
    std::vector<int> genParams;
    std::vector<std::string> expects;
    bool asJson = false, wantDual = false, subdivide = false, showRejected = false;
    long long budget = biregular::kDefaultTripleBudget;
    long long searchNodes = 10'000'000;
    double searchSeconds = 60.0;
    int maxVertices = 64;
    int D = 3, kMax = 8, kprimeMax = 0;

    auto* analyze = app.add_subcommand("analyze", "classify a graph file and derive everything");
    analyze->add_option("file", graphFile, "graph in text format")->required();
    analyze->add_flag("--json", asJson, "machine-readable report");
    analyze->add_option("--expect", expects, "fail (exit 1) unless the verdict holds");
    analyze->add_option("--budget", budget, "triple-inspection budget");

    auto* gen = app.add_subcommand("generate", "emit a named example graph");
    gen->add_option("name", genName,
                    "cycle|complete|complete_bipartite|petersen|heawood|biplane_2_8_4_3|grid_gq")
        ->required();
    gen->add_option("params", genParams, "numeric parameters of the family");
    gen->add_flag("--subdivide", subdivide, "emit the subdivision of the graph");
    gen->add_option("-o,--output", outFile, "output file (default stdout)");

    auto* feas = app.add_subcommand("feasible", "validate an intersection array");
    feas->add_option("--array", arrayText, "array as \"b0,b1,..;c1,c2,..\"")->required();
    feas->add_flag("--dual", wantDual, "print the derived opposite array");
    feas->add_flag("--json", asJson, "machine-readable report");
    feas->add_option("--expect", expects, "feasible|infeasible");

    auto* enumCmd = app.add_subcommand("enumerate", "list candidate homogeneous array families");
    enumCmd->add_option("--D", D, "eccentricity (3, 4 or 5)")->required();
    enumCmd->add_option("--k-max", kMax, "bound on the Y valency")->required();
    enumCmd->add_option("--kprime-max", kprimeMax, "bound on the Y' valency (default k-max)");
    enumCmd->add_flag("--json", asJson, "machine-readable report");
    enumCmd->add_flag("--rejected", showRejected, "also list near-misses with their violations");

    auto* search = app.add_subcommand("search", "try to build a graph from an array pair");
    search->add_option("--arrayY", arrYText, "array of the class containing the root")->required();
    search->add_option("--arrayYp", arrPText, "array of the other class")->required();
    search->add_option("--budget", searchNodes, "node budget");
    search->add_option("--seconds", searchSeconds, "time budget");
    search->add_option("--max-vertices", maxVertices, "vertex-count guard");
    search->add_option("-o,--output", outFile, "write the found graph here");
    search->add_option("--expect", expects, "found|exhausted|timeout|infeasible");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return runAnalyze(graphFile, asJson, expects, budget);
        if (*gen) return runGenerate(genName, genParams, subdivide, outFile);
        if (*feas) return runFeasible(arrayText, wantDual, asJson, expects);
        if (*enumCmd)
            return runEnumerate(D, kMax, kprimeMax > 0 ? kprimeMax : kMax, asJson, showRejected);
        if (*search)
            return runSearch(arrYText, arrPText, searchNodes, searchSeconds, maxVertices, outFile,
                             expects);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const biregular::NotConnectedError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const biregular::NotBipartiteError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
