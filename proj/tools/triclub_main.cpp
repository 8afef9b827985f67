#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "triclub/dp_treewidth.hpp"
#include "triclub/io.hpp"
#include "triclub/kernel.hpp"
#include "triclub/oracle.hpp"
#include "triclub/param_algos.hpp"
#include "triclub/testkit.hpp"

using nlohmann::json;
using namespace triclub;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoRoute = 2;
constexpr int kExitResourceCap = 3;

constexpr int kOracleCap = 20;
constexpr int kCoverCap = 10;
constexpr int kHIndexCap = 3;
constexpr int kHeuristicWidthCap = 4;
constexpr int kCheapParamCap = 2000;  // skip apex/heuristic probes on larger graphs

GraphFormat detect_format(const std::string& path, const std::string& requested) {
    if (!requested.empty()) return format_from_name(requested);
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".gr")) return GraphFormat::pace_gr;
    if (ends_with(".dimacs") || ends_with(".col")) return GraphFormat::dimacs;
    return GraphFormat::edge_list;
}

int count_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

json witness_labels(const ParsedGraph& pg, const VertexSet& s) {
    json arr = json::array();
    for (int v : s.to_vector()) arr.push_back(pg.labels[v]);
    return arr;
}

struct SolveOutcome {
    std::string algorithm;
    SolveResult result;
};

int run_gen(const std::string& kind, const json& args, const std::string& out_base) {
    GeneratedInstance inst;
    if (kind == "gnp") {
        inst.graph = gen_gnp(args["n"], args["p"], args["seed"]);
        inst.seed = args["seed"];
    } else if (kind == "tw") {
        inst = gen_bounded_treewidth(args["n"], args["w"], args["edge_keep"], args["seed"]);
    } else {
        inst = gen_apex_bipartite(args["left"], args["right"], args["p"], args["apex_p"],
                                  args["seed"]);
    }
    std::vector<std::string> labels;
    for (int v = 1; v <= inst.graph.vertex_count(); ++v) labels.push_back(std::to_string(v));
    {
        std::ofstream gr(out_base + ".gr");
        gr << write_graph(inst.graph, labels, GraphFormat::pace_gr);
    }
    if (inst.decomposition) {
        std::ofstream tdf(out_base + ".td");
        tdf << write_td(*inst.decomposition, labels);
    }
    json meta;
    meta["seed"] = inst.seed;
    meta["n"] = inst.graph.vertex_count();
    meta["m"] = inst.graph.edge_count();
    for (auto& [k, v] : inst.certificates) meta[k] = v;
    std::cout << meta.dump(2) << "\n";
    return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for the maximum vertex r-triangle s-club problem"};
    app.require_subcommand(0, 1);

    std::string input, format_name, algorithm = "auto", td_path, output = "kernel", dot_path;
    int r = 1, s = 2, ell = 1;
    long long max_states = 5'000'000;
    std::uint64_t seed = 1;

    app.add_option("--input", input, "graph file");
    app.add_option("--format", format_name, "edge-list | dimacs | pace-gr (default: by extension)");
    app.add_option("--r", r, "triangle requirement (>= 1)");
    app.add_option("--s", s, "club diameter bound (>= 2)")->default_val(2);
    app.add_option("--ell", ell, "target solution size");
    app.add_option("--algorithm", algorithm,
                   "auto | oracle | treewidth | vc | hindex | apex | kernel-only");
    app.add_option("--td", td_path, "PACE .td tree decomposition file");
    app.add_option("--seed", seed, "seed (generators)");
    app.add_option("--max-states", max_states, "DP state cap");
    app.add_option("--output", output, "output base for kernel-only files");
    app.add_option("--dot", dot_path, "write the witness subgraph as DOT");

    auto* gen = app.add_subcommand("gen", "emit a generated instance");
    gen->fallthrough();
    std::string gen_out = "instance";
    int gn = 10, gw = 2, gleft = 5, gright = 5;
    double gp = 0.5, gkeep = 1.0, gapexp = 0.5;
    gen->add_option("--out", gen_out, "output base path");
    gen->add_option("--seed", seed, "generator seed");
    auto* gnp = gen->add_subcommand("gnp", "Erdős–Rényi graph");
    gnp->fallthrough();
    gnp->add_option("--n", gn);
    gnp->add_option("--p", gp);
    auto* gtw = gen->add_subcommand("tw", "partial w-tree with its decomposition");
    gtw->fallthrough();
    gtw->add_option("--n", gn);
    gtw->add_option("--w", gw);
    gtw->add_option("--edge-keep", gkeep);
    auto* gapex = gen->add_subcommand("apex", "bipartite graph plus an apex vertex");
    gapex->fallthrough();
    gapex->add_option("--left", gleft);
    gapex->add_option("--right", gright);
    gapex->add_option("--p", gp);
    gapex->add_option("--apex-p", gapexp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            json args{{"n", gn},        {"p", gp},           {"w", gw},
                      {"edge_keep", gkeep}, {"left", gleft}, {"right", gright},
                      {"apex_p", gapexp},   {"seed", seed}};
            std::string kind = gnp->parsed() ? "gnp" : gtw->parsed() ? "tw" : "apex";
            if (!gnp->parsed() && !gtw->parsed() && !gapex->parsed()) {
                std::cerr << "gen: pick one of gnp | tw | apex\n";
                return kExitInputError;
            }
            return run_gen(kind, args, gen_out);
        }

        if (input.empty()) {
            std::cerr << "--input is required\n";
            return kExitInputError;
        }
        auto t0 = std::chrono::steady_clock::now();

        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot open " << input << "\n";
            return kExitInputError;
        }
        ParsedGraph pg = parse_graph(in, detect_format(input, format_name));
        ProblemInstance inst{pg.graph, r, s, ell};
        inst.validate();
        const Graph& g = pg.graph;
        int n = g.vertex_count();

        std::optional<TreeDecomposition> td;
        if (!td_path.empty()) {
            std::ifstream tdin(td_path);
            if (!tdin) {
                std::cerr << "cannot open " << td_path << "\n";
                return kExitInputError;
            }
            TreeDecomposition parsed = parse_td(tdin, pg);
            TdViolation v = validate(parsed, g);
            if (!v.ok()) {
                std::cerr << "invalid tree decomposition: " << to_string(v) << "\n";
                return kExitInputError;
            }
            td = parsed;
        }

        // Cheap structural measurements for the report and for dispatch.
        json params;
        int fes = (int)g.edge_count() - n + count_components(g);
        params["fes"] = fes;
        HIndexDecomposition hi = h_index(g);
        params["h_index"] = hi.k;
        std::optional<int> apex;
        if (n <= kCheapParamCap) apex = find_apex(g);
        params["apex"] = apex ? json(pg.labels[*apex]) : json(nullptr);
        std::optional<TreeDecomposition> heuristic_td;
        if (!td && n <= kCheapParamCap && s == 2 && algorithm != "kernel-only" &&
            (algorithm == "auto" || algorithm == "treewidth")) {
            heuristic_td = heuristic_decomposition(g);
        }
        params["td_width"] = td ? json(td->width())
                                : (heuristic_td ? json(heuristic_td->width()) : json(nullptr));

        json report;
        report["schema"] = 1;
        report["instance"] = {{"n", n}, {"m", g.edge_count()}, {"r", r}, {"s", s}, {"ell", ell}};
        report["parameters"] = params;

        if (algorithm == "kernel-only") {
            KernelResult ker = kernelize(inst);
            std::vector<std::string> klabels;
            for (int v = 1; v <= ker.instance.graph.vertex_count(); ++v)
                klabels.push_back(std::to_string(v));
            {
                std::ofstream out_gr(output + ".gr");
                out_gr << write_graph(ker.instance.graph, klabels, GraphFormat::pace_gr);
            }
            json kj;
            kj["n"] = ker.instance.graph.vertex_count();
            kj["m"] = ker.instance.graph.edge_count();
            kj["r"] = ker.instance.r;
            kj["s"] = ker.instance.s;
            kj["ell"] = ker.instance.ell;
            kj["trivial_no"] = ker.trivial_no;
            kj["case"] =
                ker.case_taken == KernelResult::Case::r_exceeds_fes ? "r-exceeds-fes" : "main";
            json kept = json::array();
            for (std::size_t i = 0; i < ker.kept_vertices.size(); ++i)
                kept.push_back({klabels[i], pg.labels[ker.kept_vertices[i]]});
            kj["kept_vertices"] = kept;
            kj["file"] = output + ".gr";
            report["kernel"] = kj;
            report["algorithm"] = "kernel-only";
            report["best_size"] = nullptr;
            report["witness"] = json::array();
            report["verified"] = true;
            report["wall_time_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            std::cout << report.dump(2) << "\n";
            return kExitSolved;
        }

        auto try_route = [&](const std::string& route) -> std::optional<SolveOutcome> {
            if (route == "oracle") {
                if (n > kOracleCap) {
                    if (algorithm != "auto") throw ParameterTooLarge("graph above oracle cap");
                    return std::nullopt;
                }
                auto res = max_club_bruteforce(g, r, s, n);
                return SolveOutcome{"oracle", {res.best_size, res.witness}};
            }
            if (s != 2) throw ParameterTooLarge("only the oracle handles s != 2");
            if (route == "apex") {
                if (!apex) {
                    if (algorithm != "auto")
                        throw ParameterTooLarge("no single-vertex deletion to bipartite found");
                    return std::nullopt;
                }
                return SolveOutcome{"apex", solve_apex(g, *apex, r, ell).result};
            }
            if (route == "treewidth") {
                const TreeDecomposition* use = td ? &*td : nullptr;
                if (!use && heuristic_td && heuristic_td->width() <= kHeuristicWidthCap)
                    use = &*heuristic_td;
                if (!use && algorithm != "auto" && heuristic_td) use = &*heuristic_td;
                if (!use) {
                    if (algorithm != "auto") throw ParameterTooLarge("no usable decomposition");
                    return std::nullopt;
                }
                DpLimits lim{max_states};
                return SolveOutcome{"treewidth", solve_treewidth(g, *use, r, ell, lim)};
            }
            if (route == "vc") {
                auto cover = minimum_vertex_cover(g, kCoverCap);
                if (!cover) {
                    if (algorithm != "auto")
                        throw ParameterTooLarge("no vertex cover within the budget");
                    return std::nullopt;
                }
                return SolveOutcome{"vc", solve_vc_with_cover(g, *cover, r, s, ell)};
            }
            if (route == "hindex") {
                if (hi.k > kHIndexCap) {
                    if (algorithm != "auto") throw ParameterTooLarge("h-index above cap");
                    return std::nullopt;
                }
                return SolveOutcome{"hindex", solve_hindex(g, r, ell, kHIndexCap)};
            }
            throw std::invalid_argument("unknown algorithm: " + route);
        };

        std::optional<SolveOutcome> outcome;
        try {
            if (algorithm == "auto") {
                std::vector<std::string> routes =
                    s == 2 ? std::vector<std::string>{"apex", "treewidth", "vc", "hindex", "oracle"}
                           : std::vector<std::string>{"oracle"};
                for (const auto& route : routes) {
                    try {
                        outcome = try_route(route);
                    } catch (const ResourceLimit&) {
                        outcome.reset();
                    }
                    if (outcome) break;
                }
                if (!outcome) {
                    report["algorithm"] = "none";
                    report["error"] = "no tractable route within parameter caps";
                    std::cout << report.dump(2) << "\n";
                    return kExitNoRoute;
                }
            } else {
                outcome = try_route(algorithm);
                if (!outcome) throw ParameterTooLarge("route not applicable");
            }
        } catch (const ParameterTooLarge& e) {
            report["algorithm"] = algorithm;
            report["error"] = e.what();
            std::cout << report.dump(2) << "\n";
            return kExitNoRoute;
        } catch (const ResourceLimit& e) {
            report["algorithm"] = algorithm;
            report["error"] = e.what();
            std::cout << report.dump(2) << "\n";
            return kExitResourceCap;
        }

        bool verified = true;
        if (outcome->result.best_size > 0) {
            ProblemInstance check{g, r, s, outcome->result.best_size};
            verified = verify_solution(check, outcome->result.witness).ok();
        }
        report["algorithm"] = outcome->algorithm;
        report["best_size"] = outcome->result.best_size;
        report["witness"] = witness_labels(pg, outcome->result.witness);
        report["verified"] = verified;
        report["decision"] = outcome->result.best_size >= ell ? "yes" : "no";
        report["wall_time_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (!dot_path.empty()) {
            std::ofstream dot(dot_path);
            dot << write_dot(g, pg.labels, outcome->result.witness);
        }
        std::cout << report.dump(2) << "\n";
        if (outcome->result.best_size > 0 && !verified) {
            std::cerr << "internal error: witness failed re-verification\n";
            return kExitResourceCap;
        }
        return kExitSolved;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
