// Command-line surface: solvers, checkers, instance generators, and the
// cross-validating benchmark harness.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "mgs/chordal_dp.hpp"
#include "mgs/exact.hpp"
#include "mgs/io.hpp"
#include "mgs/reductions.hpp"
#include "mgs/solid_grid.hpp"

using namespace mgs;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

nlohmann::ordered_json result_document(const SolveResult& r,
                                       std::optional<int> lower_bound = {}) {
    nlohmann::ordered_json doc;
    doc["method"] = r.method;
    doc["size"] = r.size;
    doc["vertices"] = r.set.to_vector();
    doc["optimal"] = r.optimal;
    if (lower_bound) doc["lower_bound"] = *lower_bound;
    doc["elapsed_ms"] = r.elapsed.count();
    return doc;
}

SolveBudget budget_from(std::int64_t budget_ms, std::uint64_t max_candidates) {
    SolveBudget b;
    if (budget_ms > 0) b.time_limit = std::chrono::milliseconds(budget_ms);
    if (max_candidates > 0) b.max_candidates = max_candidates;
    return b;
}

struct SolveArgs {
    std::string input;
    std::string method = "auto";
    std::int64_t budget_ms = 0;
    std::uint64_t max_candidates = 0;
    int omega_cap = 0;
};

int run_solve(const SolveArgs& args) {
    SolveBudget budget = budget_from(args.budget_ms, args.max_candidates);
    DpOptions dp_opts;
    if (args.omega_cap > 0) {
        dp_opts.omega_cap_chordal = args.omega_cap;
        dp_opts.omega_cap_interval = args.omega_cap;
    }

    std::string text;
    try {
        text = slurp(args.input);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        SolveResult result;
        std::optional<int> lower;
        if (args.method == "interval") {
            auto rep = io::parse_intervals(text);
            result = dp_min_geodetic_interval(rep, budget, dp_opts);
        } else {
            auto doc = io::parse_graph(text);
            const Graph& g = doc.graph;
            if (args.method == "brute") {
                result = min_geodetic_bruteforce(g, budget);
            } else if (args.method == "blocks") {
                result = min_geodetic_blocks(g, budget);
            } else if (args.method == "solid-grid") {
                if (!doc.embedding)
                    throw std::invalid_argument(
                        "solid-grid requires `v` coordinate lines");
                result = solve_solid_grid(g, *doc.embedding);
                lower = solid_grid_lower_bound(g, *doc.embedding);
            } else if (args.method == "chordal") {
                result = dp_min_geodetic_chordal(g, budget, dp_opts);
            } else if (args.method == "auto") {
                if (doc.embedding && validate_solid_grid(g, *doc.embedding)) {
                    result = solve_solid_grid(g, *doc.embedding);
                    lower = solid_grid_lower_bound(g, *doc.embedding);
                } else if (g.n() > 0 && is_connected(g) &&
                           chordality_and_peo(g).is_chordal) {
                    try {
                        result = dp_min_geodetic_chordal(g, budget, dp_opts);
                    } catch (const CapExceededError&) {
                        result = min_geodetic_blocks(g, budget);
                    }
                } else {
                    result = min_geodetic_blocks(g, budget);
                }
            } else {
                throw std::invalid_argument("unknown method " + args.method);
            }
        }
        std::cout << result_document(result, lower).dump(2) << "\n";
        return result.optimal ? kExitOk : kExitBudget;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceededError& e) {
        std::cerr << "warning: " << e.what() << "\n";
        SolveResult trivial;
        trivial.method = args.method;
        trivial.optimal = false;
        std::cout << result_document(trivial).dump(2) << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

struct CheckArgs {
    std::string input;
    std::vector<int> set;
    bool edge_geodetic = false;
    bool do_certify = false;
    std::int64_t budget_ms = 0;
};

int run_check(const CheckArgs& args) {
    try {
        auto doc = io::parse_graph(slurp(args.input));
        const Graph& g = doc.graph;
        VertexSet s(g.n());
        for (int v : args.set) {
            if (v < 0 || v >= g.n())
                throw std::invalid_argument("vertex id out of range");
            s.insert(v);
        }
        nlohmann::ordered_json out;
        out["size"] = s.size();
        out["vertices"] = s.to_vector();
        out["geodetic"] = is_geodetic(g, s);
        if (args.edge_geodetic) out["edge_geodetic"] = is_edge_geodetic(g, s);
        if (args.do_certify) {
            auto rep = certify(g, s, true, budget_from(args.budget_ms, 0));
            out["certified_optimal"] =
                rep.optimality_checked ? nlohmann::ordered_json(rep.optimal)
                                       : nlohmann::ordered_json(nullptr);
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

struct GenerateArgs {
    std::string kind;
    std::string out = "instance";
    std::string cnf_path;
    std::string preset = "K4";
    int n = 10;
    int omega = 3;
    int cells = 8;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int run_generate(const GenerateArgs& args) {
    try {
        if (args.kind == "sat2interval") {
            auto f = parse_dimacs_cnf(slurp(args.cnf_path));
            auto inst = sat_to_intervals(f);
            spit(args.out + ".int", io::emit_intervals(inst));
            spit(args.out + ".meta.json", io::emit_instance_metadata(inst));
            nlohmann::ordered_json doc;
            doc["kind"] = args.kind;
            doc["intervals"] = inst.intervals.size();
            doc["tracks"] = inst.tracks.size();
            doc["point_intervals"] = inst.point_interval_count();
            doc["expected_bound"] = inst.expected_witness_bound();
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        if (args.kind == "vc2grid") {
            RotationSystem rs;
            if (args.preset == "K4") rs = preset_rotation_k4();
            else if (args.preset == "prism") rs = preset_rotation_prism();
            else throw std::invalid_argument("unknown preset " + args.preset);
            auto red = vc_to_partial_grid(rs);
            spit(args.out + ".gr", io::emit_graph(red.graph));
            spit(args.out + ".labels.json", io::emit_grid_labels(red));
            nlohmann::ordered_json doc;
            doc["kind"] = args.kind;
            doc["vertices"] = red.graph.n();
            doc["edges"] = red.graph.m();
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        if (!args.seed_set)
            throw std::invalid_argument("random generators require --seed");
        if (args.kind == "random-chordal") {
            Graph g = io::random_chordal(args.n, args.omega, args.seed);
            spit(args.out + ".gr", io::emit_graph(g));
        } else if (args.kind == "random-interval") {
            auto rep = io::random_interval_rep(args.n, args.seed);
            spit(args.out + ".int", io::emit_intervals(rep));
        } else if (args.kind == "random-solid-grid") {
            auto inst = io::random_solid_grid(args.cells, args.seed);
            spit(args.out + ".gr", io::emit_graph(inst.graph, &inst.embedding));
        } else {
            throw std::invalid_argument("unknown kind " + args.kind);
        }
        nlohmann::ordered_json doc;
        doc["kind"] = args.kind;
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

struct BenchArgs {
    std::string corpus;
    std::vector<std::string> methods{"brute"};
    std::int64_t budget_ms = 0;
};

int run_bench(const BenchArgs& args) {
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(args.corpus)) {
        auto ext = entry.path().extension().string();
        if (ext == ".gr" || ext == ".int") inputs.push_back(entry.path());
    }
    std::sort(inputs.begin(), inputs.end());

    bool disagreement = false;
    for (const auto& path : inputs) {
        std::string text = slurp(path.string());
        std::map<std::string, SolveResult> results;
        for (const auto& method : args.methods) {
            try {
                SolveResult r;
                if (path.extension() == ".int") {
                    if (method != "interval" && method != "brute") continue;
                    auto rep = io::parse_intervals(text);
                    if (method == "interval") {
                        r = dp_min_geodetic_interval(rep);
                    } else {
                        std::vector<RInterval> ivs;
                        for (auto& [lo, hi] : rep) ivs.push_back({lo, hi, ""});
                        r = min_geodetic_bruteforce(intersection_graph(ivs));
                    }
                } else {
                    auto doc = io::parse_graph(text);
                    if (method == "brute")
                        r = min_geodetic_bruteforce(doc.graph);
                    else if (method == "blocks")
                        r = min_geodetic_blocks(doc.graph);
                    else if (method == "chordal")
                        r = dp_min_geodetic_chordal(doc.graph);
                    else if (method == "solid-grid" && doc.embedding)
                        r = solve_solid_grid(doc.graph, *doc.embedding);
                    else
                        continue;
                }
                results[method] = r;
            } catch (const std::invalid_argument&) {
                // method does not apply to this instance
            } catch (const CapExceededError&) {
            }
        }
        std::ostringstream line;
        line << path.filename().string();
        int agreed_size = -1;
        for (const auto& [method, r] : results) {
            line << "  " << method << "=" << r.size << " (" << r.elapsed.count()
                 << "ms)";
            if (r.optimal) {
                if (agreed_size == -1) agreed_size = r.size;
                if (r.size != agreed_size) disagreement = true;
            }
        }
        std::cout << line.str() << "\n";
    }
    if (disagreement) {
        std::cerr << "error: exact methods disagree\n";
        return 1;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum geodetic set toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute a minimum geodetic set");
    solve->add_option("input", solve_args.input, "graph or interval file")
        ->required();
    solve->add_option("--method", solve_args.method,
                      "auto|brute|blocks|solid-grid|chordal|interval");
    solve->add_option("--budget-ms", solve_args.budget_ms, "time budget");
    solve->add_option("--max-candidates", solve_args.max_candidates,
                      "candidate budget");
    solve->add_option("--omega-cap", solve_args.omega_cap, "clique number cap");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "verify a geodetic set");
    check->add_option("input", check_args.input)->required();
    check->add_option("--set", check_args.set, "vertex ids")->required();
    check->add_flag("--edge-geodetic", check_args.edge_geodetic);
    check->add_flag("--certify", check_args.do_certify,
                    "exhaustively verify optimality");
    check->add_option("--budget-ms", check_args.budget_ms);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "emit instances");
    gen->add_option(
           "kind", gen_args.kind,
           "sat2interval|vc2grid|random-chordal|random-interval|random-solid-grid")
        ->required();
    gen->add_option("--out", gen_args.out, "output path prefix");
    gen->add_option("--cnf", gen_args.cnf_path, "DIMACS input for sat2interval");
    gen->add_option("--preset", gen_args.preset, "K4|prism");
    gen->add_option("--n", gen_args.n);
    gen->add_option("--omega", gen_args.omega);
    gen->add_option("--cells", gen_args.cells);
    gen->add_option("--seed", gen_args.seed)->each([&](const std::string&) {
        gen_args.seed_set = true;
    });

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run solvers over a corpus");
    bench->add_option("corpus", bench_args.corpus, "directory")->required();
    bench->add_option("--methods", bench_args.methods, "methods to compare");
    bench->add_option("--budget-ms", bench_args.budget_ms);

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return run_solve(solve_args);
    if (check->parsed()) return run_check(check_args);
    if (gen->parsed()) return run_generate(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
    return kExitOk;
}
