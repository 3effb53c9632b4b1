// Acceptance suite: one line per criterion. Known paper defects are asserted
// to fail in exactly the documented way and marked as expected; any other
// deviation fails the binary.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "mgs/chordal_dp.hpp"
#include "mgs/exact.hpp"
#include "mgs/io.hpp"
#include "mgs/reductions.hpp"
#include "mgs/solid_grid.hpp"
#include "oracles.hpp"

using namespace mgs;
using namespace mgs::test;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, Clock::time_point t0,
            const std::string& detail = "") {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  Clock::now() - t0)
                  .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)";
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

// a failure that matches the documented paper defect: counted separately
void report_expected_failure(const std::string& name, bool failed_as_documented,
                             Clock::time_point t0, const std::string& detail) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  Clock::now() - t0)
                  .count();
    if (failed_as_documented) {
        std::cout << "[FAIL, expected: paper defect — see decisions ledger] "
                  << name << " (" << ms << " ms) — " << detail << "\n";
    } else {
        std::cout << "[FAIL] " << name << " (" << ms
                  << " ms) — defect did not manifest as documented: " << detail
                  << "\n";
        ++failures;
    }
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
    return io::random_connected_graph(n, p, rng);
}

// ------------------------------------------------------------ criterion 1

void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;
    long long checked = 0;

    // exhaustive labeled graphs for n <= 6
    for (int n = 2; n <= 6 && ok; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << bits) && ok; ++mask) {
            std::vector<Edge> edges;
            int b = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++b)
                    if ((mask >> b) & 1) edges.emplace_back(u, v);
            Graph g(n, edges);
            if (!is_connected(g)) continue;
            auto dist = all_pairs_distances(g);
            for (int u = 0; u < n && ok; ++u)
                for (int v = u; v < n && ok; ++v) {
                    ++checked;
                    if (interval_between(g, u, v, &dist) !=
                        oracle_interval_between(g, u, v))
                        ok = false;
                }
        }
    }
    // random samples for n = 7, 8
    std::mt19937_64 rng(10101);
    for (int n : {7, 8}) {
        for (int iter = 0; iter < 500 && ok; ++iter) {
            Graph g = random_connected(rng, n, 0.4);
            auto dist = all_pairs_distances(g);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int s = 0; s < 6 && ok; ++s) {
                int u = pick(rng), v = pick(rng);
                ++checked;
                if (interval_between(g, u, v, &dist) !=
                    oracle_interval_between(g, u, v))
                    ok = false;
            }
        }
    }
    report("criterion 1: interval_between equals explicit path enumeration",
           ok, t0, std::to_string(checked) + " pairs");
}

// ------------------------------------------------------------ criterion 2

void criterion_2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(20202);
    int instances = 0;
    while (instances < 300 && ok) {
        int xs = 1 + int(rng() % 3);
        int ls = 1 + int(rng() % 3);
        int rs = 1 + int(rng() % 3);
        if (xs + ls + rs > 10) continue;
        int n = xs + ls + rs;
        std::vector<Edge> edges;
        for (int i = 0; i < xs; ++i)
            for (int j = i + 1; j < xs; ++j) edges.emplace_back(i, j);
        auto side = [&](int base, int count) {
            for (int i = 0; i < count; ++i)
                for (int j = i + 1; j < count; ++j)
                    if (rng() % 2) edges.emplace_back(base + i, base + j);
            for (int i = 0; i < count; ++i)
                for (int j = 0; j < xs; ++j)
                    if (rng() % 2) edges.emplace_back(base + i, j);
        };
        side(xs, ls);
        side(xs + ls, rs);
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        ++instances;
        VertexSet x(n);
        for (int i = 0; i < xs; ++i) x.insert(i);
        auto dist = all_pairs_distances(g);
        for (int u = xs; u < xs + ls && ok; ++u)
            for (int v = xs + ls; v < n && ok; ++v) {
                auto a = close_set(g, u, x, &dist);
                auto b = close_set(g, v, x, &dist);
                if ((interval_between(g, u, v, &dist) & x) !=
                    covered_through_cutset(a.members, b.members, x))
                    ok = false;
            }
    }
    report("criterion 2: clique-cutset law on planted cutsets", ok, t0,
           "300 instances");
}

// ------------------------------------------------------------ criterion 3

void criterion_3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(30303);
    int instances = 0;
    while (instances < 200 && ok) {
        int n = 3 + int(rng() % 10);
        Graph g = random_connected(rng, n, n <= 7 ? 0.35 : 0.25);
        ++instances;
        if (min_geodetic_blocks(g).size != min_geodetic_bruteforce(g).size)
            ok = false;
    }
    report("criterion 3: block solver equals brute force", ok, t0,
           "200 graphs");
}

// ------------------------------------------------------------ criterion 4

void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    // named small values
    {
        auto g33 = make_full_grid(3, 3);
        auto p5 = make_full_grid(5, 1);
        if (solve_solid_grid(g33.graph, g33.embedding).size != 2) ok = false;
        if (solve_solid_grid(p5.graph, p5.embedding).size != 2) ok = false;
    }
    // all full grids up to 4x5
    for (int cols = 1; cols <= 4 && ok; ++cols)
        for (int rows = 1; rows <= 5 && ok; ++rows) {
            if (cols * rows <= 1) continue;
            auto fix = make_full_grid(cols, rows);
            auto fast = solve_solid_grid(fix.graph, fix.embedding);
            if (fast.size != min_geodetic_bruteforce(fix.graph).size) ok = false;
            if (fast.size != solid_grid_lower_bound(fix.graph, fix.embedding))
                ok = false;
        }
    // 100 random polyominoes with at most 22 vertices
    std::mt19937_64 rng(40404);
    int instances = 0;
    while (instances < 100 && ok) {
        auto inst = io::random_solid_grid(2 + int(rng() % 11), rng());
        if (inst.graph.n() > 22) continue;
        ++instances;
        auto fast = solve_solid_grid(inst.graph, inst.embedding);
        if (fast.size != min_geodetic_bruteforce(inst.graph).size) ok = false;
        if (fast.size != solid_grid_lower_bound(inst.graph, inst.embedding))
            ok = false;
    }
    report("criterion 4: solid-grid solver equals brute force", ok, t0,
           "full grids to 4x5 + 100 polyominoes");
}

// ------------------------------------------------------------ criterion 5

void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;

    // named examples
    DpOptions k4opts;
    k4opts.omega_cap_chordal = 4;
    if (dp_min_geodetic_chordal(make_complete(4), {}, k4opts).size != 4)
        ok = false;
    if (dp_min_geodetic_chordal(make_path(3)).size != 2) ok = false;

    // trees: answer equals the leaf count
    std::mt19937_64 rng(50505);
    for (int iter = 0; iter < 10 && ok; ++iter) {
        int n = 5 + int(rng() % 10);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(int(rng() % v), v);
        Graph g(n, edges);
        int leaves = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) ++leaves;
        auto dp = dp_min_geodetic_chordal(g);
        if (dp.size != leaves) ok = false;
        if (dp.size != min_geodetic_bruteforce(g).size) ok = false;
    }

    // 50 random chordal graphs, n <= 14, omega <= 3
    for (std::uint64_t seed = 1; seed <= 50 && ok; ++seed) {
        int n = 8 + int(seed % 7);
        Graph g = io::random_chordal(n, 3, seed * 977 + 11);
        auto dp = dp_min_geodetic_chordal(g);
        auto brute = min_geodetic_bruteforce(g);
        if (dp.size != brute.size || !is_geodetic(g, dp.set)) ok = false;
    }
    report("criterion 5: chordal DP equals brute force", ok, t0,
           "50 random chordal + K4, P3, trees");
}

// ------------------------------------------------------------ criterion 6

void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 50 && ok; ++seed) {
        int n = 8 + int(seed % 7);
        auto rep = io::random_interval_rep(n, seed * 131 + 7, 8);
        std::vector<RInterval> ivs;
        for (auto& [lo, hi] : rep) ivs.push_back({lo, hi, ""});
        Graph g = intersection_graph(ivs);
        auto dp = dp_min_geodetic_interval(rep);
        auto brute = min_geodetic_bruteforce(g);
        if (dp.size != brute.size || !is_geodetic(g, dp.set)) ok = false;

        // family completeness: every close set of every vertex w.r.t. every
        // maximal clique belongs to the family
        auto dist = all_pairs_distances(g);
        for (const auto& clique : interval_maximal_cliques(rep)) {
            VertexSet x(g.n());
            for (int v : clique) x.insert(v);
            auto fam = interval_family_A(x, rep);
            for (int y = 0; y < g.n() && ok; ++y) {
                auto cs = close_set(g, y, x, &dist);
                bool found = false;
                for (const auto& s : fam)
                    if (s == cs.members) found = true;
                if (!found) ok = false;
            }
        }
    }
    report("criterion 6: interval DP equals brute force + family completeness",
           ok, t0, "50 random interval graphs");
}

// ------------------------------------------------------------ criterion 7

CnfFormula acceptance_formula(int n, int m) {
    CnfFormula f;
    f.n = n;
    for (int j = 0; j < m; ++j) {
        int a = (j % n) + 1;
        int b = ((j + 1) % n) + 1;
        int c = ((j + 2) % n) + 1;
        f.clauses.push_back({a, j % 2 == 0 ? -b : b, c});
    }
    return f;
}

void criterion_7() {
    auto t0 = Clock::now();
    bool counts_ok = true, paths_ok = true, connected_ok = true,
         star_free_ok = true, track_cover_ok = true;
    bool imply_holds_unchained = true, imply_fails_chained_only = true;

    for (auto [n, m] : std::vector<std::pair<int, int>>{
             {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        auto inst = sat_to_intervals(acceptance_formula(n, m));
        if (int(inst.tracks.size()) != 2 + 4 * n + 35 * m) counts_ok = false;
        if (inst.point_interval_count() != 4 + 6 * n + 52 * m)
            counts_ok = false;

        Graph g = intersection_graph(inst);
        if (!is_connected(g)) connected_ok = false;
        if (has_induced_star(g, 5)) star_free_ok = false;

        for (const auto& tr : inst.tracks) {
            for (size_t i = 0; i + 1 < tr.intervals.size(); ++i)
                if (inst.intervals[tr.intervals[i]].hi !=
                    inst.intervals[tr.intervals[i + 1]].lo)
                    paths_ok = false;
            for (size_t i = 0; i < tr.intervals.size() && paths_ok; ++i)
                for (size_t j = i + 2; j < tr.intervals.size() && paths_ok; ++j)
                    if (g.has_edge(tr.intervals[i], tr.intervals[j]))
                        paths_ok = false;
        }

        int o = inst.id_of("o");
        for (size_t t = 0; t < inst.tracks.size(); ++t) {
            int tail = inst.id_of("tail[t" + std::to_string(t) + "]");
            auto iv = interval_between(g, o, tail);
            for (int member : inst.tracks[t].intervals)
                if (!iv.contains(member)) track_cover_ok = false;
        }

        // prp:imply-cover per implication gadget; the chained ones (whose
        // root is itself an implication target) carry the documented defect
        for (const auto& [name, q] : inst.named) {
            if (name.rfind("s[", 0) != 0) continue;
            std::string qname = name.substr(2, name.size() - 3);
            int qid = inst.id_of(qname);
            int s = inst.id_of("s[" + qname + "]");
            int r = inst.id_of("r[" + qname + "]");
            // recover p: q names are x[i] (p = top), ~x[i] (p = x[i]),
            // a'/b'/c'[j] (p = unprimed)
            std::string pname;
            bool chained = false;
            if (qname[0] == '~') {
                pname = qname.substr(1);
                chained = true;
            } else if (qname[0] == 'x') {
                pname = "top";
            } else {
                pname = qname;
                pname.erase(pname.find('\''), 1);
            }
            int p = inst.id_of(pname);
            bool covers = interval_between(g, p, s).contains(qid);
            if (chained && covers) imply_fails_chained_only = false;
            if (!chained && !covers) imply_holds_unchained = false;
            if (!interval_between(g, o, s).contains(r))
                imply_holds_unchained = false;
        }
    }

    report("criterion 7a: track/point counts 2+4n+35m, 4+6n+52m", counts_ok, t0);
    report("criterion 7b: tracks induce paths", paths_ok, t0);
    report("criterion 7c: intersection graph connected", connected_ok, t0);
    report("criterion 7d: no induced K_{1,5}", star_free_ok, t0);
    report("criterion 7e: prp:track-covered instance-wide", track_cover_ok, t0);
    report("criterion 7f: prp:imply-cover where the root is not a chained "
           "implication target",
           imply_holds_unchained, t0);
    report_expected_failure(
        "criterion 7g: prp:imply-cover on chained implication gadgets",
        imply_fails_chained_only, t0,
        "q ∉ I(p, s_q) via the r-line shortcut, exactly as documented");
}

// ------------------------------------------------------------ criterion 8

void criterion_8() {
    auto t0 = Clock::now();
    bool size_ok = true;
    bool defect_as_documented = true;

    for (auto [n, m] : std::vector<std::pair<int, int>>{
             {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        CnfFormula f = acceptance_formula(n, m);
        // exhaustive satisfying-assignment search (n <= 3)
        std::vector<bool> assignment;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> cand(n + 1, false);
            for (int i = 1; i <= n; ++i) cand[i] = (mask >> (i - 1)) & 1;
            bool sat = true;
            for (const auto& cl : f.clauses) {
                bool any = false;
                for (int lit : cl)
                    if ((lit > 0) == cand[std::abs(lit)]) any = true;
                if (!any) sat = false;
            }
            if (sat) {
                assignment = cand;
                break;
            }
        }
        if (assignment.empty()) continue;

        auto inst = sat_to_intervals(f);
        auto witness = sat_witness_geodetic(inst, assignment);
        if (witness.size() != 4 + 7 * n + 58 * m) size_ok = false;

        Graph g = intersection_graph(inst);
        auto closure = interval_closure(g, witness);
        // predicted uncovered set: negations of true-assigned variables and
        // the alpha intervals of AND gadgets paired with a true literal
        std::set<std::string> predicted;
        for (int i = 1; i <= n; ++i)
            if (assignment[i]) predicted.insert("~x[" + std::to_string(i) + "]");
        for (const auto& [name, id] : inst.named) {
            if (name.rfind("alpha[", 0) != 0) continue;
            std::string inner = name.substr(6, name.size() - 7);
            std::string lit = inner.substr(inner.find(',') + 1);
            bool neg = lit[0] == '~';
            int var = std::stoi(lit.substr(neg ? 3 : 2));
            if (assignment[var] != neg) predicted.insert(name);
        }
        bool geodetic = closure == VertexSet::universe(g.n());
        if (geodetic) defect_as_documented = false;
        for (int v = 0; v < g.n(); ++v)
            if (!closure.contains(v) &&
                !predicted.count(inst.intervals[v].name))
                defect_as_documented = false;
    }

    report("criterion 8a: witness size is exactly 4+7n+58m", size_ok, t0);
    report_expected_failure(
        "criterion 8b: witness passes is_geodetic",
        defect_as_documented, t0,
        "uncovered = chained targets + true-literal alphas, as documented");
    std::cout << "[NOTE] criterion 8: the unsatisfiable direction "
                 "(minimum > 4+7n+58m) is declared NOT verifiable at desk "
                 "scale.\n";
}

// ------------------------------------------------------------ criterion 9

void criterion_9() {
    auto t0 = Clock::now();
    auto rs = preset_rotation_k4();
    auto red = vc_to_partial_grid(rs);
    const Graph& g = red.graph;

    int maxdeg = 0;
    for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    report("criterion 9a: f1(K4) has maximum degree at most 6", maxdeg <= 6,
           t0);

    // brute force restricted to supersets of the 12 mandatory z-vertices
    auto brute = min_geodetic_bruteforce(g);
    report("criterion 9b: g(f1(K4)) = 15 = 3|V|+3",
           brute.optimal && brute.size == 15, t0,
           "found " + std::to_string(brute.size));

    report_expected_failure(
        "criterion 9c: f1(K4) has girth 4", girth(g) == 3, t0,
        "girth is 3: the y-cross edges of each source triangle close a "
        "triangle under every plane rotation system");
}

// ----------------------------------------------------------- criterion 10

void criterion_10() {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(60606);
    int graphs = 0;
    while (graphs < 100 && ok) {
        int n = 3 + int(rng() % 6);
        Graph g = random_connected(rng, n, 0.45);
        ++graphs;
        auto dist = all_pairs_distances(g);
        for (std::uint32_t mask = 1; mask < (1u << n) && ok; ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.insert(v);
            if (!is_geodetic(g, s, &dist) || !is_edge_geodetic(g, s, &dist))
                continue;
            for (int k : {2, 3}) {
                Graph h = subdivide(g, k);
                VertexSet hs(h.n());
                s.for_each([&](int v) { hs.insert(v); });
                if (!is_geodetic(h, hs)) ok = false;
            }
        }
    }
    report("criterion 10: geodetic+edge-geodetic sets survive subdivision",
           ok, t0, "100 graphs, k in {2,3}");
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    auto total = std::chrono::duration_cast<std::chrono::seconds>(
                     Clock::now() - t0)
                     .count();
    std::cout << "total: " << total << " s, unexpected failures: " << failures
              << "\n";
    return failures == 0 ? 0 : 1;
}
