#include "mgs/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mgs {

// ---------------------------------------------------------------- DIMACS

CnfFormula parse_dimacs_cnf(const std::string& text) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int expected_clauses = 0;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, kind;
            if (!(ls >> p >> kind >> f.n >> expected_clauses) || kind != "cnf")
                throw std::invalid_argument("dimacs: bad problem line");
            header_seen = true;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw std::invalid_argument("dimacs: clause must have exactly 3 literals");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                if (std::abs(lit) < 1 || std::abs(lit) > f.n)
                    throw std::invalid_argument("dimacs: literal out of range");
                pending.push_back(lit);
            }
        }
    }
    if (!header_seen) throw std::invalid_argument("dimacs: missing problem line");
    if (!pending.empty()) throw std::invalid_argument("dimacs: unterminated clause");
    if (int(f.clauses.size()) != expected_clauses)
        throw std::invalid_argument("dimacs: clause count mismatch");
    return f;
}

// ----------------------------------------------------------- construction

int IntervalInstance::id_of(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end())
        throw std::invalid_argument("interval instance: unknown name " + name);
    return it->second;
}

int IntervalInstance::point_interval_count() const {
    int c = 0;
    for (const auto& iv : intervals)
        if (iv.is_point()) ++c;
    return c;
}

namespace {

std::string lit_name(int lit) {
    return (lit > 0 ? "x[" : "~x[") + std::to_string(std::abs(lit)) + "]";
}

class SatBuilder {
public:
    explicit SatBuilder(const CnfFormula& f) : formula_(f) {
        inst_.n = f.n;
        inst_.m = int(f.clauses.size());
        int base = inst_.n + inst_.m;
        // epsilon = 1/(n+m)^4; the degenerate empty formula keeps eps = 1
        inst_.epsilon = base > 0
            ? Rational(1, (std::int64_t)base * base * base * base)
            : Rational(1);
    }

    IntervalInstance build() {
        build_start();
        for (int i = 1; i <= inst_.n; ++i) {
            build_implication("top", lit_name(i));
            build_implication(lit_name(i), lit_name(-i));
        }
        for (int j = 0; j < inst_.m; ++j) build_clause(j);
        build_end();
        self_check();
        return std::move(inst_);
    }

private:
    const CnfFormula& formula_;
    IntervalInstance inst_;
    std::map<int, int> root_track_; // interval id -> track index
    int ext_counter_ = 0;

    const Rational& eps() const { return inst_.epsilon; }

    int add_interval(const Rational& lo, const Rational& hi, const std::string& name) {
        if (hi < lo) throw std::logic_error("interval builder: hi < lo at " + name);
        int id = int(inst_.intervals.size());
        inst_.intervals.push_back({lo, hi, name});
        if (!inst_.named.emplace(name, id).second)
            throw std::logic_error("interval builder: duplicate name " + name);
        return id;
    }

    Rational hi(int id) const { return inst_.intervals[id].hi; }
    Rational lo(int id) const { return inst_.intervals[id].lo; }

    Rational track_max(int t) const {
        return hi(inst_.tracks[t].intervals.back());
    }

    int new_track(std::vector<int> members, std::vector<int> roots) {
        int idx = int(inst_.tracks.size());
        inst_.tracks.push_back({std::move(members), std::move(roots)});
        for (int r : inst_.tracks[idx].roots) root_track_[r] = idx;
        return idx;
    }

    int track_of_root(const std::string& name) const {
        auto it = root_track_.find(inst_.id_of(name));
        if (it == root_track_.end())
            throw std::logic_error("interval builder: " + name + " is not a root");
        return it->second;
    }

    int pred_track(int t) const {
        int best = -1;
        for (int i = 0; i < int(inst_.tracks.size()); ++i) {
            if (i == t || !(track_max(i) < track_max(t))) continue;
            if (best == -1 || track_max(best) < track_max(i)) best = i;
        }
        return best;
    }

    int succ_track(int t) const {
        int best = -1;
        for (int i = 0; i < int(inst_.tracks.size()); ++i) {
            if (i == t || !(track_max(t) < track_max(i))) continue;
            if (best == -1 || track_max(i) < track_max(best)) best = i;
        }
        return best;
    }

    int top_track() const {
        int best = 0;
        for (int i = 1; i < int(inst_.tracks.size()); ++i)
            if (track_max(best) < track_max(i)) best = i;
        return best;
    }

    // Append `count` unit intervals to every track; ids per track returned.
    std::vector<std::array<int, 3>> extend_all(int count) {
        std::vector<std::array<int, 3>> ids(inst_.tracks.size(), {-1, -1, -1});
        for (int t = 0; t < int(inst_.tracks.size()); ++t) {
            for (int k = 0; k < count; ++k) {
                Rational m = track_max(t);
                int id = add_interval(m, m + Rational(1),
                                      "u[t" + std::to_string(t) + "#" +
                                          std::to_string(ext_counter_ + k) + "]");
                inst_.tracks[t].intervals.push_back(id);
                ids[t][k] = id;
            }
        }
        ext_counter_ += count;
        return ids;
    }

    void build_start() {
        int o = add_interval(Rational(1), Rational(1), "o");
        int uo = add_interval(Rational(1), Rational(2), "u[o]");
        Rational e1 = Rational(1) + eps();
        int top = add_interval(e1, e1, "top");
        int ut = add_interval(e1, e1 + Rational(1), "u[top]");
        new_track({uo}, {o});
        new_track({ut}, {top});
    }

    // Impl(p -> q): three-unit extension, the q/r/s intervals, two new tracks.
    int build_implication(const std::string& p, const std::string& q_name) {
        int p_id = inst_.id_of(p);
        if (p == "o")
            throw std::logic_error("implication gadget: root o not allowed");
        auto ext = extend_all(3);
        int tp = root_track_.at(p_id);
        int x = pred_track(tp);
        if (x == -1) throw std::logic_error("implication gadget: no preceding track");
        int xp = succ_track(tp);

        Rational theta = xp != -1 ? hi(ext[xp][0]) : hi(ext[tp][0]) + eps();
        Rational thetap = xp != -1 ? hi(ext[xp][1]) : hi(ext[tp][1]) + eps();

        int q = add_interval(Rational::midpoint(hi(ext[x][0]), hi(ext[tp][0])),
                             Rational::midpoint(hi(ext[tp][0]), theta), q_name);
        int r = add_interval(hi(q), Rational::midpoint(hi(ext[tp][1]), thetap),
                             "r[" + q_name + "]");
        int s = add_interval(hi(r), hi(r), "s[" + q_name + "]");

        int t = add_interval(hi(s), hi(s) + Rational(1), "t[" + q_name + "]");
        int t1 = add_interval(hi(q), Rational::midpoint(hi(ext[tp][1]), lo(s)),
                              "t1[" + q_name + "]");
        int t2 = add_interval(hi(t1), hi(t1) + Rational(1), "t2[" + q_name + "]");

        new_track({t1, t2}, {q});
        new_track({t}, {r, s});
        return q;
    }

    void build_covering(int j) {
        auto ext = extend_all(3);
        int t = top_track();
        std::string J = std::to_string(j + 1);
        Rational theta = lo(ext[t][0]) + eps();

        int a = add_interval(theta, theta + eps(), "a[" + J + "]");
        int b = add_interval(theta, theta + eps() * Rational(2), "b[" + J + "]");
        int c = add_interval(theta, theta + eps() * Rational(3), "c[" + J + "]");
        int d = add_interval(theta, theta, "d[" + J + "]");
        Rational ve = hi(ext[t][1]);
        int cov = add_interval(ve + eps() * Rational(4), ve + eps() * Rational(7),
                               "cov[" + J + "]");
        int fi = add_interval(hi(cov), hi(cov), "f[" + J + "]");

        auto three_track = [&](int root, const std::string& tag) {
            Rational m = hi(root);
            std::vector<int> members;
            for (int k = 0; k < 3; ++k) {
                members.push_back(add_interval(m + Rational(k), m + Rational(k + 1),
                                               "tc[" + tag + "#" + std::to_string(k) + "]"));
            }
            new_track(std::move(members), {root});
        };
        three_track(d, "d" + J);
        three_track(a, "a" + J);
        three_track(b, "b" + J);
        three_track(c, "c" + J);
        int tf = add_interval(hi(fi), hi(fi) + Rational(1), "tc[f" + J + "#0]");
        new_track({tf}, {cov, fi});
    }

    // Insert gadget: two-unit extension, point sigma between the p-track and
    // its successor, one new single-interval track rooted at sigma.
    // `key` carries the caller-facing gadget name; geometry uses the sorted
    // roles so that T_p < T_q.
    int build_insert(const std::string& p, const std::string& q,
                     const std::string& key) {
        auto ext = extend_all(2);
        int tp = track_of_root(p);
        int x = succ_track(tp);
        if (x == -1) throw std::logic_error("insert gadget: no following track");
        Rational pos = Rational::midpoint(hi(ext[tp][0]), hi(ext[x][0]));
        int sigma = add_interval(pos, pos, "sigma" + key);
        int tm = add_interval(hi(sigma), hi(sigma) + Rational(1), "tm" + key);
        new_track({tm}, {sigma});
        return sigma;
    }

    void build_and(const std::string& p_called, const std::string& q_called) {
        // geometry roles sort by track order; names keep the call order
        std::string p = p_called, q = q_called;
        if (track_max(track_of_root(q)) < track_max(track_of_root(p)))
            std::swap(p, q);
        std::string key = "[" + p_called + "," + q_called + "]";

        int sigma_id = build_insert(p, q, key);
        int tm = root_track_.at(sigma_id);
        auto ext = extend_all(2);
        int tp = track_of_root(p);
        int tq = track_of_root(q);
        int y1 = pred_track(tp);
        if (y1 == -1) throw std::logic_error("and gadget: no track preceding p");

        int alpha = add_interval(
            Rational::midpoint(hi(ext[y1][0]), hi(ext[tp][0])),
            Rational::midpoint(hi(ext[tp][0]), hi(ext[tm][0])), "alpha" + key);
        Rational bpos = Rational::midpoint(hi(ext[tp][0]), hi(alpha));
        int beta = add_interval(bpos, bpos, "beta" + key);

        int y2 = pred_track(tq);
        int gamma = add_interval(
            hi(alpha), Rational::midpoint(hi(ext[y2][0]), hi(ext[tq][0])),
            "gamma" + key);
        int y2p = succ_track(tq);
        Rational h = y2p != -1 ? hi(ext[y2p][0]) : hi(ext[tq][0]) + eps();
        int delta = add_interval(hi(gamma),
                                 Rational::midpoint(hi(ext[tq][0]), h),
                                 "delta" + key);

        auto one_track = [&](int anchor, std::vector<int> roots,
                             const std::string& tag) {
            int iv = add_interval(hi(anchor), hi(anchor) + Rational(1),
                                  "ta[" + tag + "]" + key);
            new_track({iv}, std::move(roots));
        };
        one_track(beta, {alpha, beta}, "1");
        one_track(gamma, {gamma}, "2");
        one_track(delta, {delta}, "3");
    }

    void build_clause(int j) {
        build_covering(j);
        std::string J = std::to_string(j + 1);
        const auto& cl = formula_.clauses[j];

        build_implication("a[" + J + "]", "a'[" + J + "]");
        build_and("a[" + J + "]", lit_name(cl[0]));
        build_and("a'[" + J + "]", lit_name(-cl[0]));

        build_implication("b[" + J + "]", "b'[" + J + "]");
        build_and("b[" + J + "]", lit_name(cl[1]));
        build_and("b'[" + J + "]", lit_name(-cl[1]));

        build_implication("c[" + J + "]", "c'[" + J + "]");
        build_and("c[" + J + "]", lit_name(cl[2]));
        build_and("c'[" + J + "]", lit_name(-cl[2]));
    }

    // End gadget. The verbatim construction appends one unit interval plus a
    // point tail per track, which leaves every tail inside one unit window
    // and creates huge induced stars; ranked unit chains keep the pinned
    // counts while staggering the tails apart.
    void build_end() {
        std::vector<int> order(inst_.tracks.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return track_max(a) < track_max(b);
        });
        int rank = 0;
        for (int t : order) {
            for (int k = 0; k <= rank; ++k) {
                Rational m = track_max(t);
                int id = add_interval(m, m + Rational(1),
                                      "end[t" + std::to_string(t) + "#" +
                                          std::to_string(k) + "]");
                inst_.tracks[t].intervals.push_back(id);
            }
            Rational m = track_max(t);
            add_interval(m, m, "tail[t" + std::to_string(t) + "]");
            ++rank;
        }
    }

    void self_check() const {
        const int n = inst_.n, m = inst_.m;
        if (int(inst_.tracks.size()) != 2 + 4 * n + 35 * m)
            throw std::logic_error("sat reduction: track count mismatch");
        if (inst_.point_interval_count() != 4 + 6 * n + 52 * m)
            throw std::logic_error("sat reduction: point interval count mismatch");
        for (const auto& tr : inst_.tracks) {
            for (size_t i = 0; i + 1 < tr.intervals.size(); ++i)
                if (inst_.intervals[tr.intervals[i]].hi !=
                    inst_.intervals[tr.intervals[i + 1]].lo)
                    throw std::logic_error("sat reduction: track chaining broken");
        }
        // strict total order of track maxima
        std::vector<Rational> maxima;
        for (int t = 0; t < int(inst_.tracks.size()); ++t)
            maxima.push_back(track_max(t));
        std::sort(maxima.begin(), maxima.end());
        for (size_t i = 0; i + 1 < maxima.size(); ++i)
            if (maxima[i] == maxima[i + 1])
                throw std::logic_error("sat reduction: tied track maxima");
    }

    Rational track_max_of(const Track& tr) const {
        return hi(tr.intervals.back());
    }
};

} // namespace

IntervalInstance sat_to_intervals(const CnfFormula& f) {
    for (const auto& cl : f.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.n)
                throw std::invalid_argument("sat_to_intervals: malformed formula");
    return SatBuilder(f).build();
}

Graph intersection_graph(const std::vector<RInterval>& intervals) {
    const int k = int(intervals.size());
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& a = intervals[i];
            const auto& b = intervals[j];
            Rational lo = a.lo < b.lo ? b.lo : a.lo;
            Rational hi = a.hi < b.hi ? a.hi : b.hi;
            if (lo <= hi) edges.emplace_back(i, j);
        }
    return Graph(k, edges);
}

Graph intersection_graph(const IntervalInstance& inst) {
    return intersection_graph(inst.intervals);
}

namespace {

// Slot k of clause j pairs with one literal; recover it from the gadget name
// "gamma[<slot>[j],<literal>]".
int clause_literal(const IntervalInstance& inst, int j, int slot) {
    static const char* kSlots[3] = {"a", "b", "c"};
    std::string prefix = std::string("gamma[") + kSlots[slot] + "[" +
                         std::to_string(j) + "],";
    for (const auto& [name, id] : inst.named) {
        if (name.rfind(prefix, 0) != 0) continue;
        std::string lit = name.substr(prefix.size());
        lit.pop_back(); // trailing ']' of the gamma name
        bool neg = lit[0] == '~';
        std::string digits = lit.substr(neg ? 3 : 2); // past "x[" or "~x["
        digits.pop_back();                            // trailing ']'
        return std::stoi(digits) * (neg ? -1 : 1);
    }
    throw std::logic_error("sat witness: missing AND gadget for clause " +
                           std::to_string(j));
}

} // namespace

VertexSet sat_witness_geodetic(const IntervalInstance& inst,
                               const std::vector<bool>& assignment) {
    if (int(assignment.size()) != inst.n + 1)
        throw std::invalid_argument("sat witness: assignment must be indexed 1..n");

    auto value = [&](int lit) {
        bool v = assignment[std::abs(lit)];
        return lit > 0 ? v : !v;
    };

    for (int j = 1; j <= inst.m; ++j) {
        bool satisfied = false;
        for (int k = 0; k < 3; ++k)
            if (value(clause_literal(inst, j, k))) satisfied = true;
        if (!satisfied)
            throw std::invalid_argument(
                "sat_witness_geodetic: assignment does not satisfy clause " +
                std::to_string(j));
    }

    VertexSet s(int(inst.intervals.size()));
    for (int id = 0; id < int(inst.intervals.size()); ++id)
        if (inst.intervals[id].is_point()) s.insert(id);

    for (int i = 1; i <= inst.n; ++i)
        s.insert(inst.id_of(assignment[i] ? lit_name(i) : lit_name(-i)));

    static const char* kSlots[3] = {"a", "b", "c"};
    for (int j = 1; j <= inst.m; ++j) {
        std::string J = std::to_string(j);
        for (int k = 0; k < 3; ++k) {
            std::string plain = std::string(kSlots[k]) + "[" + J + "]";
            std::string primed = std::string(kSlots[k]) + "'[" + J + "]";
            int lit = clause_literal(inst, j, k);
            if (value(lit)) {
                s.insert(inst.id_of(plain));
                s.insert(inst.id_of("gamma[" + primed + "," + lit_name(-lit) + "]"));
            } else {
                s.insert(inst.id_of(primed));
                s.insert(inst.id_of("gamma[" + plain + "," + lit_name(lit) + "]"));
            }
        }
    }

    if (s.size() != inst.expected_witness_bound())
        throw std::logic_error("sat witness: size != 4 + 7n + 58m");
    return s;
}

// ------------------------------------------------------------ partial grids

// Hand-written counterclockwise rotations read off plane embeddings.
RotationSystem preset_rotation_k4() {
    RotationSystem rs;
    rs.graph = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    rs.rotation = {{{1, 3, 2}}, {{2, 3, 0}}, {{0, 3, 1}}, {{2, 0, 1}}};
    return rs;
}

RotationSystem preset_rotation_prism() {
    RotationSystem rs;
    rs.graph = Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                         {0, 3}, {1, 4}, {2, 5}});
    rs.rotation = {{{3, 1, 2}}, {{2, 0, 4}}, {{0, 1, 5}},
                   {{4, 0, 5}}, {{5, 1, 3}}, {{3, 2, 4}}};
    return rs;
}

namespace {

int pair_slot(int i, int j) {
    // unordered pairs over {0,1,2}: {0,1} -> 0, {1,2} -> 1, {0,2} -> 2
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return 0;
    if (i == 1 && j == 2) return 1;
    return 2;
}

std::string slot_name(int slot) {
    static const char* names[3] = {"01", "12", "02"};
    return names[slot];
}

} // namespace

PartialGridReduction vc_to_partial_grid(const RotationSystem& rs) {
    const Graph& g = rs.graph;
    const int n = g.n();
    if (int(rs.rotation.size()) != n)
        throw std::invalid_argument("vc_to_partial_grid: rotation size mismatch");
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 3)
            throw std::invalid_argument("vc_to_partial_grid: graph must be cubic");
        auto nb = g.neighbors(v);
        auto rot = rs.rotation[v];
        std::array<int, 3> sorted_rot = rot;
        std::sort(sorted_rot.begin(), sorted_rot.end());
        if (!std::equal(nb.begin(), nb.end(), sorted_rot.begin()))
            throw std::invalid_argument("vc_to_partial_grid: rotation does not match neighbors");
    }

    auto label_of = [&](int v, int w) {
        for (int i = 0; i < 3; ++i)
            if (rs.rotation[v][i] == w) return i;
        throw std::logic_error("vc_to_partial_grid: missing rotation label");
    };

    PartialGridReduction red;
    red.gadgets.resize(n);
    red.labels.assign(size_t(n) * 13, "");
    std::vector<Edge> edges;

    for (int v = 0; v < n; ++v) {
        int base = 13 * v;
        VertexGadgetIds& gd = red.gadgets[v];
        gd.c = base;
        std::string sv = "[" + std::to_string(v) + "]";
        red.labels[gd.c] = "c" + sv;
        for (int i = 0; i < 3; ++i) {
            gd.t[i] = base + 1 + i;
            red.labels[gd.t[i]] = "t" + std::to_string(i) + sv;
        }
        for (int s = 0; s < 3; ++s) {
            gd.x[s] = base + 4 + s;
            gd.y[s] = base + 7 + s;
            gd.z[s] = base + 10 + s;
            red.labels[gd.x[s]] = "x" + slot_name(s) + sv;
            red.labels[gd.y[s]] = "y" + slot_name(s) + sv;
            red.labels[gd.z[s]] = "z" + slot_name(s) + sv;
        }
        for (int i = 0; i < 3; ++i) edges.emplace_back(gd.c, gd.t[i]);
        for (int s = 0; s < 3; ++s) {
            edges.emplace_back(gd.c, gd.x[s]);
            edges.emplace_back(gd.x[s], gd.y[s]);
            edges.emplace_back(gd.y[s], gd.z[s]);
        }
        // boundary 6-cycle t0 y01 t1 y12 t2 y02
        edges.emplace_back(gd.t[0], gd.y[pair_slot(0, 1)]);
        edges.emplace_back(gd.y[pair_slot(0, 1)], gd.t[1]);
        edges.emplace_back(gd.t[1], gd.y[pair_slot(1, 2)]);
        edges.emplace_back(gd.y[pair_slot(1, 2)], gd.t[2]);
        edges.emplace_back(gd.t[2], gd.y[pair_slot(0, 2)]);
        edges.emplace_back(gd.y[pair_slot(0, 2)], gd.t[0]);
    }

    for (auto [v, w] : g.edges()) {
        int i = label_of(v, w), j = label_of(w, v);
        const auto& gv = red.gadgets[v];
        const auto& gw = red.gadgets[w];
        edges.emplace_back(gv.t[i], gw.t[j]);
        edges.emplace_back(gv.y[pair_slot(i, (i + 1) % 3)],
                           gw.y[pair_slot((j + 2) % 3, j)]);
        edges.emplace_back(gv.y[pair_slot((i + 2) % 3, i)],
                           gw.y[pair_slot(j, (j + 1) % 3)]);
    }

    red.graph = Graph(13 * n, edges);
    return red;
}

VertexSet vc_witness_geodetic(const PartialGridReduction& red,
                              const Graph& source, const VertexSet& cover) {
    for (auto [u, v] : source.edges())
        if (!cover.contains(u) && !cover.contains(v))
            throw std::invalid_argument("vc_witness_geodetic: not a vertex cover");
    VertexSet s(red.graph.n());
    for (const auto& gd : red.gadgets)
        for (int z : gd.z) s.insert(z);
    cover.for_each([&](int v) { s.insert(red.gadgets[v].c); });
    return s;
}

} // namespace mgs
