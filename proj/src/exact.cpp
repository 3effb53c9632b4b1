#include "mgs/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgs {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchState {
    Clock::time_point start;
    const SolveBudget* budget;
    std::uint64_t tested = 0;

    bool exhausted() const {
        if (tested >= budget->max_candidates) return true;
        if ((tested & 0x3ff) == 0 &&
            Clock::now() - start >= budget->time_limit)
            return true;
        return false;
    }
};

// Precomputed I(u,v) masks make closure checks a few word-ORs per pair.
struct IntervalTable {
    int n;
    std::vector<VertexSet> pair_interval; // index u * n + v, u <= v

    explicit IntervalTable(const Graph& g) : n(g.n()) {
        auto dist = all_pairs_distances(g);
        pair_interval.assign(size_t(n) * n, VertexSet(n));
        for (int u = 0; u < n; ++u) {
            for (int v = u; v < n; ++v) {
                VertexSet iv(n);
                Distance duv = dist[u][v];
                if (duv != kUnreachable) {
                    for (int w = 0; w < n; ++w)
                        if (dist[u][w] != kUnreachable &&
                            dist[u][w] + dist[w][v] == duv)
                            iv.insert(w);
                }
                pair_interval[size_t(u) * n + v] = iv;
            }
        }
    }

    bool geodetic(const std::vector<int>& members, const VertexSet& target) const {
        VertexSet closure(n);
        for (size_t i = 0; i < members.size(); ++i) {
            closure.insert(members[i]);
            for (size_t j = i + 1; j < members.size(); ++j)
                closure |= pair_interval[size_t(members[i]) * n + members[j]];
        }
        return target.is_subset_of(closure);
    }
};

// Smallest geodetic superset of `mandatory` within `target`-coverage of the
// (sub)graph; free vertices enumerated as lexicographic combinations by size.
// Returns nullopt when the budget runs out first.
std::optional<VertexSet> smallest_superset(
    const IntervalTable& table, int n, const VertexSet& mandatory,
    const VertexSet& always_included, const std::vector<int>& free_vertices,
    const VertexSet& target, SearchState& st, bool& exhausted) {
    std::vector<int> base = (mandatory | always_included).to_vector();

    for (int extra = 0; extra <= int(free_vertices.size()); ++extra) {
        // lexicographic combinations of `extra` free vertices
        std::vector<int> idx(extra);
        for (int i = 0; i < extra; ++i) idx[i] = i;
        while (true) {
            if (st.exhausted()) { exhausted = true; return std::nullopt; }
            ++st.tested;
            std::vector<int> members = base;
            for (int i : idx) members.push_back(free_vertices[i]);
            std::sort(members.begin(), members.end());
            if (table.geodetic(members, target)) {
                VertexSet out = mandatory;
                for (int i : idx) out.insert(free_vertices[i]);
                return out;
            }
            // next combination
            int i = extra - 1;
            while (i >= 0 && idx[i] == int(free_vertices.size()) - extra + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    exhausted = false;
    return std::nullopt; // no superset works (cannot happen with target ⊆ V)
}

std::chrono::milliseconds since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

} // namespace

SolveResult min_geodetic_bruteforce(const Graph& g, const SolveBudget& budget) {
    if (!is_connected(g))
        throw std::invalid_argument("min_geodetic_bruteforce: graph must be connected");
    auto t0 = Clock::now();
    SolveResult res;
    res.method = "brute";

    if (g.n() == 0) {
        res.set = VertexSet(0);
        res.optimal = true;
        res.elapsed = since(t0);
        return res;
    }

    IntervalTable table(g);
    SearchState st{t0, &budget, 0};

    VertexSet mandatory = simplicial_vertices(g);
    std::vector<int> free_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (!mandatory.contains(v)) free_vertices.push_back(v);

    bool exhausted = false;
    auto found = smallest_superset(table, g.n(), mandatory, VertexSet(g.n()),
                                   free_vertices, VertexSet::universe(g.n()),
                                   st, exhausted);
    if (found) {
        res.set = *found;
        res.size = res.set.size();
        res.optimal = true;
    } else {
        // budget exhausted: degrade to the trivial geodetic set
        res.set = VertexSet::universe(g.n());
        res.size = g.n();
        res.optimal = false;
    }
    res.elapsed = since(t0);
    return res;
}

SolveResult min_geodetic_blocks(const Graph& g, const SolveBudget& budget) {
    if (!is_connected(g))
        throw std::invalid_argument("min_geodetic_blocks: graph must be connected");
    auto t0 = Clock::now();
    SolveResult res;
    res.method = "blocks";

    if (g.n() <= 1) {
        res.set = VertexSet::universe(g.n());
        res.size = g.n();
        res.optimal = true;
        res.elapsed = since(t0);
        return res;
    }

    auto decomp = block_decomposition(g);
    SearchState st{t0, &budget, 0};
    VertexSet answer(g.n());
    bool all_optimal = true;

    for (const auto& block : decomp.blocks) {
        auto sub = induced_subgraph(g, block);
        const Graph& f = sub.graph;
        int bn = f.n();

        VertexSet cut_in_block(bn);
        block.for_each([&](int v) {
            if (decomp.cut_vertices.contains(v))
                cut_in_block.insert(sub.from_original[v]);
        });

        // Simplicial non-cut vertices of the block are forced into X_i.
        VertexSet mand = simplicial_vertices(f) - cut_in_block;
        std::vector<int> free_vertices;
        for (int v = 0; v < bn; ++v)
            if (!mand.contains(v) && !cut_in_block.contains(v))
                free_vertices.push_back(v);

        IntervalTable table(f);
        bool exhausted = false;
        auto found = smallest_superset(table, bn, mand, cut_in_block,
                                       free_vertices, VertexSet::universe(bn),
                                       st, exhausted);
        if (!found) {
            all_optimal = false;
            found = VertexSet::universe(bn) - cut_in_block;
        }
        found->for_each([&](int v) { answer.insert(sub.to_original[v]); });
        if (!all_optimal) break;
    }

    if (!all_optimal) {
        res.set = VertexSet::universe(g.n());
        res.size = g.n();
        res.optimal = false;
    } else {
        res.set = answer;
        res.size = answer.size();
        res.optimal = true;
    }
    res.elapsed = since(t0);
    return res;
}

CertifyReport certify(const Graph& g, const VertexSet& s, bool claimed_optimal,
                      const SolveBudget& budget) {
    CertifyReport report;
    report.geodetic = is_geodetic(g, s);
    if (!claimed_optimal || !report.geodetic) return report;

    auto t0 = Clock::now();
    SearchState st{t0, &budget, 0};
    IntervalTable table(g);
    VertexSet mandatory = simplicial_vertices(g);
    std::vector<int> free_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (!mandatory.contains(v)) free_vertices.push_back(v);

    // Any geodetic set strictly smaller than |s| refutes optimality.
    const int limit = s.size() - 1;
    const int mand_size = mandatory.size();
    std::vector<int> idx;
    for (int size = mand_size; size <= limit; ++size) {
        int extra = size - mand_size;
        if (extra > int(free_vertices.size())) break;
        idx.assign(extra, 0);
        for (int i = 0; i < extra; ++i) idx[i] = i;
        while (true) {
            if (st.exhausted()) return report; // optimality left unchecked
            ++st.tested;
            std::vector<int> members = mandatory.to_vector();
            for (int i : idx) members.push_back(free_vertices[i]);
            std::sort(members.begin(), members.end());
            if (table.geodetic(members, VertexSet::universe(g.n()))) {
                report.optimality_checked = true;
                report.optimal = false;
                return report;
            }
            int i = extra - 1;
            while (i >= 0 && idx[i] == int(free_vertices.size()) - extra + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    report.optimality_checked = true;
    report.optimal = true;
    return report;
}

} // namespace mgs
