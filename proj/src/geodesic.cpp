#include "mgs/geodesic.hpp"

#include <stdexcept>

namespace mgs {

VertexSet interval_between(const Graph& g, int u, int v,
                           const DistanceMatrix* dist) {
    DistanceRow du, dv;
    const DistanceRow* pu;
    const DistanceRow* pv;
    if (dist) {
        pu = &(*dist)[u];
        pv = &(*dist)[v];
    } else {
        du = bfs_distances(g, u);
        dv = bfs_distances(g, v);
        pu = &du;
        pv = &dv;
    }
    Distance duv = (*pu)[v];
    if (duv == kUnreachable)
        throw std::invalid_argument("interval_between: endpoints in different components");
    VertexSet out(g.n());
    for (int w = 0; w < g.n(); ++w) {
        Distance a = (*pu)[w], b = (*pv)[w];
        if (a != kUnreachable && b != kUnreachable && a + b == duv) out.insert(w);
    }
    return out;
}

VertexSet interval_closure(const Graph& g, const VertexSet& s,
                           const DistanceMatrix* dist) {
    if (s.empty()) throw std::invalid_argument("interval_closure: empty set");
    auto members = s.to_vector();

    DistanceMatrix local;
    if (!dist) {
        // one BFS per member, not per pair
        local.assign(g.n(), {});
        for (int u : members) local[u] = bfs_distances(g, u);
    }
    const DistanceMatrix& d = dist ? *dist : local;

    VertexSet out(g.n());
    for (size_t i = 0; i < members.size(); ++i) {
        out.insert(members[i]);
        for (size_t j = i + 1; j < members.size(); ++j) {
            int u = members[i], v = members[j];
            Distance duv = d[u][v];
            if (duv == kUnreachable)
                throw std::invalid_argument("interval_closure: set spans components");
            for (int w = 0; w < g.n(); ++w) {
                Distance a = d[u][w], b = d[v][w];
                if (a != kUnreachable && b != kUnreachable && a + b == duv)
                    out.insert(w);
            }
        }
    }
    return out;
}

bool is_geodetic(const Graph& g, const VertexSet& s,
                 const DistanceMatrix* dist) {
    if (!is_connected(g))
        throw std::invalid_argument("is_geodetic: graph must be connected");
    if (s.empty()) return g.n() == 0;
    return interval_closure(g, s, dist) == VertexSet::universe(g.n());
}

bool is_edge_geodetic(const Graph& g, const VertexSet& s,
                      const DistanceMatrix* dist) {
    if (!is_connected(g))
        throw std::invalid_argument("is_edge_geodetic: graph must be connected");
    auto members = s.to_vector();
    if (members.empty()) return g.m() == 0;

    DistanceMatrix local;
    if (!dist) {
        local.assign(g.n(), {});
        for (int u : members) local[u] = bfs_distances(g, u);
    }
    const DistanceMatrix& d = dist ? *dist : local;

    for (auto [a, b] : g.edges()) {
        bool covered = false;
        for (size_t i = 0; i < members.size() && !covered; ++i) {
            for (size_t j = 0; j < members.size() && !covered; ++j) {
                int u = members[i], v = members[j];
                if (d[u][a] + 1 + d[v][b] == d[u][v]) covered = true;
            }
        }
        if (!covered) return false;
    }
    return true;
}

CloseSet close_set(const Graph& g, int y, const VertexSet& clique,
                   const DistanceMatrix* dist) {
    if (clique.empty()) throw std::invalid_argument("close_set: empty clique");
    auto xs = clique.to_vector();
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (!g.has_edge(xs[i], xs[j]))
                throw std::invalid_argument("close_set: X is not a clique");

    DistanceRow local;
    const DistanceRow* dy;
    if (dist) {
        dy = &(*dist)[y];
    } else {
        local = bfs_distances(g, y);
        dy = &local;
    }

    Distance base = kUnreachable;
    for (int x : xs) {
        Distance dx = (*dy)[x];
        if (dx == kUnreachable)
            throw std::invalid_argument("close_set: y cannot reach X");
        if (base == kUnreachable || dx < base) base = dx;
    }
    CloseSet out;
    out.base_distance = base;
    out.members = VertexSet(g.n());
    for (int x : xs) {
        Distance dx = (*dy)[x];
        if (dx == base) {
            out.members.insert(x);
        } else if (dx != base + 1) {
            // Distances into a clique span at most two consecutive values.
            throw std::logic_error("close_set: two-value property violated");
        }
    }
    return out;
}

VertexSet covered_through_cutset(const VertexSet& a, const VertexSet& b,
                                 const VertexSet& clique) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("covered_through_cutset: empty close set");
    if (!a.is_subset_of(clique) || !b.is_subset_of(clique))
        throw std::invalid_argument("covered_through_cutset: sets must lie in X");
    VertexSet inter = a & b;
    if (!inter.empty()) return inter;
    return a | b;
}

} // namespace mgs
