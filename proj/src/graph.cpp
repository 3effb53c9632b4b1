#include "mgs/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <queue>
#include <functional>
#include <set>

namespace mgs {

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loop rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += int(nbrs.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    return Graph(n, edges);
}

DistanceRow bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n())
        throw std::invalid_argument("bfs: source out of range");
    DistanceRow dist(g.n(), kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix d;
    d.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](Distance x) { return x == kUnreachable; });
}

int component_count(const Graph& g) {
    int comps = 0;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (!seen[v]) { seen[v] = 1; q.push(v); }
        }
    }
    return comps;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.n();
    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    // Iterative lowpoint DFS; children counted at the root for the cut test.
    struct Frame { int v, parent; size_t next; };

    auto emit_block = [&](int u, int v) {
        VertexSet block(n);
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e.first == u && e.second == v) break;
        }
        out.blocks.push_back(std::move(block));
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({s, -1, 0});
        disc[s] = low[s] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({v, w});
                    disc[w] = low[w] = timer++;
                    if (v == s) ++root_children;
                    stack.push_back({w, v, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != s || root_children > 1 ||
                            (p == s && stack.size() > 1))
                            out.cut_vertices.insert(p);
                        emit_block(p, v);
                    }
                }
            }
        }
        // Root cut status: root is a cut vertex iff it has >1 DFS children.
        if (root_children <= 1) out.cut_vertices.erase(s);
    }
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        const auto& nbrs = g.neighbors(v);
        bool clique = true;
        for (size_t i = 0; i < nbrs.size() && clique; ++i)
            for (size_t j = i + 1; j < nbrs.size() && clique; ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) clique = false;
        if (clique && g.degree(v) > 0) out.insert(v);
        // Isolated vertices have an (empty) clique neighborhood too.
        if (g.degree(v) == 0) out.insert(v);
    }
    return out;
}

namespace {

// Lex-BFS ordering: repeatedly pick the unvisited vertex with the
// lexicographically largest label of visited-neighbor timestamps.
std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> label(n);
    std::vector<char> done(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            if (best == -1 || label[v] > label[best]) best = v;
        }
        done[best] = 1;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!done[w]) label[w].push_back(n - step);
    }
    return order;
}

} // namespace

ChordalityResult chordality_and_peo(const Graph& g) {
    const int n = g.n();
    // Reverse of a Lex-BFS order is a PEO iff the graph is chordal.
    std::vector<int> order = lex_bfs_order(g);
    std::reverse(order.begin(), order.end()); // elimination order
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    for (int i = 0; i < n; ++i) {
        int v = order[i];
        // Later neighbors of v in elimination order; the earliest of them
        // must be adjacent to all the others.
        int pivot = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > i && (pivot == -1 || pos[w] < pos[pivot])) pivot = w;
        if (pivot == -1) continue;
        for (int w : g.neighbors(v)) {
            if (pos[w] > i && w != pivot && !g.has_edge(pivot, w))
                return {false, std::nullopt};
        }
    }
    return {true, order};
}

Graph subdivide(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("subdivide: k must be >= 1");
    auto es = g.edges();
    int n = g.n();
    std::vector<Edge> out_edges;
    int next = n;
    for (auto [u, v] : es) {
        int prev = u;
        for (int i = 1; i < k; ++i) {
            out_edges.emplace_back(prev, next);
            prev = next++;
        }
        out_edges.emplace_back(prev, v);
    }
    return Graph(n + int(es.size()) * (k - 1), out_edges);
}

Distance girth(const Graph& g) {
    const int n = g.n();
    Distance best = kUnreachable;
    // BFS from every vertex; a non-tree edge closing at depth d(a)+d(b)+1
    // bounds the shortest cycle through the root.
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == kUnreachable || len < best) best = len;
                }
            }
        }
    }
    return best;
}

namespace {

bool independent_set_at_least(const Graph& g, std::vector<int>& cand,
                              int k) {
    if (k <= 0) return true;
    if (int(cand.size()) < k) return false;

    // Degree of each candidate within the candidate set.
    int pick = -1, pick_deg = -1;
    for (int v : cand) {
        int d = 0;
        for (int w : cand)
            if (w != v && g.has_edge(v, w)) ++d;
        if (d == 0) {
            // Conflict-free vertex: take it greedily.
            std::vector<int> rest;
            for (int w : cand)
                if (w != v) rest.push_back(w);
            return independent_set_at_least(g, rest, k - 1);
        }
        if (d > pick_deg) { pick_deg = d; pick = v; }
    }
    // Branch on the most conflicted vertex: exclude, then include.
    std::vector<int> without;
    for (int w : cand)
        if (w != pick) without.push_back(w);
    if (independent_set_at_least(g, without, k)) return true;

    std::vector<int> with;
    for (int w : cand)
        if (w != pick && !g.has_edge(pick, w)) with.push_back(w);
    return independent_set_at_least(g, with, k - 1);
}

} // namespace

bool has_induced_star(const Graph& g, int leaves) {
    if (leaves < 1) throw std::invalid_argument("has_induced_star: leaves >= 1 required");
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < leaves) continue;
        std::vector<int> cand = g.neighbors(v);
        if (independent_set_at_least(g, cand, leaves)) return true;
    }
    return false;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
    InducedSubgraph out;
    out.from_original.assign(g.n(), -1);
    vs.for_each([&](int v) {
        out.from_original[v] = int(out.to_original.size());
        out.to_original.push_back(v);
    });
    std::vector<Edge> es;
    for (int v : out.to_original)
        for (int w : g.neighbors(v))
            if (v < w && vs.contains(w))
                es.emplace_back(out.from_original[v], out.from_original[w]);
    out.graph = Graph(int(out.to_original.size()), es);
    return out;
}

} // namespace mgs
