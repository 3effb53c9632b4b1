#include "mgs/solid_grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <map>

namespace mgs {

namespace {

// Compass directions in counterclockwise order.
constexpr int kDX[4] = {1, 0, -1, 0};
constexpr int kDY[4] = {0, 1, 0, -1};

int direction_of(std::pair<int, int> from, std::pair<int, int> to) {
    int dx = to.first - from.first, dy = to.second - from.second;
    for (int d = 0; d < 4; ++d)
        if (dx == kDX[d] && dy == kDY[d]) return d;
    return -1;
}

struct PlaneDrawing {
    const Graph* g;
    const GridEmbedding* emb;
    // out[v][d] = neighbor of v in direction d, or -1
    std::vector<std::array<int, 4>> out;

    bool build(const Graph& graph, const GridEmbedding& embedding) {
        g = &graph;
        emb = &embedding;
        const int n = graph.n();
        if (int(embedding.coords.size()) != n)
            throw std::invalid_argument("grid embedding: wrong coordinate count");
        std::map<std::pair<int, int>, int> where;
        for (int v = 0; v < n; ++v) {
            if (!where.emplace(embedding.coords[v], v).second)
                return false; // coordinate collision
        }
        out.assign(n, {-1, -1, -1, -1});
        for (auto [u, v] : graph.edges()) {
            int d = direction_of(embedding.coords[u], embedding.coords[v]);
            if (d == -1) return false; // non-unit edge
            out[u][d] = v;
            out[v][(d + 2) % 4] = u;
        }
        return true;
    }

    // Successor of directed edge (u -> v) in its face walk: the first
    // existing direction clockwise from just before the reversed direction.
    // Bounded faces trace counterclockwise, the outer face clockwise.
    std::pair<int, int> next(int u, int v, int dir_uv) const {
        int din = (dir_uv + 2) % 4;
        for (int k = 3; k >= 0; --k) {
            int d = (din + k) % 4;
            if (out[v][d] != -1) return {out[v][d], d};
        }
        return {-1, -1};
    }

    struct FaceWalk {
        std::vector<int> vertices; // tails of the directed edges, in order
        long long area2 = 0;       // twice the signed area
    };

    std::vector<FaceWalk> faces() const {
        const int n = g->n();
        std::vector<std::array<char, 4>> visited(n, {0, 0, 0, 0});
        std::vector<FaceWalk> walks;
        for (int s = 0; s < n; ++s) {
            for (int d0 = 0; d0 < 4; ++d0) {
                if (out[s][d0] == -1 || visited[s][d0]) continue;
                FaceWalk w;
                int u = s, d = d0;
                do {
                    visited[u][d] = 1;
                    w.vertices.push_back(u);
                    int v = out[u][d];
                    auto [x1, y1] = emb->coords[u];
                    auto [x2, y2] = emb->coords[v];
                    w.area2 += (long long)x1 * y2 - (long long)x2 * y1;
                    auto nx = next(u, v, d);
                    u = v;
                    d = nx.second;
                } while (!(u == s && d == d0));
                walks.push_back(std::move(w));
            }
        }
        return walks;
    }
};

GridEmbedding restrict_embedding(const GridEmbedding& emb,
                                 const std::vector<int>& to_original) {
    GridEmbedding out;
    out.coords.reserve(to_original.size());
    for (int v : to_original) out.coords.push_back(emb.coords[v]);
    return out;
}

struct BlockBoundary {
    std::vector<int> walk; // clockwise, original vertex ids
};

// Outer boundary of a biconnected block as a clockwise cycle, rotated to
// start at the lexicographically smallest coordinate.
std::vector<int> boundary_walk(const Graph& g, const GridEmbedding& emb,
                               const VertexSet& block) {
    auto sub = induced_subgraph(g, block);
    GridEmbedding semb = restrict_embedding(emb, sub.to_original);
    PlaneDrawing drawing;
    if (!drawing.build(sub.graph, semb))
        throw std::invalid_argument("boundary_walk: invalid embedding");
    auto walks = drawing.faces();
    const PlaneDrawing::FaceWalk* outer = nullptr;
    for (const auto& w : walks)
        if (w.area2 < 0) {
            outer = &w;
            break;
        }
    if (!outer) {
        // acyclic block (a bridge): single zero-area walk
        outer = walks.empty() ? nullptr : &walks[0];
    }
    if (!outer) return {};

    std::vector<int> cyc = outer->vertices;
    int best = 0;
    for (int i = 1; i < int(cyc.size()); ++i)
        if (semb.coords[cyc[i]] < semb.coords[cyc[best]]) best = i;
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    for (int& v : cyc) v = sub.to_original[v];
    return cyc;
}

struct BlockCorners {
    std::vector<int> anchors;      // eligible degree-2 vertices, CW order
    std::vector<char> linked;      // arc anchors[i] -> anchors[i+1] is a corner path
    std::vector<std::vector<int>> arcs; // the arc vertices incl. both anchors
};

BlockCorners block_corners(const Graph& g, const GridEmbedding& emb,
                           const VertexSet& block, const VertexSet& cut) {
    BlockCorners out;
    if (block.size() < 3) return out;
    std::vector<int> walk = boundary_walk(g, emb, block);
    const int len = int(walk.size());

    auto eligible = [&](int v) {
        return !cut.contains(v) && (g.degree(v) == 2 || g.degree(v) == 3);
    };

    std::vector<int> anchor_pos;
    for (int i = 0; i < len; ++i)
        if (eligible(walk[i]) && g.degree(walk[i]) == 2) anchor_pos.push_back(i);
    if (anchor_pos.empty()) return out;

    const int k = int(anchor_pos.size());
    for (int i = 0; i < k; ++i) {
        out.anchors.push_back(walk[anchor_pos[i]]);
        int from = anchor_pos[i];
        int to = anchor_pos[(i + 1) % k];
        if (k == 1) {
            out.linked.push_back(0);
            out.arcs.push_back({});
            continue;
        }
        // arc strictly between consecutive anchors holds only degree-3
        // eligible vertices when the arc is a corner path
        bool ok = true;
        std::vector<int> arc{walk[from]};
        for (int p = (from + 1) % len; p != to; p = (p + 1) % len) {
            int v = walk[p];
            arc.push_back(v);
            if (!eligible(v) || g.degree(v) != 3) ok = false;
        }
        arc.push_back(walk[to]);
        if (arc.size() < 2) ok = false;
        out.linked.push_back(ok ? 1 : 0);
        out.arcs.push_back(std::move(arc));
    }
    return out;
}

std::vector<CornerSequence> block_sequences(const BlockCorners& bc) {
    std::vector<CornerSequence> out;
    const int k = int(bc.anchors.size());
    if (k == 0) return out;

    bool all_linked = k >= 2;
    for (char l : bc.linked)
        if (!l) all_linked = false;
    if (all_linked) {
        CornerSequence seq;
        seq.cyclic = true;
        seq.corners = bc.anchors;
        out.push_back(std::move(seq));
        return out;
    }

    // chains: maximal runs of consecutive true links
    for (int start = 0; start < k; ++start) {
        int prev = (start + k - 1) % k;
        if (bc.linked[prev] || !bc.linked[start]) continue;
        CornerSequence seq;
        seq.corners.push_back(bc.anchors[start]);
        int i = start;
        while (bc.linked[i]) {
            i = (i + 1) % k;
            seq.corners.push_back(bc.anchors[i]);
        }
        out.push_back(std::move(seq));
    }
    return out;
}

} // namespace

bool validate_solid_grid(const Graph& g, const GridEmbedding& emb) {
    if (!is_connected(g))
        throw std::invalid_argument("validate_solid_grid: graph must be connected");
    PlaneDrawing drawing;
    if (!drawing.build(g, emb)) return false;
    auto walks = drawing.faces();
    int outer_count = 0;
    for (const auto& w : walks) {
        if (w.area2 > 0) {
            // bounded face: must be a unit square
            if (w.vertices.size() != 4 || w.area2 != 2) return false;
        } else if (w.area2 < 0) {
            ++outer_count;
        }
        // zero-area walks only happen for acyclic drawings (no bounded face)
    }
    return outer_count <= 1;
}

std::vector<int> block_boundary_clockwise(const Graph& g,
                                          const GridEmbedding& emb,
                                          const VertexSet& block) {
    return boundary_walk(g, emb, block);
}

std::vector<CornerPath> corner_paths(const Graph& g, const GridEmbedding& emb) {
    if (!validate_solid_grid(g, emb))
        throw std::invalid_argument("corner_paths: not a valid solid grid");
    auto decomp = block_decomposition(g);
    std::vector<CornerPath> out;
    for (const auto& block : decomp.blocks) {
        auto bc = block_corners(g, emb, block, decomp.cut_vertices);
        for (size_t i = 0; i < bc.arcs.size(); ++i)
            if (bc.linked[i]) out.push_back({bc.arcs[i]});
    }
    return out;
}

std::vector<CornerSequence> maximal_corner_sequences(const Graph& g,
                                                     const GridEmbedding& emb) {
    if (!validate_solid_grid(g, emb))
        throw std::invalid_argument("maximal_corner_sequences: not a valid solid grid");
    auto decomp = block_decomposition(g);
    std::vector<CornerSequence> out;
    for (const auto& block : decomp.blocks) {
        auto bc = block_corners(g, emb, block, decomp.cut_vertices);
        for (auto& seq : block_sequences(bc)) out.push_back(std::move(seq));
    }
    return out;
}

namespace {

std::vector<int> pick_alternate(const CornerSequence& seq) {
    std::vector<int> order = seq.corners;
    if (seq.cyclic) {
        // linearize starting just after the smallest corner id
        int p = 0;
        for (int i = 1; i < int(order.size()); ++i)
            if (order[i] < order[p]) p = i;
        std::rotate(order.begin(), order.begin() + (p + 1) % order.size(),
                    order.end());
    }
    std::vector<int> picked;
    for (size_t i = 1; i < order.size(); i += 2) picked.push_back(order[i]);
    return picked;
}

} // namespace

SolveResult solve_solid_grid(const Graph& g, const GridEmbedding& emb) {
    auto t0 = std::chrono::steady_clock::now();
    if (!validate_solid_grid(g, emb))
        throw std::invalid_argument("solve_solid_grid: not a valid solid grid");

    SolveResult res;
    res.method = "solid-grid";
    VertexSet d(g.n());

    if (g.n() == 1) {
        d.insert(0);
    } else {
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 1) d.insert(v);
        for (const auto& seq : maximal_corner_sequences(g, emb))
            for (int v : pick_alternate(seq)) d.insert(v);
    }

    res.set = d;
    res.size = d.size();
    res.optimal = true;
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return res;
}

int solid_grid_lower_bound(const Graph& g, const GridEmbedding& emb) {
    if (!validate_solid_grid(g, emb))
        throw std::invalid_argument("solid_grid_lower_bound: not a valid solid grid");
    if (g.n() == 1) return 1;
    int t = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) ++t;
    int total = t;
    for (const auto& seq : maximal_corner_sequences(g, emb))
        total += int(seq.corners.size()) / 2;
    return total;
}

} // namespace mgs
