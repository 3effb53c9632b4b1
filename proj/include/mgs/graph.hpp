#ifndef MGS_GRAPH_HPP
#define MGS_GRAPH_HPP

#include <vector>
#include <utility>
#include <optional>
#include <string>

#include "mgs/vertex_set.hpp"

namespace mgs {

using Edge = std::pair<int, int>;

// Hop-count distance; kUnreachable marks pairs in different components.
using Distance = int;
inline constexpr Distance kUnreachable = -1;

using DistanceRow = std::vector<Distance>;
using DistanceMatrix = std::vector<DistanceRow>;

// Immutable simple undirected graph over dense vertex ids [0, n).
// Neighbor lists are sorted ascending; duplicate input edges collapse.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return int(adj_.size()); }
    int m() const { return m_; }
    int degree(int v) const { return int(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Each edge once, u < v, lexicographic.
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

DistanceRow bfs_distances(const Graph& g, int source);
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

struct BlockDecomposition {
    VertexSet cut_vertices;
    std::vector<VertexSet> blocks; // biconnected components as vertex sets
};

BlockDecomposition block_decomposition(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);

struct ChordalityResult {
    bool is_chordal = false;
    std::optional<std::vector<int>> ordering; // perfect elimination ordering when chordal
};

ChordalityResult chordality_and_peo(const Graph& g);

// Replace every edge by a path with k edges; original ids stay [0, n).
Graph subdivide(const Graph& g, int k);

Distance girth(const Graph& g);

// True iff some vertex has an independent set of `leaves` vertices in its
// neighborhood (an induced K_{1,leaves}).
bool has_induced_star(const Graph& g, int leaves);

// Induced subgraph plus the map from new ids to original ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;
    std::vector<int> from_original; // -1 where absent
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

} // namespace mgs

#endif
