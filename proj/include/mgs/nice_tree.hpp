#ifndef MGS_NICE_TREE_HPP
#define MGS_NICE_TREE_HPP

#include <vector>

#include "mgs/graph.hpp"

namespace mgs {

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    std::vector<int> bag;       // sorted vertex ids; induces a clique
    std::vector<int> children;  // node ids
    int vertex = -1;            // introduced or forgotten vertex
};

// Rooted at a forget node with empty bag whose child bag is the singleton
// {s} for a simplicial vertex s; leaves carry empty bags.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const {
        int w = 0;
        for (const auto& nd : nodes) w = std::max(w, int(nd.bag.size()));
        return w;
    }
};

// From a perfect elimination ordering: maximal cliques, a clique tree
// (max-weight spanning tree on intersection sizes), then normalization.
// Throws on non-chordal input.
NiceTreeDecomposition build_nice_tree_decomposition(const Graph& g);

// Join-free variant over the maximal cliques of an interval model, ordered
// by stabbing point. `cliques` must be the consecutive clique arrangement.
NiceTreeDecomposition build_nice_path_decomposition(
    const std::vector<std::vector<int>>& cliques, int n);

// Throws std::logic_error describing the first violated invariant.
void check_nice_tree_invariants(const Graph& g,
                                const NiceTreeDecomposition& td);

// Vertex set of G_{<=v} for every node, bottom-up.
std::vector<VertexSet> subtree_vertices(const Graph& g,
                                        const NiceTreeDecomposition& td);

} // namespace mgs

#endif
