#include "mgs/nice_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <functional>
#include <set>

namespace mgs {

namespace {

std::vector<std::vector<int>> maximal_cliques_from_peo(
    const Graph& g, const std::vector<int>& peo) {
    const int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    std::vector<std::vector<int>> cands;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        std::vector<int> c{v};
        for (int w : g.neighbors(v))
            if (pos[w] > i) c.push_back(w);
        std::sort(c.begin(), c.end());
        cands.push_back(std::move(c));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cands.size() && maximal; ++j) {
            if (i == j || cands[j].size() <= cands[i].size()) continue;
            if (std::includes(cands[j].begin(), cands[j].end(),
                              cands[i].begin(), cands[i].end()))
                maximal = false;
        }
        if (maximal) out.push_back(cands[i]);
    }
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

// Maximum-weight spanning tree of the clique graph is a valid clique tree.
std::vector<std::vector<int>> clique_tree_adjacency(
    const std::vector<std::vector<int>>& cliques) {
    const int k = int(cliques.size());
    std::vector<std::vector<int>> adj(k);
    if (k <= 1) return adj;
    std::vector<int> best_weight(k, -1), best_to(k, -1);
    std::vector<char> in_tree(k, 0);
    in_tree[0] = 1;
    for (int j = 1; j < k; ++j) {
        best_weight[j] = intersection_size(cliques[0], cliques[j]);
        best_to[j] = 0;
    }
    for (int step = 1; step < k; ++step) {
        int pick = -1;
        for (int j = 0; j < k; ++j)
            if (!in_tree[j] && (pick == -1 || best_weight[j] > best_weight[pick]))
                pick = j;
        in_tree[pick] = 1;
        adj[pick].push_back(best_to[pick]);
        adj[best_to[pick]].push_back(pick);
        for (int j = 0; j < k; ++j) {
            if (in_tree[j]) continue;
            int w = intersection_size(cliques[pick], cliques[j]);
            if (w > best_weight[j]) { best_weight[j] = w; best_to[j] = pick; }
        }
    }
    return adj;
}

class NiceBuilder {
public:
    explicit NiceBuilder(const std::vector<std::vector<int>>& cliques)
        : cliques_(cliques) {}

    NiceTreeDecomposition take() { return std::move(td_); }

    int add(NodeKind kind, std::vector<int> bag, std::vector<int> children,
            int vertex = -1) {
        td_.nodes.push_back({kind, std::move(bag), std::move(children), vertex});
        return int(td_.nodes.size()) - 1;
    }

    // chain from bag `from` to bag `to`: forget from∖to, introduce to∖from
    int chain(int node, std::vector<int> from, const std::vector<int>& to) {
        std::vector<int> gone, added;
        std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                            std::back_inserter(gone));
        std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                            std::back_inserter(added));
        std::vector<int> bag = from;
        for (int v : gone) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            node = add(NodeKind::Forget, bag, {node}, v);
        }
        for (int v : added) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            node = add(NodeKind::Introduce, bag, {node}, v);
        }
        return node;
    }

    // subtree producing bag = cliques_[c] at its top node
    int build_clique(int c, int parent, const std::vector<std::vector<int>>& adj) {
        std::vector<int> kids;
        for (int d : adj[c])
            if (d != parent) kids.push_back(d);

        const std::vector<int>& bag = cliques_[c];
        if (kids.empty()) {
            int leaf = add(NodeKind::Leaf, {}, {});
            return chain(leaf, {}, bag);
        }
        std::vector<int> tops;
        for (int d : kids) {
            int sub = build_clique(d, c, adj);
            tops.push_back(chain(sub, cliques_[d], bag));
        }
        int acc = tops[0];
        for (size_t i = 1; i < tops.size(); ++i)
            acc = add(NodeKind::Join, bag, {acc, tops[i]});
        return acc;
    }

    // forget everything except `last`, then `last` itself (the root node)
    void finish(int node, std::vector<int> bag, int last) {
        std::vector<int> cur = bag;
        for (int v : bag) {
            if (v == last) continue;
            cur.erase(std::find(cur.begin(), cur.end(), v));
            node = add(NodeKind::Forget, cur, {node}, v);
        }
        td_.root = add(NodeKind::Forget, {}, {node}, last);
    }

private:
    const std::vector<std::vector<int>>& cliques_;
    NiceTreeDecomposition td_;
};

// A vertex private to a single maximal clique is simplicial; the clique tree
// leaf rooted last must end its forget chain on one so that the root rule
// (the last vertex belongs to the solution) stays satisfiable.
int private_vertex(const std::vector<std::vector<int>>& cliques, int c, int n) {
    std::vector<int> occurrences(n, 0);
    for (const auto& k : cliques)
        for (int v : k) ++occurrences[v];
    for (int v : cliques[c])
        if (occurrences[v] == 1) return v;
    return -1;
}

} // namespace

NiceTreeDecomposition build_nice_tree_decomposition(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("nice tree: graph must be connected");
    auto chord = chordality_and_peo(g);
    if (!chord.is_chordal)
        throw std::invalid_argument("nice tree: graph is not chordal");
    if (g.n() == 0) throw std::invalid_argument("nice tree: empty graph");

    auto cliques = maximal_cliques_from_peo(g, *chord.ordering);
    auto adj = clique_tree_adjacency(cliques);

    // root at a clique-tree leaf owning a private (simplicial) vertex
    int root_clique = -1, last = -1;
    for (int c = 0; c < int(cliques.size()); ++c) {
        if (adj[c].size() > 1) continue;
        int pv = private_vertex(cliques, c, g.n());
        if (pv != -1) { root_clique = c; last = pv; break; }
    }
    if (root_clique == -1)
        throw std::logic_error("nice tree: no private vertex in any leaf clique");

    NiceBuilder b(cliques);
    int top = b.build_clique(root_clique, -1, adj);
    b.finish(top, cliques[root_clique], last);
    auto td = b.take();
    check_nice_tree_invariants(g, td);
    return td;
}

NiceTreeDecomposition build_nice_path_decomposition(
    const std::vector<std::vector<int>>& cliques, int n) {
    if (cliques.empty())
        throw std::invalid_argument("nice path: no cliques");

    // the last clique's private vertex goes last; it is simplicial
    int last = -1;
    {
        std::vector<int> occurrences(n, 0);
        for (const auto& k : cliques)
            for (int v : k) ++occurrences[v];
        for (int v : cliques.back())
            if (occurrences[v] == 1) last = v;
    }
    if (last == -1)
        throw std::logic_error("nice path: last clique has no private vertex");

    NiceBuilder b(cliques);
    int leaf = b.add(NodeKind::Leaf, {}, {});
    int node = b.chain(leaf, {}, cliques[0]);
    for (size_t i = 1; i < cliques.size(); ++i)
        node = b.chain(node, cliques[i - 1], cliques[i]);
    b.finish(node, cliques.back(), last);
    return b.take();
}

void check_nice_tree_invariants(const Graph& g,
                                const NiceTreeDecomposition& td) {
    const int n = g.n();
    const auto& nodes = td.nodes;
    if (td.root < 0 || td.root >= int(nodes.size()))
        throw std::logic_error("nice tree: bad root");
    if (!nodes[td.root].bag.empty())
        throw std::logic_error("nice tree: root bag not empty");

    std::vector<int> parent(nodes.size(), -1);
    for (int i = 0; i < int(nodes.size()); ++i)
        for (int c : nodes[i].children) {
            if (parent[c] != -1) throw std::logic_error("nice tree: node reused");
            parent[c] = i;
        }

    for (int i = 0; i < int(nodes.size()); ++i) {
        const auto& nd = nodes[i];
        if (!std::is_sorted(nd.bag.begin(), nd.bag.end()))
            throw std::logic_error("nice tree: bag not sorted");
        for (size_t a = 0; a < nd.bag.size(); ++a)
            for (size_t b = a + 1; b < nd.bag.size(); ++b)
                if (!g.has_edge(nd.bag[a], nd.bag[b]))
                    throw std::logic_error("nice tree: bag is not a clique");
        switch (nd.kind) {
            case NodeKind::Leaf:
                if (!nd.children.empty() || !nd.bag.empty())
                    throw std::logic_error("nice tree: malformed leaf");
                break;
            case NodeKind::Introduce: {
                if (nd.children.size() != 1)
                    throw std::logic_error("nice tree: introduce arity");
                auto child = nodes[nd.children[0]].bag;
                auto mine = nd.bag;
                if (!std::binary_search(mine.begin(), mine.end(), nd.vertex))
                    throw std::logic_error("nice tree: introduce vertex missing");
                mine.erase(std::find(mine.begin(), mine.end(), nd.vertex));
                if (mine != child)
                    throw std::logic_error("nice tree: introduce bag mismatch");
                break;
            }
            case NodeKind::Forget: {
                if (nd.children.size() != 1)
                    throw std::logic_error("nice tree: forget arity");
                auto child = nodes[nd.children[0]].bag;
                if (!std::binary_search(child.begin(), child.end(), nd.vertex))
                    throw std::logic_error("nice tree: forgotten vertex missing");
                child.erase(std::find(child.begin(), child.end(), nd.vertex));
                if (child != nd.bag)
                    throw std::logic_error("nice tree: forget bag mismatch");
                break;
            }
            case NodeKind::Join:
                if (nd.children.size() != 2)
                    throw std::logic_error("nice tree: join arity");
                if (nodes[nd.children[0]].bag != nd.bag ||
                    nodes[nd.children[1]].bag != nd.bag)
                    throw std::logic_error("nice tree: join bags differ");
                break;
        }
    }

    // occurrence subtrees connected; every vertex present; edges covered
    std::vector<int> root_count(n, 0), occur(n, 0);
    for (int i = 0; i < int(nodes.size()); ++i) {
        for (int v : nodes[i].bag) {
            ++occur[v];
            bool parent_has = false;
            if (parent[i] != -1) {
                const auto& pb = nodes[parent[i]].bag;
                parent_has = std::binary_search(pb.begin(), pb.end(), v);
            }
            if (!parent_has) ++root_count[v];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (occur[v] == 0)
            throw std::logic_error("nice tree: vertex missing from all bags");
        if (root_count[v] != 1)
            throw std::logic_error("nice tree: occurrences not connected");
    }
    for (auto [u, v] : g.edges()) {
        bool together = false;
        for (const auto& nd : nodes) {
            if (std::binary_search(nd.bag.begin(), nd.bag.end(), u) &&
                std::binary_search(nd.bag.begin(), nd.bag.end(), v)) {
                together = true;
                break;
            }
        }
        if (!together)
            throw std::logic_error("nice tree: edge not covered by any bag");
    }
}

std::vector<VertexSet> subtree_vertices(const Graph& g,
                                        const NiceTreeDecomposition& td) {
    std::vector<VertexSet> out(td.nodes.size(), VertexSet(g.n()));
    // children always precede parents in our construction order
    for (int i = 0; i < int(td.nodes.size()); ++i) {
        for (int c : td.nodes[i].children) out[i] |= out[c];
        for (int v : td.nodes[i].bag) out[i].insert(v);
    }
    return out;
}

} // namespace mgs
