#ifndef MGS_GEODESIC_HPP
#define MGS_GEODESIC_HPP

#include "mgs/graph.hpp"

namespace mgs {

// All vertices on at least one shortest u-v path:
// w is in I(u,v) iff d(u,w) + d(w,v) = d(u,v).
VertexSet interval_between(const Graph& g, int u, int v,
                           const DistanceMatrix* dist = nullptr);

// I(S) = union of I(u,v) over all pairs of S, including u = v.
VertexSet interval_closure(const Graph& g, const VertexSet& s,
                           const DistanceMatrix* dist = nullptr);

bool is_geodetic(const Graph& g, const VertexSet& s,
                 const DistanceMatrix* dist = nullptr);

// Every edge lies inside some shortest path between members of S.
bool is_edge_geodetic(const Graph& g, const VertexSet& s,
                      const DistanceMatrix* dist = nullptr);

// Close-to relation of y against a clique X: members of A sit at the base
// distance, the rest of X exactly one further.
struct CloseSet {
    Distance base_distance = 0;
    VertexSet members; // A, nonempty
};

CloseSet close_set(const Graph& g, int y, const VertexSet& clique,
                   const DistanceMatrix* dist = nullptr);

// Clique-cutset shortest-path law: the bag vertices covered by a pair with
// close sets A and B are A∩B when nonempty, A∪B otherwise.
VertexSet covered_through_cutset(const VertexSet& a, const VertexSet& b,
                                 const VertexSet& clique);

} // namespace mgs

#endif
