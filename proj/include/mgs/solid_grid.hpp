#ifndef MGS_SOLID_GRID_HPP
#define MGS_SOLID_GRID_HPP

#include <vector>
#include <utility>

#include "mgs/exact.hpp"

namespace mgs {

// Integer planar coordinates per vertex; a valid embedding is injective
// with every edge joining points at Euclidean distance exactly 1.
struct GridEmbedding {
    std::vector<std::pair<int, int>> coords;
};

struct CornerPath {
    std::vector<int> vertices; // ordered along the block boundary, >= 2
};

struct CornerSequence {
    std::vector<int> corners;
    bool cyclic = false;
};

// True iff the embedding is injective, unit-length, and every bounded face
// of the induced plane drawing is a unit square.
bool validate_solid_grid(const Graph& g, const GridEmbedding& emb);

std::vector<CornerPath> corner_paths(const Graph& g, const GridEmbedding& emb);

std::vector<CornerSequence> maximal_corner_sequences(const Graph& g,
                                                     const GridEmbedding& emb);

// Degree-one vertices plus alternate corners of every maximal corner
// sequence; linear-time minimum geodetic set for solid grids.
SolveResult solve_solid_grid(const Graph& g, const GridEmbedding& emb);

// t + sum over maximal corner sequences of floor(|S| / 2).
int solid_grid_lower_bound(const Graph& g, const GridEmbedding& emb);

// Outer boundary of one biconnected component as a closed clockwise walk,
// starting at the lexicographically smallest (x, y) vertex. Exposed for the
// boundary-walk oracle in tests.
std::vector<int> block_boundary_clockwise(const Graph& g,
                                          const GridEmbedding& emb,
                                          const VertexSet& block);

} // namespace mgs

#endif
