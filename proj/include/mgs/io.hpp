#ifndef MGS_IO_HPP
#define MGS_IO_HPP

#include <optional>
#include <random>
#include <string>

#include "mgs/chordal_dp.hpp"
#include "mgs/reductions.hpp"
#include "mgs/solid_grid.hpp"

namespace mgs {
namespace io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph text format: `p <n> <m>` header, `e <u> <v>` edges (0-based ids),
// optional `v <id> <x> <y>` embedding lines, `c` comments, blank lines.
struct GraphDocument {
    Graph graph;
    std::optional<GridEmbedding> embedding;
};

GraphDocument parse_graph(const std::string& text);
std::string emit_graph(const Graph& g,
                       const GridEmbedding* embedding = nullptr);

// Interval representation: `i <id> <min_num> <min_den> <max_num> <max_den>`.
using IntervalRep = std::vector<std::pair<Rational, Rational>>;

IntervalRep parse_intervals(const std::string& text);
std::string emit_intervals(const IntervalRep& rep);
std::string emit_intervals(const IntervalInstance& inst);

// Sidecar metadata for generated interval instances: names, tracks, roots,
// counts, and the witness bound, with stable key order.
std::string emit_instance_metadata(const IntervalInstance& inst);

// Label sidecar of the partial-grid reduction.
std::string emit_grid_labels(const PartialGridReduction& red);

// ------------------------------------------------------------- generators

// Random k-tree growth with clique number omega, plus optional pendant
// simplicial leaves. Deterministic for a fixed seed.
Graph random_chordal(int n, int omega, std::uint64_t seed);

// Endpoints drawn from a bounded integer range, redrawn until connected
// and within the clique cap.
IntervalRep random_interval_rep(int n, std::uint64_t seed, int omega_cap = 8);

// Random solid polyomino with the given cell count; returns the grid graph
// and its embedding.
struct SolidGridInstance {
    Graph graph;
    GridEmbedding embedding;
};
SolidGridInstance random_solid_grid(int cells, std::uint64_t seed);

// Uniform connected random graph on n vertices (edge probability p,
// rejection sampled).
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

} // namespace io
} // namespace mgs

#endif
