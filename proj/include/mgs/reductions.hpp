#ifndef MGS_REDUCTIONS_HPP
#define MGS_REDUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "mgs/graph.hpp"
#include "mgs/rational.hpp"

namespace mgs {

// ---------------------------------------------------------------- intervals

struct RInterval {
    Rational lo;
    Rational hi;
    std::string name;

    bool is_point() const { return lo == hi; }
};

struct Track {
    std::vector<int> intervals; // interval ids, chained left to right
    std::vector<int> roots;     // interval ids
};

struct CnfFormula {
    int n = 0;                                // variables 1..n
    std::vector<std::array<int, 3>> clauses;  // signed indices, nonzero
};

CnfFormula parse_dimacs_cnf(const std::string& text);

struct IntervalInstance {
    int n = 0; // formula dimensions
    int m = 0;
    Rational epsilon;
    std::vector<RInterval> intervals;
    std::vector<Track> tracks;
    std::map<std::string, int> named; // name -> interval id

    int id_of(const std::string& name) const;
    int point_interval_count() const;
    int expected_witness_bound() const { return 4 + 7 * n + 58 * m; }
};

// Full §5 construction: start gadget, variable gadgets, clause gadgets,
// end gadget, in order.
IntervalInstance sat_to_intervals(const CnfFormula& f);

// Closed-interval intersection graph; vertex ids equal interval ids.
Graph intersection_graph(const IntervalInstance& inst);
Graph intersection_graph(const std::vector<RInterval>& intervals);

// Witness geodetic set for a satisfying assignment (checked): all point
// intervals, the chosen literal intervals, and the per-clause selections.
VertexSet sat_witness_geodetic(const IntervalInstance& inst,
                               const std::vector<bool>& assignment);

// ------------------------------------------------------------ partial grids

struct RotationSystem {
    Graph graph; // cubic
    // rotation[v] = the three neighbors of v in counterclockwise order
    std::vector<std::array<int, 3>> rotation;
};

RotationSystem preset_rotation_k4();
RotationSystem preset_rotation_prism();

struct VertexGadgetIds {
    int c;
    std::array<int, 3> t;          // t_0, t_1, t_2
    std::array<int, 3> x;          // x_{01}, x_{12}, x_{02}
    std::array<int, 3> y;          // y_{01}, y_{12}, y_{02}
    std::array<int, 3> z;          // z_{01}, z_{12}, z_{02}
};

struct PartialGridReduction {
    Graph graph;
    std::vector<VertexGadgetIds> gadgets; // per source vertex
    std::vector<std::string> labels;      // per produced vertex
};

// f1 construction: one 13-vertex gadget per source vertex plus the three
// rotation-driven cross edges per source edge.
PartialGridReduction vc_to_partial_grid(const RotationSystem& rs);

// All z-vertices plus the c-vertices of the cover (cover validity checked).
VertexSet vc_witness_geodetic(const PartialGridReduction& red,
                              const Graph& source, const VertexSet& cover);

} // namespace mgs

#endif
