#ifndef MGS_EXACT_HPP
#define MGS_EXACT_HPP

#include <chrono>
#include <cstdint>
#include <string>

#include "mgs/geodesic.hpp"

namespace mgs {

struct SolveBudget {
    std::uint64_t max_candidates = 50'000'000;
    std::chrono::milliseconds time_limit{600'000};
};

struct SolveResult {
    VertexSet set;
    int size = 0;
    bool optimal = false;
    std::string method;
    std::chrono::milliseconds elapsed{0};
};

// Size-incremental search over supersets of the simplicial vertices, in
// lexicographic order. Budget exhaustion degrades to best-found.
SolveResult min_geodetic_bruteforce(const Graph& g, const SolveBudget& budget = {});

// Per biconnected component F: smallest X with X ∪ (V(F) ∩ cut-vertices)
// geodetic in F; the union over components is optimal (Ekim–Erey).
SolveResult min_geodetic_blocks(const Graph& g, const SolveBudget& budget = {});

struct CertifyReport {
    bool geodetic = false;
    bool optimality_checked = false;
    bool optimal = false; // meaningful when optimality_checked
};

CertifyReport certify(const Graph& g, const VertexSet& s, bool claimed_optimal,
                      const SolveBudget& budget = {});

} // namespace mgs

#endif
