#ifndef MGS_CHORDAL_DP_HPP
#define MGS_CHORDAL_DP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mgs/exact.hpp"
#include "mgs/nice_tree.hpp"
#include "mgs/rational.hpp"

namespace mgs {

struct CapExceededError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DP state per (node, type): t_int / t_ext are Boolean vectors over the
// node's index family (all bag subsets in chordal mode, the family A in
// interval mode); t_cov / t_bag are bag-position masks.
struct TypeTuple {
    std::uint64_t t_int = 0;
    std::uint64_t t_ext = 0;
    std::uint32_t t_cov = 0;
    std::uint32_t t_bag = 0;
    bool operator==(const TypeTuple&) const = default;
};

struct TypeTupleHash {
    size_t operator()(const TypeTuple& t) const {
        std::uint64_t h = t.t_int * 0x9e3779b97f4a7c15ull;
        h ^= t.t_ext + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= (std::uint64_t(t.t_cov) << 32 | t.t_bag) + (h << 6) + (h >> 2);
        return size_t(h);
    }
};

enum class DpMode { Chordal, Interval };

// Index family of one bag: which subsets the t_int / t_ext vectors range
// over, as bag-position masks. family_index returns -1 for untracked sets,
// whose bits are semantically zero.
struct BagContext {
    std::vector<int> bag; // sorted vertex ids
    std::vector<std::uint32_t> family;
    // family members (as a bitmask) admissible for exterior promises;
    // interval mode limits them to right-endpoint suffix sets
    std::uint64_t ext_allowed = 0;

    int family_index(std::uint32_t mask) const {
        for (size_t i = 0; i < family.size(); ++i)
            if (family[i] == mask) return int(i);
        return -1;
    }
    int position(int vertex) const {
        for (size_t i = 0; i < bag.size(); ++i)
            if (bag[i] == vertex) return int(i);
        return -1;
    }
    bool bit(std::uint64_t vec, std::uint32_t mask) const {
        int idx = family_index(mask);
        return idx >= 0 && ((vec >> idx) & 1);
    }
};

BagContext make_bag_context_chordal(const std::vector<int>& bag);
BagContext make_bag_context_interval(
    const std::vector<int>& bag,
    const std::vector<std::pair<Rational, Rational>>& rep);

// Bag vertices forced covered by the int/ext close-set pairs (the cutset
// law applied pairwise), as a bag-position mask.
std::uint32_t forced_cover(const BagContext& ctx, std::uint64_t t_int,
                           std::uint64_t t_ext);

// Tuples satisfying the validity conditions: no empty-set bits, bag members
// register their singleton in t_int, pair-covered vertices lie in t_cov.
std::vector<TypeTuple> enumerate_valid_types(const BagContext& ctx);

// Compatibility relations between parent and child types, in the appendix
// reading (see the oracle suite for the pinning tests).
bool compatible_introduce(const TypeTuple& parent, const TypeTuple& child,
                          int x, const BagContext& parent_ctx,
                          const BagContext& child_ctx);
bool compatible_forget(const TypeTuple& parent, const TypeTuple& child,
                       int x, const BagContext& parent_ctx,
                       const BagContext& child_ctx);
bool compatible_join(const TypeTuple& parent, const TypeTuple& left,
                     const TypeTuple& right, const BagContext& ctx);
bool compatible_root(const TypeTuple& child, int x,
                     const BagContext& child_ctx);

struct DpOptions {
    int omega_cap_chordal = 3;
    int omega_cap_interval = 8;
    bool check_certificates = false; // def:type audit of every table entry
};

SolveResult dp_min_geodetic_chordal(const Graph& g,
                                    const SolveBudget& budget = {},
                                    const DpOptions& opts = {});

// The family A of a clique X in an interval model: left-endpoint prefixes,
// right-endpoint suffixes, and singletons; every close set lands in it.
std::vector<VertexSet> interval_family_A(
    const VertexSet& clique,
    const std::vector<std::pair<Rational, Rational>>& rep);

SolveResult dp_min_geodetic_interval(
    const std::vector<std::pair<Rational, Rational>>& rep,
    const SolveBudget& budget = {}, const DpOptions& opts = {});

// Maximal cliques of the interval model ordered by stabbing point.
std::vector<std::vector<int>> interval_maximal_cliques(
    const std::vector<std::pair<Rational, Rational>>& rep);

} // namespace mgs

#endif
