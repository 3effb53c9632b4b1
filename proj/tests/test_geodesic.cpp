#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mgs/geodesic.hpp"
#include "oracles.hpp"

using namespace mgs;
using namespace mgs::test;

TEST_CASE("interval_between examples") {
    Graph p3 = make_path(3);
    CHECK(interval_between(p3, 0, 2) == VertexSet::universe(3));
    CHECK(interval_between(p3, 0, 0) == make_set(3, {0}));

    Graph c4 = make_cycle(4);
    CHECK(interval_between(c4, 0, 2) == VertexSet::universe(4));

    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(interval_between(two, 0, 2), std::invalid_argument);
}

TEST_CASE("interval symmetry and oracle equivalence") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + int(rng() % 6);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        auto dist = all_pairs_distances(g);
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v) {
                auto iv = interval_between(g, u, v, &dist);
                CHECK(iv == interval_between(g, v, u, &dist));
                CHECK(iv == oracle_interval_between(g, u, v));
            }
    }
}

TEST_CASE("interval_closure examples") {
    Graph p5 = make_path(5);
    CHECK(interval_closure(p5, make_set(5, {2})) == make_set(5, {2}));
    CHECK(interval_closure(p5, make_set(5, {0, 4})) == VertexSet::universe(5));

    // two adjacent vertices of C6 close over themselves only
    Graph c6 = make_cycle(6);
    auto closure = interval_closure(c6, make_set(6, {0, 1}));
    CHECK(closure == make_set(6, {0, 1}));
    CHECK(closure == (oracle_interval_between(c6, 0, 1) | make_set(6, {0, 1})));

    CHECK_THROWS_AS(interval_closure(p5, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("is_geodetic examples") {
    CHECK(is_geodetic(make_path(5), make_set(5, {0, 4})));
    Graph c5 = make_cycle(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK_FALSE(is_geodetic(c5, make_set(5, {u, v})));
    Graph k4 = make_complete(4);
    CHECK_FALSE(is_geodetic(k4, make_set(4, {0, 1, 2})));
    CHECK(is_geodetic(k4, VertexSet::universe(4)));
    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(is_geodetic(two, make_set(4, {0, 3})), std::invalid_argument);
}

TEST_CASE("is_edge_geodetic examples") {
    CHECK(is_edge_geodetic(make_path(5), make_set(5, {0, 4})));
    CHECK(is_edge_geodetic(make_cycle(4), make_set(4, {0, 2})));

    // C6 antipodal pair: the two geodesics traverse all six edges
    Graph c6 = make_cycle(6);
    {
        int covered = 0;
        for (auto [a, b] : c6.edges()) {
            auto d = all_pairs_distances(c6);
            if (d[0][a] + 1 + d[b][3] == d[0][3] ||
                d[0][b] + 1 + d[a][3] == d[0][3])
                ++covered;
        }
        CHECK(covered == 6);
    }
    CHECK(is_geodetic(c6, make_set(6, {0, 3})));
    CHECK(is_edge_geodetic(c6, make_set(6, {0, 3})));

    // diamond: {0,3} is geodetic but the chord 1-2 lies on no 0-3 geodesic
    Graph diamond = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_geodetic(diamond, make_set(4, {0, 3})));
    CHECK_FALSE(is_edge_geodetic(diamond, make_set(4, {0, 3})));
}

TEST_CASE("close_set examples") {
    // K3 on {0,1,2} plus pendant 3-0
    Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto cs = close_set(g, 3, make_set(4, {0, 1, 2}));
    CHECK(cs.base_distance == 1);
    CHECK(cs.members == make_set(4, {0}));

    // y inside X
    cs = close_set(g, 1, make_set(4, {0, 1, 2}));
    CHECK(cs.base_distance == 0);
    CHECK(cs.members == make_set(4, {1}));

    // y adjacent to all of X
    Graph h = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
    cs = close_set(h, 3, make_set(4, {0, 1, 2}));
    CHECK(cs.base_distance == 1);
    CHECK(cs.members == make_set(4, {0, 1, 2}));

    CHECK_THROWS_AS(close_set(make_cycle(4), 0, make_set(4, {1, 3})),
                    std::invalid_argument);
}

TEST_CASE("covered_through_cutset cases") {
    VertexSet x = make_set(5, {0, 1, 2});
    CHECK(covered_through_cutset(make_set(5, {0, 1}), make_set(5, {1, 2}), x) ==
          make_set(5, {1}));
    CHECK(covered_through_cutset(make_set(5, {0}), make_set(5, {1}), x) ==
          make_set(5, {0, 1}));
    CHECK(covered_through_cutset(make_set(5, {0}), make_set(5, {0}), x) ==
          make_set(5, {0}));
    CHECK_THROWS_AS(covered_through_cutset(VertexSet(5), make_set(5, {1}), x),
                    std::invalid_argument);
}

namespace {

// a random graph with a planted clique cutset X separating two sides
struct PlantedCutset {
    Graph graph;
    VertexSet x, left, right;
};

PlantedCutset plant_cutset(std::mt19937_64& rng, int max_n) {
    while (true) {
        int xs = 1 + int(rng() % 3);
        int ls = 1 + int(rng() % 3);
        int rs = 1 + int(rng() % 3);
        int n = xs + ls + rs;
        if (n > max_n) continue;
        std::vector<Edge> edges;
        // X is a clique
        for (int i = 0; i < xs; ++i)
            for (int j = i + 1; j < xs; ++j) edges.emplace_back(i, j);
        auto side_edges = [&](int base, int count) {
            for (int i = 0; i < count; ++i)
                for (int j = i + 1; j < count; ++j)
                    if (rng() % 2) edges.emplace_back(base + i, base + j);
            for (int i = 0; i < count; ++i)
                for (int j = 0; j < xs; ++j)
                    if (rng() % 2) edges.emplace_back(base + i, j);
        };
        side_edges(xs, ls);
        side_edges(xs + ls, rs);
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        PlantedCutset out;
        out.graph = g;
        out.x = VertexSet(n);
        out.left = VertexSet(n);
        out.right = VertexSet(n);
        for (int i = 0; i < xs; ++i) out.x.insert(i);
        for (int i = 0; i < ls; ++i) out.left.insert(xs + i);
        for (int i = 0; i < rs; ++i) out.right.insert(xs + ls + i);
        return out;
    }
}

} // namespace

TEST_CASE("clique cutset law on planted instances") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 150; ++iter) {
        auto inst = plant_cutset(rng, 10);
        const Graph& g = inst.graph;
        auto dist = all_pairs_distances(g);
        std::vector<int> ls = inst.left.to_vector();
        std::vector<int> rs = inst.right.to_vector();
        for (int u : ls)
            for (int v : rs) {
                auto a = close_set(g, u, inst.x, &dist);
                auto b = close_set(g, v, inst.x, &dist);
                auto expected = covered_through_cutset(a.members, b.members,
                                                       inst.x);
                auto got = interval_between(g, u, v, &dist) & inst.x;
                CHECK(got == expected);
            }
    }
}

TEST_CASE("two-value property holds for cliques") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + int(rng() % 6);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        // every edge is a 2-clique; close_set asserts internally
        for (auto [u, v] : g.edges()) {
            VertexSet x(n);
            x.insert(u);
            x.insert(v);
            for (int y = 0; y < n; ++y) CHECK_NOTHROW(close_set(g, y, x));
        }
    }
}
