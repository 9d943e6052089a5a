#include <doctest.h>

#include <random>
#include <stdexcept>

#include "catalog.hpp"
#include "linspect/graph.hpp"
#include "linspect/isomorphism.hpp"

using namespace linspect;

TEST_CASE("from_edge_list builds simple graphs") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph empty4 = Graph::from_edge_list(4, {});
    CHECK(empty4.edge_count() == 0);
    CHECK(empty4.degree_profile().isolated_count == 4);

    Graph dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(dup.edge_count() == 2);  // duplicates collapse

    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), std::out_of_range);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(65, {}), std::invalid_argument);
}

TEST_CASE("degree profile identifies leafs and isolated vertices") {
    Graph p3 = Graph::path(3);
    auto profile = p3.degree_profile();
    CHECK(profile.leafs == VertexSet::of({0, 2}));
    CHECK(profile.leaf_count == 2);
    CHECK(profile.isolated_count == 0);

    auto k4 = Graph::complete(4).degree_profile();
    CHECK(k4.leaf_count == 0);
    CHECK(k4.isolated_count == 0);

    auto two_isolated = Graph::edgeless(2).degree_profile();
    CHECK(two_isolated.leaf_count == 0);
    CHECK(two_isolated.isolated_count == 2);
}

TEST_CASE("neighborhoods") {
    CHECK(Graph::complete(4).neighborhood(0) == VertexSet::of({1, 2, 3}));
    CHECK(Graph::cycle(5).neighborhood(0) == VertexSet::of({1, 4}));
    CHECK(Graph::edgeless(3).neighborhood(1).empty());
    CHECK_THROWS_AS(Graph::path(3).neighborhood(3), std::out_of_range);
}

TEST_CASE("distance") {
    Graph c6 = Graph::cycle(6);
    CHECK(c6.distance(0, 3) == 3);
    CHECK(c6.distance(2, 2) == 0);
    Graph two_parts = disjoint_sum(Graph::complete(3), Graph::complete(2));
    CHECK(!two_parts.distance(0, 4).has_value());
}

TEST_CASE("distance matches edges and satisfies the triangle inequality") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testcat::random_graph(8, 0.3, rng);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                auto d = g.distance(a, b);
                if (a != b) CHECK((d == 1) == g.has_edge(a, b));
                for (int c = 0; c < 8; ++c) {
                    auto ab = g.distance(a, b), bc = g.distance(b, c), ac = g.distance(a, c);
                    if (ab && bc) {
                        REQUIRE(ac.has_value());
                        CHECK(*ac <= *ab + *bc);
                    }
                }
            }
    }
}

TEST_CASE("disjoint sums") {
    Graph sum = disjoint_sum(Graph::complete(3), Graph::complete(3));
    CHECK(sum.vertex_count() == 6);
    CHECK(sum.edge_count() == 6);
    CHECK(sum.connected_components().size() == 2);

    Graph g = testcat::paw();
    CHECK(disjoint_sum(g, Graph{}) == g);

    Graph mixed = disjoint_sum(Graph::edgeless(1), Graph::complete(2));
    CHECK(mixed.vertex_count() == 3);
    CHECK(mixed.edge_count() == 1);
    auto profile = mixed.degree_profile();
    CHECK(profile.isolated_count == 1);
    CHECK(profile.leaf_count == 2);
}

TEST_CASE("disjoint sum is associative and commutative up to relabeling") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Graph a = testcat::random_graph(4, 0.5, rng);
        Graph b = testcat::random_graph(3, 0.5, rng);
        Graph c = testcat::random_graph(3, 0.5, rng);
        CHECK(canonical_key(disjoint_sum(a, b)) == canonical_key(disjoint_sum(b, a)));
        CHECK(canonical_key(disjoint_sum(disjoint_sum(a, b), c)) ==
              canonical_key(disjoint_sum(a, disjoint_sum(b, c))));
    }
}

TEST_CASE("degree sum equals twice the edge count across the small catalog") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        int degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());
        auto profile = g.degree_profile();
        CHECK(profile.leaf_count + profile.isolated_count <= g.vertex_count());
    }
}

TEST_CASE("induced subgraph re-indexes densely") {
    Graph g = testcat::paw();
    std::vector<int> map;
    Graph sub = g.induced(VertexSet::of({0, 2, 3}), &map);
    CHECK(sub.vertex_count() == 3);
    CHECK(map[0] == 0);
    CHECK(map[1] == -1);
    CHECK(map[2] == 1);
    CHECK(map[3] == 2);
    CHECK(sub.has_edge(0, 1));  // 0-2 survives
    CHECK(sub.has_edge(1, 2));  // 2-3 survives
    CHECK(!sub.has_edge(0, 2));
}
