#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "catalog.hpp"
#include "linspect/isomorphism.hpp"

using namespace linspect;

TEST_CASE("relabeled graphs share the canonical key") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testcat::random_graph(8, 0.5, rng);
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_key(g) == canonical_key(relabeled(g, perm)));
        CHECK(is_isomorphic(g, relabeled(g, perm)));
    }
}

TEST_CASE("same degree sequence, different structure") {
    Graph c6 = Graph::cycle(6);
    Graph two_triangles = disjoint_sum(Graph::complete(3), Graph::complete(3));
    CHECK(!is_isomorphic(c6, two_triangles));

    // the two regular 4-vertex graphs of degree 2 vs the path family
    CHECK(!is_isomorphic(Graph::path(4), Graph::cycle(4)));
}

TEST_CASE("canonical labeling actually produces the key it reports") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testcat::random_graph(7, 0.5, rng);
        CanonicalForm canon = canonical_form(g);
        Graph canonical = relabeled(g, canon.labeling);
        CHECK(canonical_key(canonical) == canon.key);
        CHECK(is_isomorphic(g, canonical));
    }
}

TEST_CASE("highly symmetric graphs are handled") {
    CHECK(is_isomorphic(Graph::complete(9), Graph::complete(9)));
    CHECK(!is_isomorphic(Graph::complete(9), Graph::edgeless(9)));

    Graph petersen = testcat::petersen();
    std::vector<int> rotate(10);
    for (int v = 0; v < 10; ++v) rotate[static_cast<std::size_t>(v)] = (v + 1) % 5 + (v / 5) * 5;
    CHECK(is_isomorphic(petersen, relabeled(petersen, rotate)));

    CHECK(is_isomorphic(Graph::cycle(12), relabeled(Graph::cycle(12), [] {
                            std::vector<int> shift(12);
                            for (int v = 0; v < 12; ++v) shift[static_cast<std::size_t>(v)] = (v + 5) % 12;
                            return shift;
                        }())));
}

TEST_CASE("catalog class counts match the known values") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(testcat::graphs_with(n).size() == expected[n]);

    const std::size_t tree_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) CHECK(testcat::trees_with(n).size() == tree_counts[n - 1]);
}

TEST_CASE("catalog members are pairwise non-isomorphic") {
    const auto& classes = testcat::graphs_with(5);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK(!is_isomorphic(classes[i], classes[j]));
}
