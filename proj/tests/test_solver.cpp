#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "catalog.hpp"
#include "linspect/brute_force.hpp"
#include "linspect/classify.hpp"
#include "linspect/clique.hpp"
#include "linspect/isomorphism.hpp"
#include "linspect/solver.hpp"

using namespace linspect;

namespace {

CliqueCover cover_of(std::initializer_list<std::initializer_list<int>> sets,
                     CliqueCover::Mode mode = CliqueCover::Mode::full) {
    CliqueCover cover;
    cover.mode = mode;
    for (auto s : sets) {
        VertexSet vs;
        for (int v : s) vs.add(v);
        cover.cliques.push_back(vs);
    }
    return cover;
}

void check_certificate(const Graph& g, const SolveResult& result) {
    CHECK(result.exact);
    CHECK(result.cover.size() == result.value);
    CHECK(verify_cover(g, result.cover).ok);
    if (result.cover.mode == CliqueCover::Mode::full) {
        REQUIRE(result.realization);
        CHECK(!check(*result.realization));
        CHECK(result.realization->point_count == result.value);
        CHECK(intersection_graph(*result.realization).graph == g);
    }
}

}  // namespace

TEST_CASE("verify_cover checks the cover conditions directly") {
    Graph k3 = Graph::complete(3);
    auto with_singletons = cover_of({{0, 1, 2}, {0}, {1}, {2}});
    auto verdict = verify_cover(k3, with_singletons);
    CHECK(verdict.ok);
    CHECK(verdict.detail == "valid cover of size 4");

    auto three_edges = cover_of({{0, 1}, {1, 2}, {0, 2}});
    CHECK(verify_cover(k3, three_edges).ok);  // witnesses v(K_3) <= 3

    auto not_a_clique = cover_of({{0, 1, 2}});
    CHECK(!verify_cover(Graph::cycle(4), not_a_clique).ok);

    auto double_covered = cover_of({{0, 1, 2}, {0, 1}, {2}});
    CHECK(!verify_cover(k3, double_covered).ok);

    auto vertex_short = cover_of({{0, 1, 2}, {0}, {1}});
    CHECK(!verify_cover(k3, vertex_short).ok);

    auto trivial_in_reduced = cover_of({{0, 1}, {1, 2}, {0, 2}, {0}}, CliqueCover::Mode::reduced);
    CHECK(!verify_cover(k3, trivial_in_reduced).ok);
}

TEST_CASE("linear intersection number on settled instances") {
    check_certificate(Graph::complete(5), linear_intersection_number(Graph::complete(5)));
    CHECK(linear_intersection_number(Graph::complete(5)).value == 5);
    CHECK(linear_intersection_number(Graph::cycle(7)).value == 7);
    CHECK(linear_intersection_number(Graph::complete(2)).value == 3);
    CHECK(linear_intersection_number(Graph::complete(1)).value == 2);
    CHECK(linear_intersection_number(Graph{}).value == 0);

    Graph diamond = testcat::diamond();
    SolveResult result = linear_intersection_number(diamond);
    CHECK(result.value == 4);
    check_certificate(diamond, result);
    // deterministic branch order lands on the documented certificate
    CHECK(result.cover.cliques ==
          std::vector<VertexSet>{VertexSet::of({0, 1, 2}), VertexSet::of({0, 3}),
                                 VertexSet::of({1, 3}), VertexSet::single(2)});
}

TEST_CASE("the Petersen graph meets its flag bound") {
    Graph petersen = testcat::petersen();
    BoundsReport report = bounds(petersen);
    CHECK(report.flag == 15);
    SolveResult result = linear_intersection_number(petersen);
    CHECK(result.value == 15);  // triangle-free: m + l + 2e
    check_certificate(petersen, result);
}

TEST_CASE("reduced linear intersection number") {
    for (int n = 2; n <= 6; ++n)
        CHECK(reduced_linear_intersection_number(Graph::complete(n)).value == 1);
    CHECK(reduced_linear_intersection_number(testcat::diamond()).value == 3);

    // triangle-free graphs have only edges as non-trivial cliques
    std::mt19937 rng(23);
    int seen = 0;
    while (seen < 10) {
        Graph g = testcat::random_graph(7, 0.3, rng);
        if (!g.is_triangle_free()) continue;
        ++seen;
        SolveResult result = reduced_linear_intersection_number(g);
        CHECK(result.value == g.edge_count());
        CHECK(verify_cover(g, result.cover).ok);
    }
}

TEST_CASE("brute force reference values") {
    CHECK(brute_force_v(Graph::path(3)) == 4);
    CHECK(brute_force_v(testcat::paw()) == 5);
    CHECK(brute_force_v(Graph::complete(4)) == 4);
    CHECK(brute_force_reduced_v(Graph::complete(4)) == 1);
    CHECK(brute_force_v(Graph{}) == 0);
    CHECK_THROWS_AS(brute_force_v(Graph::edgeless(8)), CapExceeded);
}

TEST_CASE("solver equals brute force on every class up to five vertices") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        BruteForceValues reference = brute_force_values(g);
        SolveResult full = linear_intersection_number(g);
        SolveResult reduced = reduced_linear_intersection_number(g);
        CHECK(full.value == reference.v);
        CHECK(reduced.value == reference.reduced_v);
        CHECK(reduced_v_via_clique_graph(g) == reference.reduced_v);
        check_certificate(g, full);
        CHECK(verify_cover(g, reduced.cover).ok);
        CHECK(reduced.value <= full.value);
    }
}

TEST_CASE("bounds report on the worked instances") {
    BoundsReport c5 = bounds(Graph::cycle(5));
    CHECK(c5.omega == 2);
    CHECK(c5.sqrt_bound == 4);
    CHECK(c5.seymour == 3);
    CHECK(c5.two_alpha == 4);
    CHECK(c5.k_independent == 4);
    CHECK(c5.flag == 5);
    CHECK(c5.flag_sum_value == 10);
    CHECK(c5.edge_bound == 5);
    CHECK(c5.best_lower == 5);
    CHECK(c5.binding == "flag");
    CHECK(c5.best_lower == linear_intersection_number(Graph::cycle(5)).value);

    for (int n = 3; n <= 6; ++n) {
        BoundsReport kn = bounds(Graph::complete(n));
        CHECK(kn.omega == n);
        CHECK(kn.seymour == n);
        CHECK(kn.two_alpha == 2);
        CHECK(kn.flag == 2);
        CHECK(kn.best_lower == n);
    }

    BoundsReport k22 = bounds(Graph::complete_bipartite(2, 2));
    CHECK(k22.k_independent == 4);
    CHECK(k22.k_independent == linear_intersection_number(Graph::complete_bipartite(2, 2)).value);

    // the square-side lower bound for balanced complete bipartite graphs
    BoundsReport k33 = bounds(Graph::complete_bipartite(3, 3));
    CHECK(k33.k_independent == 9);
    CHECK(linear_intersection_number(Graph::complete_bipartite(3, 3)).value == 9);

    BoundsReport empty = bounds(Graph{});
    CHECK(empty.best_lower == 0);
    CHECK(empty.edge_bound == 0);
}

TEST_CASE("bounds are sound across the small catalog") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        BoundsReport r = bounds(g);
        int v = linear_intersection_number(g).value;
        CHECK(r.omega <= v);
        CHECK(r.sqrt_bound <= v);
        CHECK(r.seymour <= v);
        CHECK(r.two_alpha <= v);
        CHECK(r.k_independent <= v);
        CHECK(r.flag <= v);
        CHECK(r.flag_weak <= r.flag);
        CHECK(r.best_lower <= v);
        CHECK(v <= r.edge_bound);
    }
}

TEST_CASE("additivity over disjoint sums") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        Graph a = testcat::random_graph(4, 0.5, rng);
        Graph b = testcat::random_graph(4, 0.5, rng);
        int va = linear_intersection_number(a).value;
        int vb = linear_intersection_number(b).value;
        CHECK(linear_intersection_number(disjoint_sum(a, b)).value == va + vb);
    }
}

TEST_CASE("restriction identities relating v and the reduced number") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        auto profile = g.degree_profile();
        int slack = profile.leaf_count + 2 * profile.isolated_count;
        int v = linear_intersection_number(g).value;
        int reduced = reduced_linear_intersection_number(g).value;
        VertexClassification c = classify_vertices(g);
        auto int_es = c.extremal_strongly_interior_set();
        REQUIRE(int_es);
        if (int_es->empty()) CHECK(v >= reduced + slack);
        if (c.strongly_interior_set().empty()) CHECK(v == reduced + slack);
    }
}

TEST_CASE("v is at most the reduced number plus n plus isolated count, equality characterized") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        int v = linear_intersection_number(g).value;
        int reduced = reduced_linear_intersection_number(g).value;
        int e = g.degree_profile().isolated_count;
        CHECK(v <= reduced + g.vertex_count() + e);
        bool only_vertices_and_edges = true;
        for (VertexSet comp : g.connected_components())
            only_vertices_and_edges &= comp.count() <= 2;
        CHECK((v == reduced + g.vertex_count() + e) == only_vertices_and_edges);
    }
}

TEST_CASE("budget exhaustion reports a certified interval") {
    Budget tiny;
    tiny.max_nodes = 1;
    SolveResult result = linear_intersection_number(Graph::complete(6), tiny);
    CHECK(!result.exact);
    CHECK(result.lower_bound <= 6);
    CHECK(result.upper_bound >= 6);
    CHECK(verify_cover(Graph::complete(6), result.cover).ok);
    CHECK(result.cover.size() == result.upper_bound);
}

TEST_CASE("identical inputs give identical certificates") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testcat::random_graph(6, 0.5, rng);
        SolveResult a = linear_intersection_number(g);
        SolveResult b = linear_intersection_number(g);
        CHECK(a.value == b.value);
        CHECK(a.cover.cliques == b.cover.cliques);
        CHECK(a.stats.nodes == b.stats.nodes);
    }
}

TEST_CASE("forced-clique solves decide extremal membership") {
    // in a complete graph the full vertex set never appears in a minimum cover
    for (int n = 3; n <= 6; ++n) {
        Graph kn = Graph::complete(n);
        SolveResult forced = solve_with_forced_clique(kn, kn.vertices());
        CHECK(forced.value == n + 1);
        CHECK(linear_intersection_number(kn).value == n);
    }
    CHECK_THROWS_AS(solve_with_forced_clique(Graph::cycle(4), VertexSet::of({0, 1, 2})),
                    std::invalid_argument);
}

TEST_CASE("EFL verdicts") {
    for (int n = 3; n <= 6; ++n) {
        EflVerdict verdict = verify_efl(Graph::complete(n));
        CHECK(verdict.decided);
        CHECK(verdict.holds);
        CHECK(verdict.margin == 0);
    }
    EflVerdict k2 = verify_efl(Graph::complete(2));
    CHECK(k2.holds);
    CHECK(k2.margin == 1);  // chi = 2 while v(K_2) = 3
    EflVerdict c5 = verify_efl(Graph::cycle(5));
    CHECK(c5.chi == 3);
    CHECK(c5.v.value == 5);
    CHECK(c5.holds);
    CHECK(c5.margin == 2);
}

TEST_CASE("edge deletion drops v by at most one") {
    EdgeDeleteCheck diamond_check = edge_delete_check(Graph::complete(4), {2, 3});
    CHECK(diamond_check.v_before == 4);
    CHECK(diamond_check.v_after == 4);
    CHECK(diamond_check.lemma_holds);

    EdgeDeleteCheck c4_check = edge_delete_check(Graph::cycle(4), {0, 1});
    CHECK(c4_check.v_before == 4);
    CHECK(c4_check.v_after == 5);  // the path P_4
    CHECK(c4_check.lemma_holds);

    EdgeDeleteCheck k3_check = edge_delete_check(Graph::complete(3), {0, 1});
    CHECK(k3_check.v_before == 3);
    CHECK(k3_check.v_after == 4);  // the path P_3
    CHECK(k3_check.lemma_holds);

    CHECK_THROWS_AS(edge_delete_check(Graph::cycle(4), {0, 2}), std::invalid_argument);
}

TEST_CASE("realizations from covers pin the identity labeling") {
    Graph g = testcat::bowtie();
    SolveResult result = linear_intersection_number(g);
    REQUIRE(result.realization);
    const LinearHypergraph& h = *result.realization;
    REQUIRE(h.line_count() == g.vertex_count());
    for (int line = 0; line < h.line_count(); ++line) {
        std::vector<int> expected;
        for (int i = 0; i < result.cover.size(); ++i)
            if (result.cover.cliques[static_cast<std::size_t>(i)].contains(line))
                expected.push_back(i);
        CHECK(h.lines[static_cast<std::size_t>(line)] == expected);
    }
}
