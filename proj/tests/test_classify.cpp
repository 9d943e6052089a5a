#include <doctest.h>

#include "catalog.hpp"
#include "linspect/classify.hpp"
#include "linspect/solver.hpp"

using namespace linspect;

TEST_CASE("interior taxonomy on complete graphs") {
    for (int n = 3; n <= 6; ++n) {
        Graph kn = Graph::complete(n);
        VertexClassification c = classify_vertices(kn);
        CHECK(c.interior_set() == kn.vertices());
        CHECK(c.strongly_interior_set() == kn.vertices());
        auto int_e = c.extremal_interior_set();
        REQUIRE(int_e);
        CHECK(int_e->empty());
    }
}

TEST_CASE("interior taxonomy on the paw") {
    // vertices: triangle {0,1,2}, pendant 2-3
    Graph g = testcat::paw();
    VertexClassification c = classify_vertices(g);
    CHECK(c.interior_set() == VertexSet::of({0, 1, 3}));
    CHECK(c.strongly_interior_set() == VertexSet::of({0, 1}));
    auto int_es = c.extremal_strongly_interior_set();
    REQUIRE(int_es);
    CHECK(*int_es == VertexSet::of({0, 1}));  // the tips of the glued triangle
    auto int_e = c.extremal_interior_set();
    REQUIRE(int_e);
    CHECK(int_e->contains(3));  // leaf
}

TEST_CASE("cycles have no interior vertices") {
    for (int n = 4; n <= 8; ++n)
        CHECK(classify_vertices(Graph::cycle(n)).interior_set().empty());
}

TEST_CASE("leafs and isolated vertices are extremal interior") {
    Graph g = disjoint_sum(Graph::path(3), Graph::edgeless(1));
    VertexClassification c = classify_vertices(g);
    auto int_e = c.extremal_interior_set();
    REQUIRE(int_e);
    CHECK(int_e->contains(0));
    CHECK(int_e->contains(2));
    CHECK(int_e->contains(3));
    CHECK(!int_e->contains(1));  // middle of the path is not interior
}

TEST_CASE("almost-triangle-free recognition") {
    auto paw = is_almost_triangle_free(testcat::paw());
    REQUIRE(paw);
    CHECK(paw->triangles.size() == 1);
    CHECK(paw->triangles[0].attachment == 2);
    CHECK(paw->base_vertices == VertexSet::of({2, 3}));
    CHECK(paw->base_edges == std::vector<Edge>{{2, 3}});
    CHECK(paw->extremal_vertices == VertexSet::of({0, 1}));

    CHECK(!is_almost_triangle_free(testcat::diamond()));
    CHECK(!is_almost_triangle_free(Graph::complete(4)));

    auto c6 = is_almost_triangle_free(Graph::cycle(6));
    REQUIRE(c6);
    CHECK(c6->triangles.empty());
    CHECK(c6->base_vertices == Graph::cycle(6).vertices());

    // a lone component triangle attaches to an isolated base vertex:
    // none of its vertices count as extremal
    auto k3 = is_almost_triangle_free(Graph::complete(3));
    REQUIRE(k3);
    CHECK(k3->triangles.size() == 1);
    CHECK(k3->triangles[0].attachment == 0);
    CHECK(k3->extremal_vertices.empty());

    // two triangles at one vertex: the exception no longer applies
    auto bowtie = is_almost_triangle_free(testcat::bowtie());
    REQUIRE(bowtie);
    CHECK(bowtie->triangles.size() == 2);
    CHECK(bowtie->extremal_vertices == VertexSet::of({0, 1, 3, 4}));

    // a triangle with two outside contacts cannot be glued
    Graph cricket = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    CHECK(!is_almost_triangle_free(cricket));
}

TEST_CASE("atf equality characterization at small sizes") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        auto profile = g.degree_profile();
        int edge_bound = g.edge_count() + profile.leaf_count + 2 * profile.isolated_count;
        bool tight = linear_intersection_number(g).value == edge_bound;
        CHECK(tight == is_almost_triangle_free(g).has_value());
    }
}

TEST_CASE("atf extremal vertices are the extremal strongly interior vertices") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        auto decomposition = is_almost_triangle_free(g);
        if (!decomposition) continue;
        auto int_es = classify_vertices(g).extremal_strongly_interior_set();
        REQUIRE(int_es);
        CHECK(*int_es == decomposition->extremal_vertices);
    }
}

TEST_CASE("closed forms") {
    auto sum = closed_form_v(disjoint_sum(Graph::complete(6), Graph::cycle(5)));
    REQUIRE(sum);
    CHECK(sum->value == 11);
    REQUIRE(sum->components.size() == 2);
    CHECK(sum->components[0].rule == "complete");
    CHECK(sum->components[1].rule == "cycle");

    auto star = closed_form_v(Graph::complete_bipartite(1, 4));
    REQUIRE(star);
    CHECK(star->value == 8);  // n + l - 1
    CHECK(star->components[0].rule == "tree");

    auto paw_plus_k2 = closed_form_v(disjoint_sum(testcat::paw(), Graph::complete(2)));
    REQUIRE(paw_plus_k2);
    CHECK(paw_plus_k2->value == 8);
    CHECK(paw_plus_k2->components[0].rule == "almost-triangle-free");
    CHECK(paw_plus_k2->components[1].rule == "complete");

    CHECK(!closed_form_v(testcat::diamond()));

    auto k1 = closed_form_v(Graph::complete(1));
    REQUIRE(k1);
    CHECK(k1->value == 2);
    auto k2 = closed_form_v(Graph::complete(2));
    REQUIRE(k2);
    CHECK(k2->value == 3);
}

TEST_CASE("closed forms agree with the solver where defined") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        auto form = closed_form_v(g);
        if (form) CHECK(form->value == linear_intersection_number(g).value);
    }
}

TEST_CASE("triangle-free graphs are strongly-interior free with reduced number m") {
    for (const Graph& g : testcat::graphs_up_to(5)) {
        if (!g.is_triangle_free()) continue;
        CHECK(classify_vertices(g).strongly_interior_set().empty());
        CHECK(reduced_linear_intersection_number(g).value == g.edge_count());
    }
}
