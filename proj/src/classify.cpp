#include "linspect/classify.hpp"

#include <algorithm>
#include <map>

#include "linspect/clique.hpp"

namespace linspect {

VertexSet VertexClassification::interior_set() const {
    VertexSet s;
    for (std::size_t v = 0; v < vertex.size(); ++v)
        if (vertex[v].interior) s.add(static_cast<int>(v));
    return s;
}

VertexSet VertexClassification::strongly_interior_set() const {
    VertexSet s;
    for (std::size_t v = 0; v < vertex.size(); ++v)
        if (vertex[v].strongly_interior) s.add(static_cast<int>(v));
    return s;
}

std::optional<VertexSet> VertexClassification::extremal_interior_set() const {
    VertexSet s;
    for (std::size_t v = 0; v < vertex.size(); ++v) {
        if (!vertex[v].extremal_interior) return std::nullopt;
        if (*vertex[v].extremal_interior) s.add(static_cast<int>(v));
    }
    return s;
}

std::optional<VertexSet> VertexClassification::extremal_strongly_interior_set() const {
    VertexSet s;
    for (std::size_t v = 0; v < vertex.size(); ++v) {
        if (!vertex[v].extremal_strongly_interior) return std::nullopt;
        if (*vertex[v].extremal_strongly_interior) s.add(static_cast<int>(v));
    }
    return s;
}

VertexClassification classify_vertices(const Graph& g, const Budget& budget) {
    VertexClassification result;
    result.vertex.assign(static_cast<std::size_t>(g.vertex_count()), {});
    for (int x = 0; x < g.vertex_count(); ++x) {
        auto& flags = result.vertex[static_cast<std::size_t>(x)];
        int degree = g.degree(x);
        flags.leaf = degree == 1;
        flags.isolated = degree == 0;
        flags.interior = g.is_clique(g.neighborhood(x));
        flags.strongly_interior = flags.interior && degree >= 2;
    }

    // extremal flags: leafs and isolated vertices qualify outright; a strongly
    // interior vertex qualifies iff forcing its closed neighborhood into the
    // cover does not worsen the optimum
    std::optional<int> v_exact;
    SolveResult base = linear_intersection_number(g, budget);
    if (base.exact) v_exact = base.value;

    for (int x = 0; x < g.vertex_count(); ++x) {
        auto& flags = result.vertex[static_cast<std::size_t>(x)];
        if (!flags.interior) {
            flags.extremal_interior = false;
        } else if (flags.leaf || flags.isolated) {
            flags.extremal_interior = true;
        } else if (v_exact) {
            VertexSet closed = g.neighborhood(x);
            closed.add(x);
            SolveResult forced = solve_with_forced_clique(g, closed, budget);
            if (forced.exact)
                flags.extremal_interior = forced.value == *v_exact;
        }
        if (flags.extremal_interior)
            flags.extremal_strongly_interior = flags.strongly_interior && *flags.extremal_interior;
    }
    return result;
}

namespace {

std::vector<VertexSet> all_triangles(const Graph& g) {
    std::vector<VertexSet> triangles;
    for_each_clique(g, 3, [&](VertexSet c) {
        if (c.count() == 3) triangles.push_back(c);
        return true;
    });
    return triangles;
}

}  // namespace

std::optional<AtfDecomposition> is_almost_triangle_free(const Graph& g) {
    std::vector<VertexSet> triangles = all_triangles(g);
    for (std::size_t i = 0; i < triangles.size(); ++i)
        for (std::size_t j = i + 1; j < triangles.size(); ++j)
            if ((triangles[i] & triangles[j]).count() >= 2) return std::nullopt;

    AtfDecomposition out;
    VertexSet new_vertices;
    for (VertexSet t : triangles) {
        // private vertices of a glued triangle have no edges outside it
        std::vector<int> degree_two, rest;
        for (int v : t) (g.degree(v) == 2 ? degree_two : rest).push_back(v);
        int attachment;
        if (degree_two.size() == 3) {
            attachment = t.first();  // component triangle: smallest vertex hosts it
        } else if (degree_two.size() == 2) {
            attachment = rest.front();
        } else {
            return std::nullopt;  // two vertices with outside contacts
        }
        VertexSet privates = t;
        privates.remove(attachment);
        int a = privates.first();
        privates.remove(a);
        int b = privates.first();
        out.triangles.push_back({attachment, a, b});
        new_vertices.add(a);
        new_vertices.add(b);
    }

    out.base_vertices = g.vertices() - new_vertices;
    for (const auto& [a, b] : g.edges())
        if (out.base_vertices.contains(a) && out.base_vertices.contains(b))
            out.base_edges.emplace_back(a, b);

    // base degree counts base edges only, not glued triangles
    std::map<int, int> base_degree, triangles_at;
    for (const auto& [a, b] : out.base_edges) {
        ++base_degree[a];
        ++base_degree[b];
    }
    for (const auto& t : out.triangles) ++triangles_at[t.attachment];
    for (const auto& t : out.triangles) {
        bool lone_at_isolated = base_degree[t.attachment] == 0 && triangles_at[t.attachment] == 1;
        if (!lone_at_isolated) {
            out.extremal_vertices.add(t.new_a);
            out.extremal_vertices.add(t.new_b);
        }
    }
    return out;
}

namespace {

std::optional<ComponentForm> component_closed_form(const Graph& whole, VertexSet comp) {
    Graph g = whole.induced(comp);
    int n = g.vertex_count();
    int m = g.edge_count();
    auto profile = g.degree_profile();
    ComponentForm form{comp, "", 0};

    if (m == n * (n - 1) / 2) {
        form.rule = "complete";
        form.value = n == 1 ? 2 : (n == 2 ? 3 : n);
        return form;
    }
    bool two_regular = true;
    for (int v = 0; v < n; ++v) two_regular = two_regular && g.degree(v) == 2;
    if (two_regular && g.is_connected()) {
        form.rule = "cycle";
        form.value = n;
        return form;
    }
    if (m == n - 1 && g.is_connected()) {
        form.rule = "tree";
        form.value = n + profile.leaf_count - 1;
        return form;
    }
    if (g.is_triangle_free()) {
        form.rule = "triangle-free";
        form.value = m + profile.leaf_count + 2 * profile.isolated_count;
        return form;
    }
    if (is_almost_triangle_free(g)) {
        form.rule = "almost-triangle-free";
        form.value = m + profile.leaf_count + 2 * profile.isolated_count;
        return form;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ClosedFormResult> closed_form_v(const Graph& g) {
    ClosedFormResult result;
    for (VertexSet comp : g.connected_components()) {
        auto form = component_closed_form(g, comp);
        if (!form) return std::nullopt;
        result.value += form->value;
        result.components.push_back(std::move(*form));
    }
    return result;
}

}  // namespace linspect
