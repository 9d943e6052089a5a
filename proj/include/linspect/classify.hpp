#ifndef LINSPECT_CLASSIFY_HPP
#define LINSPECT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "linspect/graph.hpp"
#include "linspect/solver.hpp"

namespace linspect {

/// Per-vertex membership in the leaf/isolated/interior hierarchy. A vertex is
/// interior when its neighborhood is a clique, strongly interior when it is
/// interior with degree at least two, and extremal interior when some minimum
/// cover uses its closed neighborhood as a member (equivalently, contains the
/// vertex as a trivial clique). Leafs and isolated vertices are always
/// extremal interior. The extremal flags need exact solves, so they are
/// absent when the budget runs out.
struct VertexClassification {
    struct Flags {
        bool leaf = false;
        bool isolated = false;
        bool interior = false;
        bool strongly_interior = false;
        std::optional<bool> extremal_interior;
        std::optional<bool> extremal_strongly_interior;
    };
    std::vector<Flags> vertex;

    VertexSet interior_set() const;
    VertexSet strongly_interior_set() const;
    std::optional<VertexSet> extremal_interior_set() const;
    std::optional<VertexSet> extremal_strongly_interior_set() const;
};

VertexClassification classify_vertices(const Graph& g, const Budget& budget = {});

/// A witness that G is almost triangle-free: a triangle-free base graph with
/// triangles glued at single base vertices, pairwise disjoint outside the base.
struct GluedTriangle {
    int attachment;  // base vertex
    int new_a;       // the two vertices private to this triangle, new_a < new_b
    int new_b;
};
struct AtfDecomposition {
    VertexSet base_vertices;
    std::vector<Edge> base_edges;
    std::vector<GluedTriangle> triangles;
    /// Triangle vertices outside the base, except both private vertices of a
    /// triangle that is the only one glued to an isolated base vertex.
    VertexSet extremal_vertices;
};

/// Structural recognition (triangle overlap analysis); no solver involved, so
/// comparing against v(G) = m + l + 2e is a genuine cross-check.
std::optional<AtfDecomposition> is_almost_triangle_free(const Graph& g);

/// Closed-form v(G) when every connected component is complete, a cycle, a
/// tree, triangle-free, or almost triangle-free; absent otherwise.
struct ComponentForm {
    VertexSet component;
    std::string rule;  // "complete", "cycle", "tree", "triangle-free", "almost-triangle-free"
    int value;
};
struct ClosedFormResult {
    int value = 0;
    std::vector<ComponentForm> components;
};
std::optional<ClosedFormResult> closed_form_v(const Graph& g);

}  // namespace linspect

#endif
