#include "linspect/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace linspect {

namespace {

int exact_value(const SolveResult& r) {
    if (!r.exact) throw BudgetExceededError();
    return r.value;
}

bool extremal_interior(const Graph& g, int x, const Budget& budget) {
    if (!g.is_clique(g.neighborhood(x))) return false;
    if (g.degree(x) <= 1) return true;
    VertexSet closed = g.neighborhood(x);
    closed.add(x);
    int base = exact_value(linear_intersection_number(g, budget));
    int forced = exact_value(solve_with_forced_clique(g, closed, budget));
    return forced == base;
}

}  // namespace

SurgeryOutcome join_at_vertex(const Graph& g1, const Graph& g2, int a1, int a2,
                              const Budget& budget) {
    if (a1 < 0 || a1 >= g1.vertex_count()) throw std::out_of_range("a1 out of range");
    if (a2 < 0 || a2 >= g2.vertex_count()) throw std::out_of_range("a2 out of range");

    int n1 = g1.vertex_count();
    std::vector<int> map1(static_cast<std::size_t>(n1));
    for (int v = 0; v < n1; ++v) map1[static_cast<std::size_t>(v)] = v;
    std::vector<int> map2(static_cast<std::size_t>(g2.vertex_count()));
    int next = n1;
    for (int v = 0; v < g2.vertex_count(); ++v)
        map2[static_cast<std::size_t>(v)] = v == a2 ? a1 : next++;

    std::vector<Edge> es = g1.edges();
    for (const auto& [a, b] : g2.edges()) {
        int x = map2[static_cast<std::size_t>(a)], y = map2[static_cast<std::size_t>(b)];
        es.emplace_back(std::min(x, y), std::max(x, y));
    }
    SurgeryOutcome out;
    out.result = Graph::from_edge_list(n1 + g2.vertex_count() - 1, es);
    out.vertex_maps = {std::move(map1), std::move(map2)};

    int v1 = exact_value(linear_intersection_number(g1, budget));
    int v2 = exact_value(linear_intersection_number(g2, budget));
    out.prediction.kind = SurgeryPrediction::Kind::equality;
    if (g1.degree(a1) == 0 || g2.degree(a2) == 0) {
        out.prediction.rhs = v1 + v2 - 2;
        out.prediction.provenance = "vertex join at an isolated vertex";
    } else {
        int t = (extremal_interior(g1, a1, budget) ? 1 : 0) +
                (extremal_interior(g2, a2, budget) ? 1 : 0);
        out.prediction.rhs = v1 + v2 - t;
        out.prediction.provenance = "vertex join, t = " + std::to_string(t);
    }
    out.prediction.reduced_value =
        exact_value(reduced_linear_intersection_number(g1, budget)) +
        exact_value(reduced_linear_intersection_number(g2, budget));
    return out;
}

SurgeryOutcome collapse(const Graph& g, int a, int b, const Budget& budget) {
    if (a == b) throw std::invalid_argument("collapse needs two distinct vertices");
    if (g.has_edge(a, b)) throw std::invalid_argument("collapse endpoints must be non-adjacent");

    int n = g.vertex_count();
    std::vector<int> map(static_cast<std::size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v)
        map[static_cast<std::size_t>(v)] = (v == a || v == b) ? n - 2 : next++;
    std::vector<Edge> es;
    for (const auto& [x, y] : g.edges()) {
        int u = map[static_cast<std::size_t>(x)], w = map[static_cast<std::size_t>(y)];
        es.emplace_back(std::min(u, w), std::max(u, w));
    }
    SurgeryOutcome out;
    out.result = Graph::from_edge_list(n - 1, es);
    out.vertex_maps = {std::move(map)};

    std::optional<int> distance = g.distance(a, b);
    auto at_least = [&](int d) { return !distance || *distance >= d; };
    if (at_least(3)) {
        bool a_interior = g.is_clique(g.neighborhood(a));
        bool b_interior = g.is_clique(g.neighborhood(b));
        int value = exact_value(linear_intersection_number(g, budget));
        if (at_least(4) && !a_interior && !b_interior) {
            out.prediction.kind = SurgeryPrediction::Kind::equality;
            out.prediction.provenance = "collapse at distance >= 4, endpoints not interior";
        } else {
            out.prediction.kind = SurgeryPrediction::Kind::at_most;
            out.prediction.provenance = "collapse at distance >= 3";
        }
        out.prediction.rhs = value;
    } else {
        out.prediction.provenance = "collapse rule inapplicable (distance < 3)";
    }
    return out;
}

SurgeryOutcome remove_clique(const Graph& g, VertexSet clique, const Budget& budget) {
    if (clique.count() < 3) throw std::invalid_argument("clique must have at least 3 vertices");
    if (!g.is_clique(clique)) throw std::invalid_argument("given set is not a clique");

    // survivors: endpoints of edges not inside the clique, plus V \ C
    std::vector<Edge> surviving_edges;
    VertexSet survivors = g.vertices() - clique;
    for (const auto& [a, b] : g.edges()) {
        if (clique.contains(a) && clique.contains(b)) continue;
        surviving_edges.emplace_back(a, b);
        survivors.add(a);
        survivors.add(b);
    }
    int n = g.vertex_count();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : survivors) map[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> es;
    for (const auto& [a, b] : surviving_edges)
        es.emplace_back(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);

    SurgeryOutcome out;
    out.result = Graph::from_edge_list(next, es);
    out.vertex_maps = {std::move(map)};

    VertexSet attachments = survivors & clique;
    int value = exact_value(linear_intersection_number(g, budget));
    bool equality_case = false;
    if (attachments.empty()) {
        equality_case = true;  // the clique was a whole component
    } else if (attachments.count() == 1) {
        int a_new = out.vertex_maps[0][static_cast<std::size_t>(attachments.first())];
        equality_case = !extremal_interior(out.result, a_new, budget);
    }
    if (equality_case) {
        out.prediction.kind = SurgeryPrediction::Kind::equality;
        out.prediction.rhs = value - clique.count();
        out.prediction.provenance = "clique removal, equality case";
    } else {
        out.prediction.kind = SurgeryPrediction::Kind::at_least;
        out.prediction.rhs = value - clique.count() + 1;
        out.prediction.provenance = "clique removal, strict case";
    }
    return out;
}

SurgeryOutcome delete_edge(const Graph& g, Edge e, const Budget& budget) {
    auto [a, b] = e;
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= g.vertex_count() || !g.has_edge(a, b))
        throw std::invalid_argument("(" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is not an edge");
    std::vector<Edge> es;
    for (const auto& edge : g.edges())
        if (edge != Edge{a, b}) es.push_back(edge);

    SurgeryOutcome out;
    out.result = Graph::from_edge_list(g.vertex_count(), es);
    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) map[static_cast<std::size_t>(v)] = v;
    out.vertex_maps = {std::move(map)};
    out.prediction.kind = SurgeryPrediction::Kind::at_least;
    out.prediction.rhs = exact_value(linear_intersection_number(g, budget)) - 1;
    out.prediction.provenance = "edge deletion drops v by at most one";
    return out;
}

LinearHypergraph extend_realization_with_edge(const LinearHypergraph& h, int line_x, int line_y) {
    if (line_x < 0 || line_y < 0 || line_x >= h.line_count() || line_y >= h.line_count() ||
        line_x == line_y)
        throw std::invalid_argument("two distinct line indices required");
    const auto& lx = h.lines[static_cast<std::size_t>(line_x)];
    const auto& ly = h.lines[static_cast<std::size_t>(line_y)];
    for (int p : lx)
        if (std::binary_search(ly.begin(), ly.end(), p))
            throw std::invalid_argument("lines already share a point");
    LinearHypergraph out = h;
    int infinity_point = out.point_count++;
    out.lines[static_cast<std::size_t>(line_x)].push_back(infinity_point);
    out.lines[static_cast<std::size_t>(line_y)].push_back(infinity_point);
    return out;
}

LinearHypergraph near_pencil(int n) {
    if (n < 3) throw std::invalid_argument("near-pencil needs at least 3 points");
    LinearHypergraph h;
    h.point_count = n;
    std::vector<int> long_line(static_cast<std::size_t>(n - 1));
    for (int p = 0; p + 1 < n; ++p) long_line[static_cast<std::size_t>(p)] = p;
    h.lines.push_back(std::move(long_line));
    for (int p = 0; p + 1 < n; ++p) h.lines.push_back({p, n - 1});
    return h;
}

}  // namespace linspect
