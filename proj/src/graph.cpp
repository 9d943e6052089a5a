#include "linspect/graph.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace linspect {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
    if (n < 0 || n > max_vertices) {
        throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
    }
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw std::out_of_range("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (a == b) {
            throw std::invalid_argument("loop at vertex " + std::to_string(a) + " is not allowed");
        }
        g.adj_[static_cast<std::size_t>(a)].add(b);
        g.adj_[static_cast<std::size_t>(b)].add(a);
    }
    int degree_sum = 0;
    for (const auto& row : g.adj_) degree_sum += row.count();
    g.m_ = degree_sum / 2;
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
    return from_edge_list(n, es);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a) es.emplace_back(std::min(a, (a + 1) % n), std::max(a, (a + 1) % n));
    return from_edge_list(n, es);
}

Graph Graph::path(int n) {
    std::vector<Edge> es;
    for (int a = 0; a + 1 < n; ++a) es.emplace_back(a, a + 1);
    return from_edge_list(n, es);
}

Graph Graph::edgeless(int n) { return from_edge_list(n, std::span<const Edge>{}); }

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y) es.emplace_back(x, a + y);
    return from_edge_list(a + b, es);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int a = 0; a < n_; ++a)
        for (int b : adj_[static_cast<std::size_t>(a)])
            if (b > a) out.emplace_back(a, b);
    return out;
}

bool Graph::is_clique(VertexSet s) const {
    for (int v : s) {
        check_vertex(v);
        VertexSet others = s;
        others.remove(v);
        if (!others.is_subset_of(adj_[static_cast<std::size_t>(v)])) return false;
    }
    return true;
}

Graph::DegreeProfile Graph::degree_profile() const {
    DegreeProfile p{};
    for (int v = 0; v < n_; ++v) {
        int d = adj_[static_cast<std::size_t>(v)].count();
        if (d == 0) p.isolated.add(v);
        if (d == 1) p.leafs.add(v);
    }
    p.leaf_count = p.leafs.count();
    p.isolated_count = p.isolated.count();
    return p;
}

std::optional<int> Graph::distance(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return 0;
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    dist[static_cast<std::size_t>(a)] = 0;
    std::deque<int> queue{a};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            if (w == b) return dist[static_cast<std::size_t>(w)];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

Graph Graph::complement() const {
    std::vector<Edge> es;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!adj_[static_cast<std::size_t>(a)].contains(b)) es.emplace_back(a, b);
    return from_edge_list(n_, es);
}

Graph Graph::induced(VertexSet keep, std::vector<int>* old_to_new) const {
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int v : keep) {
        check_vertex(v);
        map[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<Edge> es;
    for (int a : keep)
        for (int b : adj_[static_cast<std::size_t>(a)] & keep)
            if (b > a) es.emplace_back(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    if (old_to_new) *old_to_new = std::move(map);
    return from_edge_list(next, es);
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int s = 0; s < n_; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp = VertexSet::single(s);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier) next = next | adj_[static_cast<std::size_t>(u)];
            frontier = next - comp;
            comp = comp | next;
        }
        seen = seen | comp;
        comps.push_back(comp);
    }
    return comps;
}

bool Graph::is_connected() const { return n_ <= 1 || connected_components().size() == 1; }

bool Graph::is_triangle_free() const {
    for (int a = 0; a < n_; ++a)
        for (int b : adj_[static_cast<std::size_t>(a)])
            if (b > a && !(adj_[static_cast<std::size_t>(a)] & adj_[static_cast<std::size_t>(b)]).empty())
                return false;
    return true;
}

Graph disjoint_sum(const Graph& g1, const Graph& g2) {
    int shift = g1.vertex_count();
    std::vector<Edge> es = g1.edges();
    for (const auto& [a, b] : g2.edges()) es.emplace_back(a + shift, b + shift);
    return Graph::from_edge_list(shift + g2.vertex_count(), es);
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool sep = false;
    for (int v : s) {
        if (sep) os << ',';
        os << v;
        sep = true;
    }
    os << '}';
    return os.str();
}

}  // namespace linspect
