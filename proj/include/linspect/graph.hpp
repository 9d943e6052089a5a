#ifndef LINSPECT_GRAPH_HPP
#define LINSPECT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linspect {

/// A set of vertices of a graph with at most 64 vertices, backed by a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    /// Lowest member; undefined on the empty set.
    int first() const { return __builtin_ctzll(bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    struct iterator {
        std::uint64_t rest;
        int operator*() const { return __builtin_ctzll(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits_}; }
    iterator end() const { return {0}; }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;  // normalized: first < second

/// Finite simple undirected graph on dense vertex indices 0..n-1.
/// Immutable after construction; at most 64 vertices (bitset adjacency rows).
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;  // the empty graph (n = 0)

    /// Builds a graph from an edge list. Duplicate pairs are collapsed;
    /// loops and out-of-range endpoints are rejected.
    static Graph from_edge_list(int n, std::span<const Edge> pairs);
    static Graph from_edge_list(int n, std::initializer_list<Edge> pairs) {
        return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
    }

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph edgeless(int n);
    static Graph complete_bipartite(int a, int b);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int a, int b) const {
        check_vertex(a);
        check_vertex(b);
        return adj_[static_cast<std::size_t>(a)].contains(b);
    }

    /// Neighborhood G_x as a vertex set; x itself is never a member.
    VertexSet neighborhood(int x) const {
        check_vertex(x);
        return adj_[static_cast<std::size_t>(x)];
    }

    int degree(int x) const { return neighborhood(x).count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Edges in lexicographic order of (a, b) with a < b.
    std::vector<Edge> edges() const;

    /// True iff S induces a clique (singletons and the empty set count).
    bool is_clique(VertexSet s) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // ---- derived invariants ----

    struct DegreeProfile {
        VertexSet leafs;     // degree 1
        int leaf_count;      // l(G)
        VertexSet isolated;  // degree 0
        int isolated_count;  // e(G)
    };
    DegreeProfile degree_profile() const;

    /// Shortest-path distance; empty when a and b lie in distinct components.
    std::optional<int> distance(int a, int b) const;

    Graph complement() const;

    /// Subgraph induced by `keep`, densely re-indexed in ascending vertex order.
    /// `old_to_new`, when given, receives the index map (-1 for dropped vertices).
    Graph induced(VertexSet keep, std::vector<int>* old_to_new = nullptr) const;

    std::vector<VertexSet> connected_components() const;
    bool is_connected() const;
    bool is_triangle_free() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Vertex-disjoint union; vertices of g2 are shifted by g1.vertex_count().
Graph disjoint_sum(const Graph& g1, const Graph& g2);

std::string to_string(const VertexSet& s);

}  // namespace linspect

#endif
