#include "linspect/brute_force.hpp"

#include <algorithm>
#include <vector>

namespace linspect {

namespace {

// Plain adjacency-matrix view; everything below works on int lists so the
// reference stays structurally unrelated to the bitset solver.
struct MatrixGraph {
    int n;
    std::vector<std::vector<bool>> adj;

    explicit MatrixGraph(const Graph& g)
        : n(g.vertex_count()),
          adj(static_cast<std::size_t>(g.vertex_count()),
              std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false)) {
        for (const auto& [a, b] : g.edges()) {
            adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
            adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
        }
    }
};

using Member = std::vector<int>;  // sorted vertex list

bool family_is_valid(const MatrixGraph& g, const std::vector<Member>& family, bool need_two) {
    std::vector<std::vector<int>> edge_count(static_cast<std::size_t>(g.n),
                                             std::vector<int>(static_cast<std::size_t>(g.n), 0));
    std::vector<int> vertex_count(static_cast<std::size_t>(g.n), 0);
    for (const auto& member : family) {
        for (std::size_t i = 0; i < member.size(); ++i) {
            ++vertex_count[static_cast<std::size_t>(member[i])];
            for (std::size_t j = i + 1; j < member.size(); ++j) {
                int a = member[i], b = member[j];
                if (!g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) return false;
                ++edge_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            }
        }
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            int expected = g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ? 1 : 0;
            if (edge_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != expected)
                return false;
        }
    if (need_two)
        for (int v = 0; v < g.n; ++v)
            if (vertex_count[static_cast<std::size_t>(v)] < 2) return false;
    return true;
}

struct Enumeration {
    const MatrixGraph& g;
    std::vector<std::vector<bool>> covered;
    std::vector<Member> parts;
    long long best_full;     // |parts| + singleton completion
    long long best_reduced;  // |parts|

    explicit Enumeration(const MatrixGraph& graph)
        : g(graph),
          covered(static_cast<std::size_t>(graph.n),
                  std::vector<bool>(static_cast<std::size_t>(graph.n), false)),
          best_full(-1),
          best_reduced(-1) {}

    bool find_uncovered(int& a, int& b) const {
        for (a = 0; a < g.n; ++a)
            for (b = a + 1; b < g.n; ++b)
                if (g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    !covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    return true;
        return false;
    }

    bool usable(const Member& member) const {
        for (std::size_t i = 0; i < member.size(); ++i)
            for (std::size_t j = i + 1; j < member.size(); ++j) {
                int a = member[i], b = member[j];
                if (!g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) return false;
                if (covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) return false;
            }
        return true;
    }

    void mark(const Member& member, bool value) {
        for (std::size_t i = 0; i < member.size(); ++i)
            for (std::size_t j = i + 1; j < member.size(); ++j) {
                covered[static_cast<std::size_t>(member[i])][static_cast<std::size_t>(member[j])] = value;
                covered[static_cast<std::size_t>(member[j])][static_cast<std::size_t>(member[i])] = value;
            }
    }

    void complete_partition() {
        // the parts settle every edge; the only freedom left for the full
        // variant is trivial cliques, and each vertex needs two memberships
        std::vector<int> in_parts(static_cast<std::size_t>(g.n), 0);
        for (const auto& member : parts)
            for (int v : member) ++in_parts[static_cast<std::size_t>(v)];
        std::vector<Member> family = parts;
        for (int v = 0; v < g.n; ++v)
            for (int need = 2 - in_parts[static_cast<std::size_t>(v)]; need > 0; --need)
                family.push_back({v});
        if (!family_is_valid(g, family, true)) return;  // cannot happen; kept as a literal check
        long long full_size = static_cast<long long>(family.size());
        if (best_full < 0 || full_size < best_full) best_full = full_size;
        long long reduced_size = static_cast<long long>(parts.size());
        if (best_reduced < 0 || reduced_size < best_reduced) best_reduced = reduced_size;
    }

    void run() {
        int a, b;
        if (!find_uncovered(a, b)) {
            complete_partition();
            return;
        }
        // every subset of vertices containing {a, b}, kept only when it is a
        // clique none of whose pairs is covered yet
        for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
            if (!(mask & (1u << a)) || !(mask & (1u << b))) continue;
            Member member;
            for (int v = 0; v < g.n; ++v)
                if (mask & (1u << v)) member.push_back(v);
            if (!usable(member)) continue;
            mark(member, true);
            parts.push_back(member);
            run();
            parts.pop_back();
            mark(member, false);
        }
    }
};

Enumeration enumerate(const Graph& g, int cap) {
    if (g.vertex_count() > cap || g.vertex_count() > 20)
        throw CapExceeded(g.vertex_count(), std::min(cap, 20));
    MatrixGraph matrix(g);
    Enumeration walk(matrix);
    walk.run();
    return walk;
}

}  // namespace

int brute_force_v(const Graph& g, int cap) { return brute_force_values(g, cap).v; }

int brute_force_reduced_v(const Graph& g, int cap) { return brute_force_values(g, cap).reduced_v; }

BruteForceValues brute_force_values(const Graph& g, int cap) {
    Enumeration walk = enumerate(g, cap);
    return {static_cast<int>(std::max(walk.best_full, 0LL)),
            static_cast<int>(std::max(walk.best_reduced, 0LL))};
}

}  // namespace linspect
