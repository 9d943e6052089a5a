#include "linspect/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace linspect {

Graph relabeled(const Graph& g, const std::vector<int>& old_to_new) {
    if (static_cast<int>(old_to_new.size()) != g.vertex_count())
        throw std::invalid_argument("labeling size mismatch");
    std::vector<Edge> es;
    for (const auto& [a, b] : g.edges()) {
        int x = old_to_new[static_cast<std::size_t>(a)], y = old_to_new[static_cast<std::size_t>(b)];
        es.emplace_back(std::min(x, y), std::max(x, y));
    }
    return Graph::from_edge_list(g.vertex_count(), es);
}

namespace {

std::string adjacency_key(const Graph& g, const std::vector<int>& old_to_new) {
    int n = g.vertex_count();
    std::vector<int> new_to_old(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) new_to_old[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)])] = v;
    std::string key;
    key.push_back(static_cast<char>(n));
    int accum = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            bool edge = g.has_edge(new_to_old[static_cast<std::size_t>(row)],
                                   new_to_old[static_cast<std::size_t>(col)]);
            accum = (accum << 1) | (edge ? 1 : 0);
            if (++filled == 8) {
                key.push_back(static_cast<char>(accum));
                accum = filled = 0;
            }
        }
    }
    if (filled > 0) key.push_back(static_cast<char>(accum << (8 - filled)));
    return key;
}

// 1-dimensional refinement: a vertex color becomes (color, sorted multiset of
// neighbor colors) until the partition stabilizes
std::vector<int> refine(const Graph& g, std::vector<int> color) {
    int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> signature(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighborhood(v)) nb.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            nb.insert(nb.begin(), color[static_cast<std::size_t>(v)]);
            signature[static_cast<std::size_t>(v)] = {std::move(nb), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [sig, v] : signature) rank.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, r] : rank) r = next++;
        std::vector<int> refined(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) refined[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)].first];
        if (refined == color) return color;
        color = std::move(refined);
    }
}

struct CanonSearch {
    const Graph& g;
    std::string best_key;
    std::vector<int> best_labeling;

    void leaf(const std::vector<int>& color) {
        int n = g.vertex_count();
        std::vector<int> labeling(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) labeling[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(v)];
        std::string key = adjacency_key(g, labeling);
        if (best_key.empty() || key < best_key) {
            best_key = std::move(key);
            best_labeling = std::move(labeling);
        }
    }

    void descend(const std::vector<int>& color) {
        int n = g.vertex_count();
        std::vector<int> class_size(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++class_size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        int target = -1;
        for (int c = 0; c < n && target < 0; ++c)
            if (class_size[static_cast<std::size_t>(c)] > 1) target = c;
        if (target < 0) {
            leaf(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> individualized = color;
            // pull v ahead of its class; refinement renumbers densely
            for (int u = 0; u < n; ++u)
                if (u != v) individualized[static_cast<std::size_t>(u)] = individualized[static_cast<std::size_t>(u)] * 2 + 1;
            individualized[static_cast<std::size_t>(v)] *= 2;
            descend(refine(g, std::move(individualized)));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    // complete and edgeless graphs: every labeling is canonical
    if (g.edge_count() == 0 || g.edge_count() == n * (n - 1) / 2)
        return {identity, adjacency_key(g, identity)};

    CanonSearch search{g, {}, {}};
    search.descend(refine(g, std::vector<int>(static_cast<std::size_t>(n), 0)));
    return {std::move(search.best_labeling), std::move(search.best_key)};
}

std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace linspect
