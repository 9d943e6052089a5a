#include "linspect/clique.hpp"

#include <algorithm>
#include <numeric>

namespace linspect {

namespace {

bool visit_cliques_from(const Graph& g, VertexSet current, VertexSet candidates, int min_size,
                        const std::function<bool(VertexSet)>& visit) {
    if (current.count() >= min_size && !visit(current)) return false;
    for (int v : candidates) {
        // extensions stay above v, so each clique appears exactly once
        VertexSet next_cand = (candidates & g.neighborhood(v)) - VertexSet::full(v + 1);
        VertexSet next = current;
        next.add(v);
        if (!visit_cliques_from(g, next, next_cand, min_size, visit)) return false;
    }
    return true;
}

}  // namespace

void for_each_clique(const Graph& g, int min_size, const std::function<bool(VertexSet)>& visit) {
    if (min_size < 1) throw std::invalid_argument("min_size must be at least 1");
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet cand = g.neighborhood(v) - VertexSet::full(v + 1);
        if (!visit_cliques_from(g, VertexSet::single(v), cand, min_size, visit)) return;
    }
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int min_size) {
    std::vector<VertexSet> out;
    for_each_clique(g, min_size, [&](VertexSet c) {
        out.push_back(c);
        return true;
    });
    return out;
}

namespace {

// Max clique search; candidates restricted to ascending extensions is not
// usable here (we need the pure optimum), so branch on include/exclude with
// the usual |current| + |candidates| bound.
void max_clique_rec(const Graph& g, VertexSet current, VertexSet candidates, VertexSet& best) {
    if (current.count() > best.count()) best = current;
    if (candidates.empty()) return;
    if (current.count() + candidates.count() <= best.count()) return;
    int v = candidates.first();
    VertexSet with = current;
    with.add(v);
    max_clique_rec(g, with, candidates & g.neighborhood(v), best);
    candidates.remove(v);
    max_clique_rec(g, current, candidates, best);
}

}  // namespace

VertexSet maximum_clique(const Graph& g) {
    VertexSet best;
    max_clique_rec(g, VertexSet{}, g.vertices(), best);
    return best;
}

int clique_number(const Graph& g) { return maximum_clique(g).count(); }

int independence_number(const Graph& g) { return clique_number(g.complement()); }

namespace {

struct ColoringSearch {
    const Graph& g;
    std::vector<int> order;      // vertices, by decreasing degree
    std::vector<int> color;      // current partial assignment, -1 = unset
    std::vector<int> best;       // best complete assignment
    int best_count;
    int lower;

    bool feasible(int v, int c) const {
        for (int u : g.neighborhood(v))
            if (color[static_cast<std::size_t>(u)] == c) return false;
        return true;
    }

    void run(std::size_t idx, int used) {
        if (used >= best_count) return;
        if (idx == order.size()) {
            best = color;
            best_count = used;
            return;
        }
        int v = order[idx];
        int limit = std::min(used + 1, best_count - 1);
        for (int c = 0; c < limit; ++c) {
            if (!feasible(v, c)) continue;
            color[static_cast<std::size_t>(v)] = c;
            run(idx + 1, std::max(used, c + 1));
            color[static_cast<std::size_t>(v)] = -1;
            if (best_count == lower) return;
        }
    }
};

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : order) {
        std::uint64_t used = 0;
        for (int u : g.neighborhood(v))
            if (color[static_cast<std::size_t>(u)] >= 0) used |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
        int c = 0;
        while ((used >> c) & 1) ++c;
        color[static_cast<std::size_t>(v)] = c;
    }
    return color;
}

}  // namespace

ColoringResult chromatic_number_with_coloring(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> greedy = greedy_coloring(g, order);
    int greedy_count = 1 + *std::max_element(greedy.begin(), greedy.end());
    int lower = clique_number(g);
    if (greedy_count == lower) return {greedy_count, greedy};

    ColoringSearch search{g, order, std::vector<int>(static_cast<std::size_t>(n), -1), greedy,
                          greedy_count, lower};
    search.run(0, 0);
    return {search.best_count, search.best};
}

int chromatic_number(const Graph& g) { return chromatic_number_with_coloring(g).colors; }

int clique_cover_number(const Graph& h) { return chromatic_number(h.complement()); }

int k_value(const Graph& g, int a) {
    Graph local = g.induced(g.neighborhood(a));
    return std::max(clique_cover_number(local), 2);
}

int flag_sum(const Graph& g) {
    int total = 0;
    for (int a = 0; a < g.vertex_count(); ++a) total += k_value(g, a);
    return total;
}

namespace {

void mwis_rec(const Graph& g, VertexSet avail, std::span<const int> weights, long long current,
              long long& best) {
    long long remaining = 0;
    for (int v : avail) remaining += weights[static_cast<std::size_t>(v)];
    if (current + remaining <= best) return;
    if (avail.empty()) {
        best = std::max(best, current);
        return;
    }
    int v = avail.first();
    VertexSet without_nbhd = avail - g.neighborhood(v);
    without_nbhd.remove(v);
    mwis_rec(g, without_nbhd, weights, current + weights[static_cast<std::size_t>(v)], best);
    avail.remove(v);
    mwis_rec(g, avail, weights, current, best);
}

}  // namespace

long long max_weight_independent_set(const Graph& g, std::span<const int> weights) {
    if (static_cast<int>(weights.size()) != g.vertex_count())
        throw std::invalid_argument("one weight per vertex required");
    long long best = 0;
    mwis_rec(g, g.vertices(), weights, 0, best);
    return best;
}

CliqueGraphView CliqueGraphView::build(const Graph& g, std::size_t cap) {
    CliqueGraphView view;
    bool complete = true;
    for_each_clique(g, 2, [&](VertexSet c) {
        if (view.cliques_.size() >= cap) {
            complete = false;
            return false;
        }
        view.cliques_.push_back(c);
        return true;
    });
    if (!complete) throw CliqueGraphCapExceeded(cap);
    return view;
}

namespace {

// Minimum maximal independent set in C_G by branching: a free vertex (neither
// chosen nor dominated) must be resolved by putting some member of its closed
// neighborhood into the set.
struct MmisSearch {
    const CliqueGraphView& view;
    std::vector<std::vector<std::size_t>> closed_nbhd;  // sorted by descending degree
    std::size_t best;

    void run(std::vector<char>& excluded, std::vector<char>& chosen, std::size_t chosen_count) {
        if (chosen_count >= best) return;
        std::size_t free_vertex = view.size();
        for (std::size_t v = 0; v < view.size(); ++v) {
            if (!excluded[v] && !chosen[v]) {
                free_vertex = v;
                break;
            }
        }
        if (free_vertex == view.size()) {
            best = chosen_count;
            return;
        }
        for (std::size_t u : closed_nbhd[free_vertex]) {
            if (excluded[u] || chosen[u]) continue;
            std::vector<std::size_t> newly_excluded;
            for (std::size_t w = 0; w < view.size(); ++w) {
                if (!excluded[w] && w != u && view.adjacent(u, w)) {
                    excluded[w] = 1;
                    newly_excluded.push_back(w);
                }
            }
            chosen[u] = 1;
            run(excluded, chosen, chosen_count + 1);
            chosen[u] = 0;
            for (std::size_t w : newly_excluded) excluded[w] = 0;
        }
    }
};

}  // namespace

int reduced_v_via_clique_graph(const Graph& g, std::size_t cap) {
    CliqueGraphView view = CliqueGraphView::build(g, cap);
    std::size_t n = view.size();
    if (n == 0) return 0;

    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (view.adjacent(i, j)) ++degree[i];

    MmisSearch search{view, {}, n};
    search.closed_nbhd.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& nb = search.closed_nbhd[v];
        nb.push_back(v);
        for (std::size_t u = 0; u < n; ++u)
            if (view.adjacent(v, u)) nb.push_back(u);
        std::stable_sort(nb.begin(), nb.end(),
                         [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    }

    std::vector<char> excluded(n, 0), chosen(n, 0);
    search.run(excluded, chosen, 0);
    return static_cast<int>(search.best);
}

}  // namespace linspect
