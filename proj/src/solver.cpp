#include "linspect/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "linspect/clique.hpp"

namespace linspect {

namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

bool member_list_less(VertexSet a, VertexSet b) {
    auto va = a.to_vector(), vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace

CoverVerdict verify_cover(const Graph& g, const CliqueCover& cover) {
    int n = g.vertex_count();
    std::vector<int> vertex_hits(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> edge_hits(static_cast<std::size_t>(n),
                                            std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < cover.size(); ++i) {
        VertexSet c = cover.cliques[static_cast<std::size_t>(i)];
        if (c.empty()) return {false, "member " + std::to_string(i) + " is empty"};
        if (!c.is_subset_of(g.vertices()))
            return {false, "member " + std::to_string(i) + " has out-of-range vertices"};
        if (!g.is_clique(c))
            return {false, "member " + std::to_string(i) + " = " + to_string(c) + " is not a clique"};
        if (cover.mode == CliqueCover::Mode::reduced && c.count() < 2)
            return {false, "member " + std::to_string(i) + " is a trivial clique"};
        auto vs = c.to_vector();
        for (std::size_t x = 0; x < vs.size(); ++x) {
            ++vertex_hits[static_cast<std::size_t>(vs[x])];
            for (std::size_t y = x + 1; y < vs.size(); ++y)
                ++edge_hits[static_cast<std::size_t>(vs[x])][static_cast<std::size_t>(vs[y])];
        }
    }
    for (const auto& [a, b] : g.edges()) {
        int hits = edge_hits[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (hits != 1)
            return {false, "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") covered " +
                               std::to_string(hits) + " times"};
    }
    if (cover.mode == CliqueCover::Mode::full) {
        for (int v = 0; v < n; ++v) {
            if (vertex_hits[static_cast<std::size_t>(v)] < 2)
                return {false, "vertex " + std::to_string(v) + " lies in only " +
                                   std::to_string(vertex_hits[static_cast<std::size_t>(v)]) +
                                   " members"};
        }
    }
    return {true, "valid cover of size " + std::to_string(cover.size())};
}

BoundsReport bounds(const Graph& g) {
    BoundsReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    auto profile = g.degree_profile();
    r.edge_bound = r.m + profile.leaf_count + 2 * profile.isolated_count;
    while (static_cast<long long>(r.sqrt_bound) * (r.sqrt_bound - 1) / 2 < r.n) ++r.sqrt_bound;
    if (r.n == 0) {
        r.binding = "omega";
        return r;
    }
    r.omega = clique_number(g);
    int alpha = independence_number(g);
    r.seymour = ceil_div(r.n, alpha);
    r.two_alpha = 2 * alpha;
    std::vector<int> k(static_cast<std::size_t>(r.n));
    for (int a = 0; a < r.n; ++a) {
        k[static_cast<std::size_t>(a)] = k_value(g, a);
        r.flag_sum_value += k[static_cast<std::size_t>(a)];
    }
    r.k_independent = static_cast<int>(max_weight_independent_set(g, k));
    r.flag = ceil_div(r.flag_sum_value, r.omega);
    r.flag_weak = ceil_div(2LL * r.m, static_cast<long long>(r.omega) * r.omega);

    const std::pair<const char*, int> lowers[] = {
        {"omega", r.omega},           {"sqrt", r.sqrt_bound}, {"seymour", r.seymour},
        {"two_alpha", r.two_alpha},   {"k_independent", r.k_independent},
        {"flag", r.flag},             {"flag_weak", r.flag_weak},
    };
    for (const auto& [name, value] : lowers) {
        if (value > r.best_lower) {
            r.best_lower = value;
            r.binding = name;
        }
    }
    return r;
}

namespace {

struct SearchState {
    const Graph& g;
    CliqueCover::Mode mode;
    int omega;
    int pair_cap;  // omega * (omega - 1) / 2, edges coverable by one clique

    std::vector<VertexSet> uncovered;  // adjacency rows of the not-yet-covered graph
    int uncovered_edges;
    std::vector<int> hits;  // per vertex: members of `chosen` containing it
    std::vector<VertexSet> chosen;

    int incumbent_size = 0;
    std::vector<VertexSet> incumbent;
    int global_lower = 0;

    SolveStats stats;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool aborted = false;

    SearchState(const Graph& graph, CliqueCover::Mode solve_mode)
        : g(graph),
          mode(solve_mode),
          omega(clique_number(graph)),
          pair_cap(std::max(1, omega * (omega - 1) / 2)),
          uncovered_edges(graph.edge_count()),
          hits(static_cast<std::size_t>(graph.vertex_count()), 0) {
        uncovered.reserve(static_cast<std::size_t>(graph.vertex_count()));
        for (int v = 0; v < graph.vertex_count(); ++v) uncovered.push_back(graph.neighborhood(v));
    }

    bool out_of_budget() {
        if (max_nodes && stats.nodes > *max_nodes) return true;
        if (deadline && (stats.nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            return true;
        return false;
    }

    int singleton_debt() const {
        if (mode == CliqueCover::Mode::reduced) return 0;
        int debt = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            // coverage of v is final once no uncovered edge touches it
            if (uncovered[static_cast<std::size_t>(v)].empty())
                debt += std::max(0, 2 - hits[static_cast<std::size_t>(v)]);
        }
        return debt;
    }

    int remaining_edge_lower() const {
        if (uncovered_edges == 0) return 0;
        int lb = ceil_div(uncovered_edges, pair_cap);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = uncovered[static_cast<std::size_t>(v)].count();
            if (d > 0) lb = std::max(lb, ceil_div(d, omega - 1));
        }
        return lb;
    }

    void apply(VertexSet clique) {
        chosen.push_back(clique);
        auto vs = clique.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            ++hits[static_cast<std::size_t>(vs[i])];
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                uncovered[static_cast<std::size_t>(vs[i])].remove(vs[j]);
                uncovered[static_cast<std::size_t>(vs[j])].remove(vs[i]);
                --uncovered_edges;
            }
        }
    }

    void undo() {
        VertexSet clique = chosen.back();
        chosen.pop_back();
        auto vs = clique.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            --hits[static_cast<std::size_t>(vs[i])];
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                uncovered[static_cast<std::size_t>(vs[i])].add(vs[j]);
                uncovered[static_cast<std::size_t>(vs[j])].add(vs[i]);
                ++uncovered_edges;
            }
        }
    }

    void record_complete() {
        std::vector<VertexSet> cover = chosen;
        int total = static_cast<int>(cover.size());
        if (mode == CliqueCover::Mode::full) {
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int need = 2 - hits[static_cast<std::size_t>(v)]; need > 0; --need) {
                    cover.push_back(VertexSet::single(v));
                    ++total;
                }
        }
        if (total < incumbent_size) {
            incumbent_size = total;
            incumbent = std::move(cover);
        }
    }

    // candidate cliques through edge (a, b): {a, b} plus any clique of the
    // uncovered graph inside the common uncovered neighborhood; edge pairs
    // inside a candidate being uncovered already enforces <=1 shared vertex
    // with every chosen clique
    std::vector<VertexSet> candidates_through(int a, int b) const {
        VertexSet base = VertexSet::of({a, b});
        VertexSet common = uncovered[static_cast<std::size_t>(a)] & uncovered[static_cast<std::size_t>(b)];
        std::vector<VertexSet> out{base};
        std::vector<std::pair<VertexSet, VertexSet>> stack{{base, common}};
        while (!stack.empty()) {
            auto [clique, ext] = stack.back();
            stack.pop_back();
            for (int v : ext) {
                VertexSet bigger = clique;
                bigger.add(v);
                out.push_back(bigger);
                VertexSet next_ext =
                    (ext & uncovered[static_cast<std::size_t>(v)]) - VertexSet::full(v + 1);
                stack.emplace_back(bigger, next_ext);
            }
        }
        std::sort(out.begin(), out.end(), [](VertexSet x, VertexSet y) {
            if (x.count() != y.count()) return x.count() > y.count();
            return member_list_less(x, y);
        });
        return out;
    }

    void search(int cost) {
        ++stats.nodes;
        if (aborted || out_of_budget()) {
            aborted = true;
            return;
        }
        if (uncovered_edges == 0) {
            record_complete();
            return;
        }
        int debt = singleton_debt();
        int edge_lb = remaining_edge_lower();
        if (cost + std::max(edge_lb, debt) >= incumbent_size) {
            if (edge_lb >= debt)
                ++stats.pruned_edge_lower;
            else
                ++stats.pruned_debt;
            return;
        }
        // lexicographically smallest uncovered edge
        int a = -1, b = -1;
        for (int v = 0; v < g.vertex_count() && a < 0; ++v) {
            if (!uncovered[static_cast<std::size_t>(v)].empty()) {
                a = v;
                b = uncovered[static_cast<std::size_t>(v)].first();
            }
        }
        for (VertexSet clique : candidates_through(a, b)) {
            apply(clique);
            search(cost + 1);
            undo();
            if (aborted) return;
            if (incumbent_size <= global_lower) return;  // incumbent is optimal
        }
    }
};

// the constructive upper-bound cover: every edge as a pair, singletons to
// bring each vertex to two memberships
std::vector<VertexSet> edge_bound_cover(const Graph& g) {
    std::vector<VertexSet> cover;
    std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [a, b] : g.edges()) {
        cover.push_back(VertexSet::of({a, b}));
        ++hits[static_cast<std::size_t>(a)];
        ++hits[static_cast<std::size_t>(b)];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int need = 2 - hits[static_cast<std::size_t>(v)]; need > 0; --need)
            cover.push_back(VertexSet::single(v));
    return cover;
}

SolveResult run_solver(const Graph& g, CliqueCover::Mode mode, const Budget& budget,
                       std::optional<VertexSet> forced) {
    auto start = std::chrono::steady_clock::now();

    SearchState state(g, mode);
    state.max_nodes = budget.max_nodes;
    if (budget.max_seconds)
        state.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                     std::chrono::duration<double>(*budget.max_seconds));

    BoundsReport root_bounds;
    if (mode == CliqueCover::Mode::full) {
        root_bounds = bounds(g);
        state.global_lower = root_bounds.best_lower;
        state.incumbent = edge_bound_cover(g);
    } else {
        state.global_lower = g.edge_count() == 0 ? 0 : ceil_div(g.edge_count(), state.pair_cap);
        for (const auto& [a, b] : g.edges()) state.incumbent.push_back(VertexSet::of({a, b}));
    }
    state.incumbent_size = static_cast<int>(state.incumbent.size());

    if (forced) {
        // seed the forced member and rebuild a consistent incumbent around it
        state.apply(*forced);
        std::vector<VertexSet> seeded{*forced};
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w : state.uncovered[static_cast<std::size_t>(v)])
                if (w > v) seeded.push_back(VertexSet::of({v, w}));
        std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
        for (VertexSet c : seeded)
            for (int v : c) ++hits[static_cast<std::size_t>(v)];
        if (mode == CliqueCover::Mode::full) {
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int need = 2 - hits[static_cast<std::size_t>(v)]; need > 0; --need)
                    seeded.push_back(VertexSet::single(v));
        }
        state.incumbent = std::move(seeded);
        state.incumbent_size = static_cast<int>(state.incumbent.size());
        state.global_lower = 0;  // constrained optimum may exceed every bound on v(G)
        state.search(1);
    } else if (state.incumbent_size > state.global_lower) {
        state.search(0);
    }

    SolveResult result;
    result.stats = state.stats;
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.cover.mode = mode;
    result.cover.cliques = state.incumbent;
    result.upper_bound = state.incumbent_size;
    if (state.aborted) {
        result.exact = false;
        result.lower_bound = state.global_lower;
        result.value = -1;
        return result;
    }
    result.exact = true;
    result.value = state.incumbent_size;
    result.lower_bound = result.upper_bound = result.value;
    if (mode == CliqueCover::Mode::full && !forced) {
        result.realization = realization_from_cover(g, result.cover);
        CoverVerdict verdict = verify_cover(g, result.cover);
        if (!verdict.ok) throw std::logic_error("solver produced an invalid cover: " + verdict.detail);
    }
    return result;
}

}  // namespace

SolveResult linear_intersection_number(const Graph& g, const Budget& budget) {
    return run_solver(g, CliqueCover::Mode::full, budget, std::nullopt);
}

SolveResult reduced_linear_intersection_number(const Graph& g, const Budget& budget) {
    return run_solver(g, CliqueCover::Mode::reduced, budget, std::nullopt);
}

SolveResult solve_with_forced_clique(const Graph& g, VertexSet forced, const Budget& budget) {
    if (forced.empty()) throw std::invalid_argument("forced clique must be nonempty");
    if (!g.is_clique(forced)) throw std::invalid_argument("forced set is not a clique");
    return run_solver(g, CliqueCover::Mode::full, budget, forced);
}

LinearHypergraph realization_from_cover(const Graph& g, const CliqueCover& cover) {
    if (cover.mode != CliqueCover::Mode::full)
        throw std::invalid_argument("a realization requires a full-mode cover");
    LinearHypergraph h;
    h.point_count = cover.size();
    h.lines.assign(static_cast<std::size_t>(g.vertex_count()), {});
    for (int i = 0; i < cover.size(); ++i)
        for (int v : cover.cliques[static_cast<std::size_t>(i)])
            h.lines[static_cast<std::size_t>(v)].push_back(i);
    return h;
}

EflVerdict verify_efl(const Graph& g, const Budget& budget) {
    EflVerdict verdict;
    verdict.chi = chromatic_number(g);
    verdict.v = linear_intersection_number(g, budget);
    if (verdict.v.exact) {
        verdict.decided = true;
        verdict.holds = verdict.chi <= verdict.v.value;
        verdict.margin = verdict.v.value - verdict.chi;
    } else if (verdict.chi <= verdict.v.lower_bound) {
        verdict.decided = true;
        verdict.holds = true;
    } else if (verdict.chi > verdict.v.upper_bound) {
        verdict.decided = true;
        verdict.holds = false;
    }
    return verdict;
}

EdgeDeleteCheck edge_delete_check(const Graph& g, Edge e, const Budget& budget) {
    auto [a, b] = e;
    if (a > b) std::swap(a, b);
    if (!g.has_edge(a, b))
        throw std::invalid_argument("(" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is not an edge");
    std::vector<Edge> remaining;
    for (const auto& edge : g.edges())
        if (edge != Edge{a, b}) remaining.push_back(edge);
    Graph reduced = Graph::from_edge_list(g.vertex_count(), remaining);
    SolveResult before = linear_intersection_number(g, budget);
    SolveResult after = linear_intersection_number(reduced, budget);
    if (!before.exact || !after.exact) throw BudgetExceededError();
    EdgeDeleteCheck check;
    check.v_before = before.value;
    check.v_after = after.value;
    check.lemma_holds = check.v_after >= check.v_before - 1;
    return check;
}

}  // namespace linspect
