#ifndef LINSPECT_SOLVER_HPP
#define LINSPECT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linspect/graph.hpp"
#include "linspect/hypergraph.hpp"

namespace linspect {

/// Thrown by operations that need an exact sub-solve when the budget ran out.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError() : std::runtime_error("search budget exceeded") {}
};

/// A family of cliques covering each edge of a target graph exactly once.
/// mode full additionally requires every vertex in at least two members
/// (trivial singleton cliques allowed, and only they may repeat); mode
/// reduced forbids singletons and has no vertex condition.
struct CliqueCover {
    enum class Mode { full, reduced };
    Mode mode = Mode::full;
    std::vector<VertexSet> cliques;

    int size() const { return static_cast<int>(cliques.size()); }
};

struct CoverVerdict {
    bool ok = false;
    std::string detail;  // human-readable first violation, or "valid cover of size N"
};

/// Checks the cover conditions directly against g; never trusts the producer.
CoverVerdict verify_cover(const Graph& g, const CliqueCover& cover);

/// All lower bounds on v(G) plus the constructive upper bound, with the
/// largest lower bound identified by name.
struct BoundsReport {
    int n = 0;
    int m = 0;
    int omega = 0;          // clique number
    int sqrt_bound = 0;     // least v with v(v-1)/2 >= n
    int seymour = 0;        // ceil(n / alpha)
    int two_alpha = 0;      // 2 * alpha
    int k_independent = 0;  // max{ k(U) : U independent }
    int flag = 0;           // ceil(f / omega)
    int flag_weak = 0;      // ceil(2m / omega^2)
    int flag_sum_value = 0; // f(G)
    int edge_bound = 0;     // m + l + 2e
    int best_lower = 0;
    std::string binding;    // bound attaining best_lower (first in field order)
};
BoundsReport bounds(const Graph& g);

struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_edge_lower = 0;  // remaining-edge bound fired
    std::uint64_t pruned_debt = 0;        // pending-singleton debt fired
    double wall_seconds = 0.0;
};

/// Result of an exact search. When the budget ran out, exact is false and
/// [lower_bound, upper_bound] is the certified interval; the cover always
/// witnesses upper_bound.
struct SolveResult {
    bool exact = true;
    int value = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    CliqueCover cover;
    std::optional<LinearHypergraph> realization;
    SolveStats stats;
};

/// Exact v(G): minimum size of a full-mode cover. The certificate cover and
/// the realization built from it are always produced and verified.
/// Deterministic: branches on the lexicographically smallest uncovered edge,
/// candidate cliques ordered by decreasing size then lexicographic members.
SolveResult linear_intersection_number(const Graph& g, const Budget& budget = {});

/// Exact v̄(G): minimum number of non-trivial cliques partitioning the edges.
SolveResult reduced_linear_intersection_number(const Graph& g, const Budget& budget = {});

/// Minimum size of a full-mode cover that contains `forced` as a member.
/// Used to decide extremal interior vertices (forced = closed neighborhood).
SolveResult solve_with_forced_clique(const Graph& g, VertexSet forced, const Budget& budget = {});

/// The realization hypergraph of a full cover: points = cover members,
/// line i = the members containing vertex i. Its intersection graph is the
/// covered graph under the identity on line indices.
LinearHypergraph realization_from_cover(const Graph& g, const CliqueCover& cover);

struct EflVerdict {
    int chi = 0;
    SolveResult v;
    bool decided = false;  // false only when the budget ran out inconclusively
    bool holds = false;    // chi <= v, meaningful when decided
    int margin = 0;        // v - chi, meaningful when v.exact
};

/// Checks chi(G) <= v(G), the graph-side form of the Erdős–Faber–Lovász
/// conjecture; a violation would be a counterexample.
EflVerdict verify_efl(const Graph& g, const Budget& budget = {});

struct EdgeDeleteCheck {
    int v_before = 0;
    int v_after = 0;
    bool lemma_holds = false;  // v(G - e) >= v(G) - 1
};
EdgeDeleteCheck edge_delete_check(const Graph& g, Edge e, const Budget& budget = {});

}  // namespace linspect

#endif
