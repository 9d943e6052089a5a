#ifndef LINSPECT_CLIQUE_HPP
#define LINSPECT_CLIQUE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "linspect/graph.hpp"

namespace linspect {

/// Visits every clique of G with at least `min_size` vertices, each exactly once,
/// in lexicographic order of the sorted member list. The visitor returns false
/// to stop the enumeration early.
void for_each_clique(const Graph& g, int min_size, const std::function<bool(VertexSet)>& visit);

/// Materialized variant of for_each_clique, in the same order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int min_size);

/// Clique number ω(G). 0 for the empty graph, 1 for a nonempty edgeless graph.
int clique_number(const Graph& g);

/// A maximum clique witnessing clique_number, deterministic.
VertexSet maximum_clique(const Graph& g);

/// Stability number α(G): maximum size of an independent vertex set.
int independence_number(const Graph& g);

/// Exact chromatic number with a witnessing proper coloring (colors 0..chi-1).
struct ColoringResult {
    int colors = 0;
    std::vector<int> assignment;  // vertex -> color
};
ColoringResult chromatic_number_with_coloring(const Graph& g);
int chromatic_number(const Graph& g);

/// Clique cover number θ(H): minimum number of cliques partitioning V(H).
int clique_cover_number(const Graph& h);

/// k(a) = max{θ(G_a), 2}: the minimum feasible line size through a in any
/// realization of G as an intersection graph (never below the two-point floor).
int k_value(const Graph& g, int a);

/// f(G) = Σ_a k(a).
int flag_sum(const Graph& g);

/// Maximum total weight of an independent set; weights must be >= 0.
long long max_weight_independent_set(const Graph& g, std::span<const int> weights);

/// Thrown when materializing a clique graph whose vertex count exceeds the cap.
class CliqueGraphCapExceeded : public std::runtime_error {
public:
    explicit CliqueGraphCapExceeded(std::size_t cap)
        : std::runtime_error("non-trivial clique count exceeds cap " + std::to_string(cap)) {}
};

/// The clique graph C_G: vertices are the non-trivial cliques of G (|C| >= 2),
/// two cliques adjacent iff they share at least two vertices (i.e. an edge).
class CliqueGraphView {
public:
    static constexpr std::size_t default_cap = 1'000'000;

    /// Materializes C_G; throws CliqueGraphCapExceeded when |𝒞(G)| > cap.
    static CliqueGraphView build(const Graph& g, std::size_t cap = default_cap);

    std::size_t size() const { return cliques_.size(); }
    const std::vector<VertexSet>& cliques() const { return cliques_; }
    bool adjacent(std::size_t i, std::size_t j) const {
        return i != j && (cliques_[i] & cliques_[j]).count() >= 2;
    }

private:
    std::vector<VertexSet> cliques_;  // lexicographic order
};

/// v̄(G) computed as the minimum cardinality of a maximal independent set in C_G.
/// Independent of the cover-search solver; used as a cross-oracle.
int reduced_v_via_clique_graph(const Graph& g, std::size_t cap = CliqueGraphView::default_cap);

}  // namespace linspect

#endif
