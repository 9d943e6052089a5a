#ifndef LINSPECT_CONSTRUCTIONS_HPP
#define LINSPECT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "linspect/graph.hpp"
#include "linspect/hypergraph.hpp"
#include "linspect/solver.hpp"

namespace linspect {

/// A checkable claim about v of a surgered graph. The relation compares
/// v(result) against rhs; predictions are emitted with provenance and are
/// verified by exact solves in the test suite, never assumed.
struct SurgeryPrediction {
    enum class Kind { equality, at_least, at_most, inapplicable };
    Kind kind = Kind::inapplicable;
    int rhs = 0;
    std::string provenance;
    std::optional<int> reduced_value;  // predicted v̄(result), when the rule gives one
};

struct SurgeryOutcome {
    Graph result;
    std::vector<std::vector<int>> vertex_maps;  // one per input graph; old -> new, -1 dropped
    SurgeryPrediction prediction;
};

/// Glues g1 and g2 by identifying a1 with a2. v adds up minus 2 when the
/// glued vertex is isolated on either side, otherwise minus the number of
/// sides where it is extremal interior; v̄ is always additive.
SurgeryOutcome join_at_vertex(const Graph& g1, const Graph& g2, int a1, int a2,
                              const Budget& budget = {});

/// Merges two non-adjacent vertices into one (appended as the last index).
/// Predicts v(result) <= v(G) at distance >= 3, equality at distance >= 4
/// with both endpoints non-interior, and nothing otherwise.
SurgeryOutcome collapse(const Graph& g, int a, int b, const Budget& budget = {});

/// Removes a clique C (|C| >= 3): surviving edges are those not inside C, and
/// surviving vertices are the endpoints of those edges plus everything
/// outside C. Predicts v(result) = v(G) - |C| exactly when C was a component
/// or met the rest of the graph in a single non-extremal vertex, and
/// v(result) >= v(G) - |C| + 1 otherwise.
SurgeryOutcome remove_clique(const Graph& g, VertexSet clique, const Budget& budget = {});

/// Deletes one edge; v drops by at most one.
SurgeryOutcome delete_edge(const Graph& g, Edge e, const Budget& budget = {});

/// The one-extra-point construction behind delete_edge: given a realization
/// in which lines x and y are disjoint, a new point added to both lines
/// realizes the graph with the edge (x, y) restored.
LinearHypergraph extend_realization_with_edge(const LinearHypergraph& h, int line_x, int line_y);

/// The near-pencil on n >= 3 points: one long line through all but the last
/// point and a two-point line from each of those to the last point. Its
/// intersection graph is K_n with b = v = n, and the family is intersecting.
LinearHypergraph near_pencil(int n);

}  // namespace linspect

#endif
