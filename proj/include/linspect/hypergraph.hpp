#ifndef LINSPECT_HYPERGRAPH_HPP
#define LINSPECT_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "linspect/graph.hpp"

namespace linspect {

/// A linear hypergraph: points 0..point_count-1 and lines (point sets) with
///   (L1) two distinct points lie on at most one common line,
///   (L2) every line has at least two points.
/// Lines are stored as sorted point lists. Construct freely, then run
/// check()/validate() to certify the axioms; isolated points are permitted.
struct LinearHypergraph {
    int point_count = 0;
    std::vector<std::vector<int>> lines;

    int line_count() const { return static_cast<int>(lines.size()); }
    int point_degree(int p) const;
};

struct HypergraphViolation {
    enum class Kind { BadPoint, L2, L1 };
    Kind kind;
    int line_a = -1;  // offending line (L2/BadPoint) or first line of the pair (L1)
    int line_b = -1;  // second line of the pair (L1)
    int point_a = -1;
    int point_b = -1;
    std::string message;
};

/// Scans deterministically (lines ascending, then line pairs lexicographic) and
/// reports the first axiom violation, or nothing for a valid linear hypergraph.
std::optional<HypergraphViolation> check(const LinearHypergraph& h);

/// Returns h unchanged if the axioms hold; throws std::invalid_argument carrying
/// the first violation otherwise.
const LinearHypergraph& validate(const LinearHypergraph& h);

/// Drops points with no incident line and re-indexes densely; returns the
/// old-to-new point map (-1 for dropped points).
LinearHypergraph normalize(const LinearHypergraph& h, std::vector<int>* old_to_new = nullptr);

/// Intersection graph G_π: one vertex per line, edge iff the two lines meet.
/// By L1 the meeting point is unique; shared_point records it per edge.
struct IntersectionGraphResult {
    Graph graph;
    std::vector<std::vector<int>> shared_point;  // [i][j] = common point of lines i, j; -1 if disjoint
};
IntersectionGraphResult intersection_graph(const LinearHypergraph& h);

/// The dual realization of a graph: points = edges of G plus one auxiliary
/// point per leaf and two per isolated vertex; line i = points incident with
/// vertex i. Its intersection graph is G under the identity on line indices,
/// so |P| = m + l(G) + 2e(G) is an upper bound for the minimum realization.
LinearHypergraph dual_realization(const Graph& g);

/// A proper coloring of the lines: intersecting lines get distinct colors.
struct LineColoring {
    int colors = 0;
    std::vector<int> assignment;  // line -> color
};

/// Exact chromatic index χ'(H) with a witnessing line coloring; equals the
/// chromatic number of the intersection graph.
std::pair<int, LineColoring> chromatic_index(const LinearHypergraph& h);

/// True iff every pair of distinct lines meets.
bool is_intersecting(const LinearHypergraph& h);

/// Clique index ω'(H): maximum size of a set of pairwise intersecting lines.
int clique_index(const LinearHypergraph& h);

}  // namespace linspect

#endif
