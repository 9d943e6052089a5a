#ifndef LINSPECT_ISOMORPHISM_HPP
#define LINSPECT_ISOMORPHISM_HPP

#include <string>
#include <vector>

#include "linspect/graph.hpp"

namespace linspect {

/// Canonical labeling by iterative neighborhood refinement with backtracking
/// over the surviving symmetry; adequate for graphs up to about 12 vertices.
struct CanonicalForm {
    std::vector<int> labeling;  // old vertex -> canonical index
    std::string key;            // order byte + packed canonical adjacency triangle
};

CanonicalForm canonical_form(const Graph& g);

std::string canonical_key(const Graph& g);

/// The graph with vertex v renamed to old_to_new[v].
Graph relabeled(const Graph& g, const std::vector<int>& old_to_new);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace linspect

#endif
