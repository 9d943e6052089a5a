#ifndef LINSPECT_BRUTE_FORCE_HPP
#define LINSPECT_BRUTE_FORCE_HPP

#include <stdexcept>

#include "linspect/graph.hpp"

namespace linspect {

/// Thrown when a brute-force routine is asked for a graph above its cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(int n, int cap)
        : std::runtime_error("brute force cap is " + std::to_string(cap) +
                             " vertices, graph has " + std::to_string(n)) {}
};

/// Reference value of v(G) by exhaustive enumeration of every family of
/// cliques meeting the defining conditions (each edge in exactly one member,
/// each vertex in at least two). No bounds, no pruning, and no code shared
/// with the branch-and-bound solver; feasible for tiny graphs only.
int brute_force_v(const Graph& g, int cap = 7);

/// Reference value of v̄(G): minimum number of non-trivial cliques with each
/// edge in exactly one of them, by the same exhaustive enumeration.
int brute_force_reduced_v(const Graph& g, int cap = 7);

/// Both reference values from a single enumeration pass.
struct BruteForceValues {
    int v = 0;
    int reduced_v = 0;
};
BruteForceValues brute_force_values(const Graph& g, int cap = 7);

}  // namespace linspect

#endif
