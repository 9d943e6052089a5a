#include "linspect/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "linspect/clique.hpp"

namespace linspect {

int LinearHypergraph::point_degree(int p) const {
    int d = 0;
    for (const auto& line : lines)
        d += std::binary_search(line.begin(), line.end(), p) ? 1 : 0;
    return d;
}

namespace {

// first two common points of two sorted lists, or fewer
std::vector<int> common_points(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size() && out.size() < 2) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::optional<HypergraphViolation> check(const LinearHypergraph& h) {
    for (int i = 0; i < h.line_count(); ++i) {
        const auto& line = h.lines[static_cast<std::size_t>(i)];
        if (!std::is_sorted(line.begin(), line.end()) ||
            std::adjacent_find(line.begin(), line.end()) != line.end()) {
            return HypergraphViolation{HypergraphViolation::Kind::BadPoint, i, -1, -1, -1,
                                       "line " + std::to_string(i) + " is not a sorted point set"};
        }
        for (int p : line) {
            if (p < 0 || p >= h.point_count) {
                return HypergraphViolation{HypergraphViolation::Kind::BadPoint, i, -1, p, -1,
                                           "line " + std::to_string(i) + " references point " +
                                               std::to_string(p) + " outside [0, " +
                                               std::to_string(h.point_count) + ")"};
            }
        }
    }
    for (int i = 0; i < h.line_count(); ++i) {
        if (h.lines[static_cast<std::size_t>(i)].size() < 2) {
            return HypergraphViolation{HypergraphViolation::Kind::L2, i, -1, -1, -1,
                                       "line " + std::to_string(i) + " has fewer than two points"};
        }
    }
    for (int i = 0; i < h.line_count(); ++i) {
        for (int j = i + 1; j < h.line_count(); ++j) {
            auto shared = common_points(h.lines[static_cast<std::size_t>(i)],
                                        h.lines[static_cast<std::size_t>(j)]);
            if (shared.size() >= 2) {
                return HypergraphViolation{
                    HypergraphViolation::Kind::L1, i, j, shared[0], shared[1],
                    "points " + std::to_string(shared[0]) + " and " + std::to_string(shared[1]) +
                        " lie on both line " + std::to_string(i) + " and line " + std::to_string(j)};
            }
        }
    }
    return std::nullopt;
}

const LinearHypergraph& validate(const LinearHypergraph& h) {
    if (auto violation = check(h)) throw std::invalid_argument(violation->message);
    return h;
}

LinearHypergraph normalize(const LinearHypergraph& h, std::vector<int>* old_to_new) {
    std::vector<int> map(static_cast<std::size_t>(h.point_count), -1);
    int next = 0;
    for (int p = 0; p < h.point_count; ++p)
        if (h.point_degree(p) > 0) map[static_cast<std::size_t>(p)] = next++;
    LinearHypergraph out;
    out.point_count = next;
    out.lines.reserve(h.lines.size());
    for (const auto& line : h.lines) {
        std::vector<int> mapped;
        mapped.reserve(line.size());
        for (int p : line) mapped.push_back(map[static_cast<std::size_t>(p)]);
        out.lines.push_back(std::move(mapped));
    }
    if (old_to_new) *old_to_new = std::move(map);
    return out;
}

IntersectionGraphResult intersection_graph(const LinearHypergraph& h) {
    int b = h.line_count();
    if (b > Graph::max_vertices)
        throw std::invalid_argument("intersection graph would have more than 64 vertices");
    IntersectionGraphResult result;
    result.shared_point.assign(static_cast<std::size_t>(b), std::vector<int>(static_cast<std::size_t>(b), -1));
    std::vector<Edge> es;
    for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
            auto shared = common_points(h.lines[static_cast<std::size_t>(i)],
                                        h.lines[static_cast<std::size_t>(j)]);
            if (shared.empty()) continue;
            es.emplace_back(i, j);
            result.shared_point[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = shared[0];
            result.shared_point[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = shared[0];
        }
    }
    result.graph = Graph::from_edge_list(b, es);
    return result;
}

LinearHypergraph dual_realization(const Graph& g) {
    LinearHypergraph h;
    std::vector<Edge> es = g.edges();
    h.point_count = static_cast<int>(es.size());
    h.lines.assign(static_cast<std::size_t>(g.vertex_count()), {});
    for (int idx = 0; idx < static_cast<int>(es.size()); ++idx) {
        h.lines[static_cast<std::size_t>(es[static_cast<std::size_t>(idx)].first)].push_back(idx);
        h.lines[static_cast<std::size_t>(es[static_cast<std::size_t>(idx)].second)].push_back(idx);
    }
    // one auxiliary point brings each leaf line up to two points; isolated
    // vertices get a fresh two-point line
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& line = h.lines[static_cast<std::size_t>(v)];
        while (line.size() < 2) line.push_back(h.point_count++);
    }
    return h;
}

std::pair<int, LineColoring> chromatic_index(const LinearHypergraph& h) {
    ColoringResult coloring = chromatic_number_with_coloring(intersection_graph(h).graph);
    return {coloring.colors, LineColoring{coloring.colors, coloring.assignment}};
}

bool is_intersecting(const LinearHypergraph& h) {
    for (int i = 0; i < h.line_count(); ++i)
        for (int j = i + 1; j < h.line_count(); ++j)
            if (common_points(h.lines[static_cast<std::size_t>(i)],
                              h.lines[static_cast<std::size_t>(j)])
                    .empty())
                return false;
    // an intersecting family never has more lines than points
    assert(h.line_count() <= h.point_count || h.line_count() <= 1);
    return true;
}

int clique_index(const LinearHypergraph& h) {
    return clique_number(intersection_graph(h).graph);
}

}  // namespace linspect
