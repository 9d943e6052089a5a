#ifndef LINSPECT_CERTIFICATE_HPP
#define LINSPECT_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linspect/graph.hpp"
#include "linspect/solver.hpp"

namespace linspect {

inline constexpr const char* schema_version = "linspect/1";
inline constexpr const char* tool_version = "0.1.0";

/// Self-contained record of a solve: the input graph, the claimed value, the
/// witnessing cover, the realization with its line-to-vertex bijection, and
/// the bounds report. Everything needed to re-check the claim.
struct CertificateDocument {
    std::string command;
    bool deterministic = false;
    Graph input;
    CliqueCover cover;
    int value = 0;
    std::optional<LinearHypergraph> realization;
    std::vector<int> line_to_vertex;  // realization line index -> input vertex
    std::optional<BoundsReport> bounds_report;
    SolveStats stats;
    std::optional<std::string> timestamp;  // suppressed in deterministic mode
};

CertificateDocument make_solve_certificate(const Graph& g, const SolveResult& result,
                                           bool reduced, bool deterministic);

nlohmann::json certificate_to_json(const CertificateDocument& doc);
CertificateDocument certificate_from_json(const nlohmann::json& j);

/// One re-checked claim; a report is the ordered list of all of them.
struct CertificateCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};
struct CertificateVerifyReport {
    bool ok = false;
    std::vector<CertificateCheck> checks;
};

/// Re-verifies a document from scratch: cover conditions, hypergraph axioms,
/// cover/realization correspondence, intersection-graph isomorphism with the
/// input (both via the stored bijection and via canonical labeling), and the
/// bounds block. Trusts nothing produced by the solver.
CertificateVerifyReport verify_certificate(const nlohmann::json& j);

}  // namespace linspect

#endif
