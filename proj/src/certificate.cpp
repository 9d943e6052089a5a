#include "linspect/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include "linspect/isomorphism.hpp"

namespace linspect {

namespace {

nlohmann::json edges_to_json(const Graph& g) {
    auto arr = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) arr.push_back(nlohmann::json::array({a, b}));
    return arr;
}

nlohmann::json vertex_set_to_json(VertexSet s) {
    auto arr = nlohmann::json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

std::string now_utc() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

CertificateDocument make_solve_certificate(const Graph& g, const SolveResult& result,
                                           bool reduced, bool deterministic) {
    CertificateDocument doc;
    doc.command = reduced ? "solve --reduced" : "solve";
    doc.deterministic = deterministic;
    doc.input = g;
    doc.cover = result.cover;
    doc.value = result.value;
    doc.realization = result.realization;
    if (doc.realization) {
        doc.line_to_vertex.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) doc.line_to_vertex[static_cast<std::size_t>(v)] = v;
    }
    if (!reduced) doc.bounds_report = bounds(g);
    doc.stats = result.stats;
    if (!deterministic) doc.timestamp = now_utc();
    return doc;
}

nlohmann::json certificate_to_json(const CertificateDocument& doc) {
    nlohmann::json j;
    j["schema"] = schema_version;
    j["version"] = tool_version;
    j["command"] = doc.command;
    j["deterministic"] = doc.deterministic;
    j["input"]["n"] = doc.input.vertex_count();
    j["input"]["edges"] = edges_to_json(doc.input);
    j["mode"] = doc.cover.mode == CliqueCover::Mode::full ? "full" : "reduced";
    j["value"] = doc.value;
    auto cover = nlohmann::json::array();
    for (VertexSet c : doc.cover.cliques) cover.push_back(vertex_set_to_json(c));
    j["cover"] = cover;
    if (doc.realization) {
        j["realization"]["points"] = doc.realization->point_count;
        j["realization"]["lines"] = doc.realization->lines;
        j["realization"]["line_to_vertex"] = doc.line_to_vertex;
    }
    if (doc.bounds_report) {
        const BoundsReport& b = *doc.bounds_report;
        j["bounds"] = {{"n", b.n},
                       {"m", b.m},
                       {"omega", b.omega},
                       {"sqrt_bound", b.sqrt_bound},
                       {"seymour", b.seymour},
                       {"two_alpha", b.two_alpha},
                       {"k_independent", b.k_independent},
                       {"flag", b.flag},
                       {"flag_weak", b.flag_weak},
                       {"flag_sum", b.flag_sum_value},
                       {"edge_bound", b.edge_bound},
                       {"best_lower", b.best_lower},
                       {"binding", b.binding}};
    }
    j["stats"]["nodes"] = doc.stats.nodes;
    j["stats"]["pruned_edge_lower"] = doc.stats.pruned_edge_lower;
    j["stats"]["pruned_debt"] = doc.stats.pruned_debt;
    if (!doc.deterministic) {
        j["stats"]["wall_ms"] = doc.stats.wall_seconds * 1000.0;
        if (doc.timestamp) j["timestamp"] = *doc.timestamp;
    }
    return j;
}

namespace {

Graph graph_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("malformed edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edge_list(n, edges);
}

VertexSet vertex_set_from_json(const nlohmann::json& j, int n) {
    VertexSet s;
    for (const auto& entry : j) {
        int v = entry.get<int>();
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range in set");
        if (s.contains(v)) throw std::invalid_argument("duplicate vertex in set");
        s.add(v);
    }
    return s;
}

}  // namespace

CertificateDocument certificate_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != schema_version)
        throw std::invalid_argument("unsupported schema: " + j.at("schema").get<std::string>());
    CertificateDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.deterministic = j.value("deterministic", false);
    doc.input = graph_from_json(j.at("input"));
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "full" && mode != "reduced") throw std::invalid_argument("unknown mode " + mode);
    doc.cover.mode = mode == "full" ? CliqueCover::Mode::full : CliqueCover::Mode::reduced;
    for (const auto& c : j.at("cover"))
        doc.cover.cliques.push_back(vertex_set_from_json(c, doc.input.vertex_count()));
    doc.value = j.at("value").get<int>();
    if (j.contains("realization")) {
        LinearHypergraph h;
        h.point_count = j["realization"].at("points").get<int>();
        h.lines = j["realization"].at("lines").get<std::vector<std::vector<int>>>();
        doc.realization = std::move(h);
        doc.line_to_vertex = j["realization"].at("line_to_vertex").get<std::vector<int>>();
    }
    if (j.contains("bounds")) {
        const auto& b = j["bounds"];
        BoundsReport r;
        r.n = b.at("n").get<int>();
        r.m = b.at("m").get<int>();
        r.omega = b.at("omega").get<int>();
        r.sqrt_bound = b.at("sqrt_bound").get<int>();
        r.seymour = b.at("seymour").get<int>();
        r.two_alpha = b.at("two_alpha").get<int>();
        r.k_independent = b.at("k_independent").get<int>();
        r.flag = b.at("flag").get<int>();
        r.flag_weak = b.at("flag_weak").get<int>();
        r.flag_sum_value = b.at("flag_sum").get<int>();
        r.edge_bound = b.at("edge_bound").get<int>();
        r.best_lower = b.at("best_lower").get<int>();
        r.binding = b.at("binding").get<std::string>();
        doc.bounds_report = r;
    }
    if (j.contains("stats")) {
        doc.stats.nodes = j["stats"].value("nodes", std::uint64_t{0});
        doc.stats.pruned_edge_lower = j["stats"].value("pruned_edge_lower", std::uint64_t{0});
        doc.stats.pruned_debt = j["stats"].value("pruned_debt", std::uint64_t{0});
        if (j["stats"].contains("wall_ms")) doc.stats.wall_seconds = j["stats"]["wall_ms"].get<double>() / 1000.0;
    }
    if (j.contains("timestamp")) doc.timestamp = j["timestamp"].get<std::string>();
    return doc;
}

namespace {

bool bounds_match(const BoundsReport& a, const BoundsReport& b) {
    return a.n == b.n && a.m == b.m && a.omega == b.omega && a.sqrt_bound == b.sqrt_bound &&
           a.seymour == b.seymour && a.two_alpha == b.two_alpha &&
           a.k_independent == b.k_independent && a.flag == b.flag && a.flag_weak == b.flag_weak &&
           a.flag_sum_value == b.flag_sum_value && a.edge_bound == b.edge_bound &&
           a.best_lower == b.best_lower && a.binding == b.binding;
}

}  // namespace

CertificateVerifyReport verify_certificate(const nlohmann::json& j) {
    CertificateVerifyReport report;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back({name, ok, detail});
        return ok;
    };

    CertificateDocument doc;
    try {
        doc = certificate_from_json(j);
        add("document", true, "well-formed");
    } catch (const std::exception& e) {
        add("document", false, e.what());
        report.ok = false;
        return report;
    }

    bool ok = true;
    const Graph& g = doc.input;
    ok &= add("value", doc.value == doc.cover.size(),
              "claimed value " + std::to_string(doc.value) + ", cover size " +
                  std::to_string(doc.cover.size()));

    CoverVerdict verdict = verify_cover(g, doc.cover);
    ok &= add("cover", verdict.ok, verdict.detail);

    if (doc.cover.mode == CliqueCover::Mode::full) {
        if (!doc.realization) {
            ok &= add("realization", false, "missing realization for a full-mode certificate");
        } else {
            const LinearHypergraph& h = *doc.realization;
            auto violation = check(h);
            ok &= add("axioms", !violation, violation ? violation->message : "L1 and L2 hold");
            ok &= add("points", h.point_count == doc.value,
                      std::to_string(h.point_count) + " points for value " + std::to_string(doc.value));

            bool bijection = static_cast<int>(doc.line_to_vertex.size()) == g.vertex_count() &&
                             h.line_count() == g.vertex_count();
            if (bijection) {
                std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
                for (int v : doc.line_to_vertex) {
                    if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) {
                        bijection = false;
                        break;
                    }
                    seen[static_cast<std::size_t>(v)] = 1;
                }
            }
            ok &= add("bijection", bijection, "line_to_vertex maps lines onto vertices");

            if (bijection && !violation) {
                // the lines must be exactly the cover-membership lists
                bool corresponds = doc.value == doc.cover.size();
                for (int line = 0; corresponds && line < h.line_count(); ++line) {
                    int vertex = doc.line_to_vertex[static_cast<std::size_t>(line)];
                    std::vector<int> expected;
                    for (int i = 0; i < doc.cover.size(); ++i)
                        if (doc.cover.cliques[static_cast<std::size_t>(i)].contains(vertex))
                            expected.push_back(i);
                    corresponds = expected == h.lines[static_cast<std::size_t>(line)];
                }
                ok &= add("correspondence", corresponds,
                          "lines are the membership lists of the cover");

                Graph produced = intersection_graph(h).graph;
                bool matches = relabeled(produced, doc.line_to_vertex) == g;
                ok &= add("intersection_graph", matches,
                          "realization meets the input under the stored bijection");
                ok &= add("isomorphic", is_isomorphic(produced, g),
                          "canonical forms of realization graph and input agree");
            }
        }
    } else {
        ok &= add("realization", !doc.realization,
                  doc.realization ? "unexpected realization in a reduced-mode certificate"
                                  : "reduced mode carries no realization");
    }

    if (doc.bounds_report) {
        ok &= add("bounds", bounds_match(*doc.bounds_report, bounds(g)),
                  "bounds block recomputed from the input");
    }

    report.ok = ok;
    return report;
}

}  // namespace linspect
