#include "linspect/cli_commands.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "linspect/brute_force.hpp"
#include "linspect/certificate.hpp"
#include "linspect/classify.hpp"
#include "linspect/clique.hpp"
#include "linspect/constructions.hpp"
#include "linspect/graph6.hpp"
#include "linspect/solver.hpp"

namespace linspect::cli {

namespace {

struct CommonOptions {
    std::string file;
    std::string format;
    bool json = false;
    bool deterministic = false;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0.0;
};

std::optional<GraphFormat> format_of(const CommonOptions& opts) {
    if (opts.format == "graph6") return GraphFormat::graph6;
    if (opts.format == "edgelist") return GraphFormat::edgelist;
    return std::nullopt;
}

Budget budget_of(const CommonOptions& opts) {
    Budget b;
    if (opts.budget_nodes > 0) b.max_nodes = opts.budget_nodes;
    if (opts.budget_secs > 0) b.max_seconds = opts.budget_secs;
    return b;
}

int worker_count() {
    if (const char* env = std::getenv("LINSPECT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

std::string show(VertexSet s) { return to_string(s); }

int do_solve(const CommonOptions& opts, bool reduced) {
    Graph g = load_graph(opts.file, format_of(opts));
    SolveResult result = reduced ? reduced_linear_intersection_number(g, budget_of(opts))
                                 : linear_intersection_number(g, budget_of(opts));
    if (!result.exact) {
        std::cout << "budget exceeded: " << (reduced ? "v̄" : "v") << " in ["
                  << result.lower_bound << ", " << result.upper_bound << "], nodes "
                  << result.stats.nodes << "\n";
        return exit_budget;
    }
    CertificateDocument doc = make_solve_certificate(g, result, reduced, opts.deterministic);
    nlohmann::json j = certificate_to_json(doc);
    CertificateVerifyReport verification = verify_certificate(j);
    if (!verification.ok) {
        std::cerr << "internal error: emitted certificate failed verification\n";
        for (const auto& c : verification.checks)
            if (!c.ok) std::cerr << "  " << c.name << ": " << c.detail << "\n";
        return exit_check_failed;
    }
    if (opts.json) {
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << (reduced ? "v̄ = " : "v = ") << result.value << "\n";
    std::cout << "cover (" << result.cover.size() << " members):";
    for (VertexSet c : result.cover.cliques) std::cout << ' ' << show(c);
    std::cout << "\n";
    if (result.realization)
        std::cout << "realization: " << result.realization->point_count << " points, "
                  << result.realization->line_count() << " lines\n";
    std::cout << "nodes " << result.stats.nodes << ", certificate verified\n";
    return exit_ok;
}

int do_bounds(const CommonOptions& opts) {
    Graph g = load_graph(opts.file, format_of(opts));
    BoundsReport r = bounds(g);
    if (opts.json) {
        CertificateDocument doc;
        doc.command = "bounds";
        doc.deterministic = opts.deterministic;
        doc.input = g;
        doc.bounds_report = r;
        nlohmann::json j = certificate_to_json(doc);
        j.erase("cover");
        j.erase("mode");
        j.erase("value");
        j.erase("stats");
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "n = " << r.n << ", m = " << r.m << "\n";
    std::cout << "omega          " << r.omega << "\n";
    std::cout << "sqrt           " << r.sqrt_bound << "\n";
    std::cout << "seymour        " << r.seymour << "\n";
    std::cout << "two_alpha      " << r.two_alpha << "\n";
    std::cout << "k_independent  " << r.k_independent << "\n";
    std::cout << "flag           " << r.flag << "  (flag sum " << r.flag_sum_value << ")\n";
    std::cout << "flag_weak      " << r.flag_weak << "\n";
    std::cout << "best lower     " << r.best_lower << "  (" << r.binding << ")\n";
    std::cout << "edge bound     " << r.edge_bound << "\n";
    return exit_ok;
}

int do_classify(const CommonOptions& opts) {
    Graph g = load_graph(opts.file, format_of(opts));
    VertexClassification c = classify_vertices(g, budget_of(opts));
    auto atf = is_almost_triangle_free(g);
    auto closed = closed_form_v(g);

    if (opts.json) {
        nlohmann::json j;
        j["schema"] = schema_version;
        j["version"] = tool_version;
        j["command"] = "classify";
        j["input"]["n"] = g.vertex_count();
        auto edges = nlohmann::json::array();
        for (const auto& [a, b] : g.edges()) edges.push_back(nlohmann::json::array({a, b}));
        j["input"]["edges"] = edges;
        auto flags = nlohmann::json::array();
        for (const auto& f : c.vertex) {
            nlohmann::json entry{{"leaf", f.leaf},
                                 {"isolated", f.isolated},
                                 {"interior", f.interior},
                                 {"strongly_interior", f.strongly_interior}};
            if (f.extremal_interior) entry["extremal_interior"] = *f.extremal_interior;
            if (f.extremal_strongly_interior)
                entry["extremal_strongly_interior"] = *f.extremal_strongly_interior;
            flags.push_back(entry);
        }
        j["vertices"] = flags;
        j["almost_triangle_free"] = static_cast<bool>(atf);
        if (atf) {
            j["atf"]["base_vertices"] = atf->base_vertices.to_vector();
            auto triangles = nlohmann::json::array();
            for (const auto& t : atf->triangles)
                triangles.push_back({{"attachment", t.attachment}, {"new", {t.new_a, t.new_b}}});
            j["atf"]["triangles"] = triangles;
            j["atf"]["extremal_vertices"] = atf->extremal_vertices.to_vector();
        }
        if (closed) {
            j["closed_form"]["value"] = closed->value;
            auto comps = nlohmann::json::array();
            for (const auto& comp : closed->components)
                comps.push_back({{"vertices", comp.component.to_vector()},
                                 {"rule", comp.rule},
                                 {"value", comp.value}});
            j["closed_form"]["components"] = comps;
        }
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }

    std::cout << "vertex  leaf isolated interior strongly extremal extremal_strongly\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& f = c.vertex[static_cast<std::size_t>(v)];
        auto tri = [](const std::optional<bool>& b) { return !b ? "?" : (*b ? "yes" : "no"); };
        std::cout << v << "\t" << (f.leaf ? "yes" : "no") << "\t" << (f.isolated ? "yes" : "no")
                  << "\t" << (f.interior ? "yes" : "no") << "\t"
                  << (f.strongly_interior ? "yes" : "no") << "\t" << tri(f.extremal_interior)
                  << "\t" << tri(f.extremal_strongly_interior) << "\n";
    }
    std::cout << "Int    = " << show(c.interior_set()) << "\n";
    std::cout << "Int_s  = " << show(c.strongly_interior_set()) << "\n";
    if (auto s = c.extremal_interior_set()) std::cout << "Int_e  = " << show(*s) << "\n";
    if (auto s = c.extremal_strongly_interior_set()) std::cout << "Int_es = " << show(*s) << "\n";
    if (atf) {
        std::cout << "almost triangle-free: yes; base " << show(atf->base_vertices) << ", "
                  << atf->triangles.size() << " glued triangle(s), extremal "
                  << show(atf->extremal_vertices) << "\n";
    } else {
        std::cout << "almost triangle-free: no\n";
    }
    if (closed) {
        std::cout << "closed form: v = " << closed->value << " (";
        for (std::size_t i = 0; i < closed->components.size(); ++i)
            std::cout << (i ? " + " : "") << closed->components[i].rule << " "
                      << closed->components[i].value;
        std::cout << ")\n";
    } else {
        std::cout << "closed form: none\n";
    }
    return exit_ok;
}

int do_efl(const CommonOptions& opts) {
    Graph g = load_graph(opts.file, format_of(opts));
    EflVerdict verdict = verify_efl(g, budget_of(opts));
    if (!verdict.decided) {
        std::cout << "budget exceeded: chi = " << verdict.chi << ", v in ["
                  << verdict.v.lower_bound << ", " << verdict.v.upper_bound << "]\n";
        return exit_budget;
    }
    if (opts.json) {
        nlohmann::json j{{"schema", schema_version},
                         {"command", "efl"},
                         {"chi", verdict.chi},
                         {"holds", verdict.holds}};
        if (verdict.v.exact) {
            j["v"] = verdict.v.value;
            j["margin"] = verdict.margin;
        }
        std::cout << j.dump(2) << "\n";
        return verdict.holds ? exit_ok : exit_check_failed;
    }
    if (verdict.holds) {
        std::cout << "chi = " << verdict.chi << ", v = " << verdict.v.value
                  << ", EFL holds (margin " << verdict.margin << ")\n";
        return exit_ok;
    }
    std::cout << "EFL COUNTEREXAMPLE: chi = " << verdict.chi << " exceeds v = "
              << verdict.v.value << "\n";
    return exit_check_failed;
}

const char* relation_symbol(SurgeryPrediction::Kind kind) {
    switch (kind) {
        case SurgeryPrediction::Kind::equality: return "=";
        case SurgeryPrediction::Kind::at_least: return ">=";
        case SurgeryPrediction::Kind::at_most: return "<=";
        default: return "?";
    }
}

int report_surgery(const SurgeryOutcome& outcome, bool verify, const Budget& budget) {
    std::cout << "result graph:\n" << to_edge_list_text(outcome.result);
    for (std::size_t i = 0; i < outcome.vertex_maps.size(); ++i) {
        std::cout << "vertex map " << i << ":";
        for (std::size_t v = 0; v < outcome.vertex_maps[i].size(); ++v)
            std::cout << ' ' << v << "->" << outcome.vertex_maps[i][v];
        std::cout << "\n";
    }
    const SurgeryPrediction& p = outcome.prediction;
    if (p.kind == SurgeryPrediction::Kind::inapplicable) {
        std::cout << "prediction: none (" << p.provenance << ")\n";
        return exit_ok;
    }
    std::cout << "prediction: v(result) " << relation_symbol(p.kind) << " " << p.rhs << "  ["
              << p.provenance << "]\n";
    if (p.reduced_value)
        std::cout << "prediction: v̄(result) = " << *p.reduced_value << "\n";
    if (!verify) return exit_ok;

    SolveResult solved = linear_intersection_number(outcome.result, budget);
    if (!solved.exact) {
        std::cout << "verification budget exceeded\n";
        return exit_budget;
    }
    bool holds = true;
    switch (p.kind) {
        case SurgeryPrediction::Kind::equality: holds = solved.value == p.rhs; break;
        case SurgeryPrediction::Kind::at_least: holds = solved.value >= p.rhs; break;
        case SurgeryPrediction::Kind::at_most: holds = solved.value <= p.rhs; break;
        default: break;
    }
    if (p.reduced_value && holds) {
        SolveResult reduced = reduced_linear_intersection_number(outcome.result, budget);
        if (!reduced.exact) {
            std::cout << "verification budget exceeded\n";
            return exit_budget;
        }
        holds = reduced.value == *p.reduced_value;
        if (!holds) {
            std::cout << "PREDICTION VIOLATED: v̄(result) = " << reduced.value << "\n";
            return exit_check_failed;
        }
    }
    if (!holds) {
        std::cout << "PREDICTION VIOLATED: v(result) = " << solved.value << "\n";
        return exit_check_failed;
    }
    std::cout << "prediction verified: v(result) = " << solved.value << "\n";
    return exit_ok;
}

std::pair<int, int> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected two comma-separated indices, got \"" + text + "\"");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet s;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        int v = std::stoi(token);
        if (v < 0 || v >= Graph::max_vertices) throw std::invalid_argument("vertex out of range");
        s.add(v);
    }
    if (s.empty()) throw std::invalid_argument("empty vertex list");
    return s;
}

struct BatchLine {
    bool ok = false;
    bool skipped = false;
    std::string text;
};

BatchLine batch_check_one(const std::string& g6, const std::string& mode) {
    BatchLine out;
    Graph g;
    try {
        g = parse_graph6(g6);
    } catch (const ParseError& e) {
        out.text = std::string("parse error: ") + e.what();
        return out;
    }
    std::ostringstream os;
    if (mode == "efl") {
        EflVerdict verdict = verify_efl(g);
        out.ok = verdict.decided && verdict.holds;
        os << "chi=" << verdict.chi << " v=" << verdict.v.value
           << (out.ok ? " ok" : " EFL COUNTEREXAMPLE");
    } else if (mode == "oracle") {
        if (g.vertex_count() > 7) {
            out.skipped = true;
            os << "skipped (oracle cap)";
        } else {
            BruteForceValues reference = brute_force_values(g);
            int v = linear_intersection_number(g).value;
            int reduced = reduced_linear_intersection_number(g).value;
            out.ok = v == reference.v && reduced == reference.reduced_v;
            os << "v=" << v << "/" << reference.v << " v̄=" << reduced << "/"
               << reference.reduced_v << (out.ok ? " ok" : " MISMATCH");
        }
    } else if (mode == "atf") {
        int v = linear_intersection_number(g).value;
        BoundsReport r = bounds(g);
        bool recognized = is_almost_triangle_free(g).has_value();
        out.ok = (v == r.edge_bound) == recognized;
        os << "v=" << v << " edge_bound=" << r.edge_bound << " atf="
           << (recognized ? "yes" : "no") << (out.ok ? " ok" : " CHARACTERIZATION MISMATCH");
    } else {  // bounds
        int v = linear_intersection_number(g).value;
        BoundsReport r = bounds(g);
        out.ok = r.best_lower <= v && v <= r.edge_bound;
        os << "lower=" << r.best_lower << " v=" << v << " upper=" << r.edge_bound
           << (out.ok ? " ok" : " BOUND VIOLATION");
    }
    out.text = os.str();
    return out;
}

int do_batch(const std::string& file, const std::string& mode) {
    std::vector<std::string> lines;
    {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open " + file);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }
    std::vector<BatchLine> results(lines.size());
    std::atomic<std::size_t> cursor{0};
    int workers = std::min<int>(worker_count(), std::max<std::size_t>(lines.size(), 1));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= lines.size()) return;
                results[i] = batch_check_one(lines[i], mode);
            }
        });
    }
    for (auto& t : pool) t.join();

    std::size_t ok = 0, skipped = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        std::cout << (i + 1) << ": " << results[i].text << "\n";
        ok += results[i].ok ? 1 : 0;
        skipped += results[i].skipped ? 1 : 0;
    }
    std::cout << ok << "/" << lines.size() << " ok";
    if (skipped > 0) std::cout << ", " << skipped << " skipped";
    std::cout << "\n";
    return ok + skipped == lines.size() ? exit_ok : exit_check_failed;
}

int do_verify(const std::string& file) {
    nlohmann::json j;
    try {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open " + file);
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    CertificateVerifyReport report = verify_certificate(j);
    for (const auto& c : report.checks)
        std::cout << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    std::cout << (report.ok ? "certificate OK" : "certificate REJECTED") << "\n";
    return report.ok ? exit_ok : exit_check_failed;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"linear intersection number toolkit"};
    app.name("linspect");
    app.require_subcommand(1);

    CommonOptions opts;
    bool reduced = false, verify_flag = false;
    std::string second_file, at_spec, pair_spec, clique_spec, edge_spec, check_mode;

    auto add_common = [&](CLI::App* cmd, bool with_budget = true) {
        cmd->add_option("file", opts.file, "graph file (graph6 or edge list; - for stdin)")
            ->required();
        cmd->add_option("--format", opts.format, "input format")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
        cmd->add_flag("--json", opts.json, "emit a JSON document");
        cmd->add_flag("--deterministic", opts.deterministic,
                      "suppress timestamps and timings for byte-stable output");
        if (with_budget) {
            cmd->add_option("--budget-nodes", opts.budget_nodes, "search node limit");
            cmd->add_option("--budget-secs", opts.budget_secs, "search time limit in seconds");
        }
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute v(G) or v̄(G) with certificate");
    add_common(solve_cmd);
    solve_cmd->add_flag("--reduced", reduced, "compute the reduced number v̄(G)");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound on v(G)");
    add_common(bounds_cmd, false);

    CLI::App* classify_cmd = app.add_subcommand("classify", "vertex taxonomy and closed forms");
    add_common(classify_cmd);

    CLI::App* efl_cmd = app.add_subcommand("efl", "check chi(G) <= v(G)");
    add_common(efl_cmd);

    CLI::App* surgery_cmd = app.add_subcommand("surgery", "graph surgeries with predictions");
    surgery_cmd->require_subcommand(1);
    CLI::App* join_cmd = surgery_cmd->add_subcommand("join", "glue two graphs at a vertex");
    join_cmd->add_option("file1", opts.file, "first graph")->required();
    join_cmd->add_option("file2", second_file, "second graph")->required();
    join_cmd->add_option("--at", at_spec, "a1,a2 vertices to identify")->required();
    CLI::App* collapse_cmd = surgery_cmd->add_subcommand("collapse", "merge two non-adjacent vertices");
    collapse_cmd->add_option("file", opts.file, "graph")->required();
    collapse_cmd->add_option("--pair", pair_spec, "a,b vertices to merge")->required();
    CLI::App* removeclique_cmd = surgery_cmd->add_subcommand("remove-clique", "delete a clique's edges");
    removeclique_cmd->add_option("file", opts.file, "graph")->required();
    removeclique_cmd->add_option("--clique", clique_spec, "comma-separated clique vertices")->required();
    CLI::App* deleteedge_cmd = surgery_cmd->add_subcommand("delete-edge", "delete one edge");
    deleteedge_cmd->add_option("file", opts.file, "graph")->required();
    deleteedge_cmd->add_option("--edge", edge_spec, "a,b edge to delete")->required();
    for (CLI::App* cmd : {join_cmd, collapse_cmd, removeclique_cmd, deleteedge_cmd})
        cmd->add_flag("--verify", verify_flag, "solve the result and check the prediction");

    CLI::App* batch_cmd = app.add_subcommand("batch", "run a check over a graph6 catalog");
    batch_cmd->add_option("file", opts.file, "catalog file, one graph6 line per graph")->required();
    batch_cmd->add_option("--check", check_mode, "which invariant suite to run")
        ->required()
        ->check(CLI::IsMember({"efl", "oracle", "atf", "bounds"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a certificate document");
    verify_cmd->add_option("file", opts.file, "certificate JSON file")->required();

    std::vector<const char*> argv;
    argv.push_back("linspect");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*solve_cmd) return do_solve(opts, reduced);
        if (*bounds_cmd) return do_bounds(opts);
        if (*classify_cmd) return do_classify(opts);
        if (*efl_cmd) return do_efl(opts);
        if (*batch_cmd) return do_batch(opts.file, check_mode);
        if (*verify_cmd) return do_verify(opts.file);
        if (*surgery_cmd) {
            Budget budget;  // surgeries solve exactly; no budget knob here
            if (*join_cmd) {
                Graph g1 = load_graph(opts.file), g2 = load_graph(second_file);
                auto [a1, a2] = parse_pair(at_spec);
                return report_surgery(join_at_vertex(g1, g2, a1, a2, budget), verify_flag, budget);
            }
            Graph g = load_graph(opts.file);
            if (*collapse_cmd) {
                auto [a, b] = parse_pair(pair_spec);
                return report_surgery(collapse(g, a, b, budget), verify_flag, budget);
            }
            if (*removeclique_cmd)
                return report_surgery(remove_clique(g, parse_vertex_list(clique_spec), budget),
                                      verify_flag, budget);
            if (*deleteedge_cmd) {
                auto [a, b] = parse_pair(edge_spec);
                return report_surgery(delete_edge(g, {a, b}, budget), verify_flag, budget);
            }
        }
        std::cerr << "no subcommand selected\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace linspect::cli
