#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "linspect/certificate.hpp"
#include "linspect/solver.hpp"

using namespace linspect;

namespace {

nlohmann::json solve_to_json(const Graph& g, bool reduced = false) {
    SolveResult result = reduced ? reduced_linear_intersection_number(g)
                                 : linear_intersection_number(g);
    return certificate_to_json(make_solve_certificate(g, result, reduced, true));
}

// single-field corruptions that must each invalidate the certificate
nlohmann::json mutate(const nlohmann::json& doc, int which, std::mt19937& rng) {
    nlohmann::json j = doc;
    int n = j["input"]["n"].get<int>();
    auto random_index = [&](std::size_t size) {
        return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    };
    switch (which) {
        case 0:  // claimed value off by one
            j["value"] = j["value"].get<int>() + 1;
            return j;
        case 1:  // drop a cover member
            j["cover"].erase(j["cover"].size() - 1);
            return j;
        case 2: {  // flip one member of one cover clique
            auto& clique = j["cover"][random_index(j["cover"].size())];
            auto& entry = clique[random_index(clique.size())];
            entry = (entry.get<int>() + 1) % n;
            return j;
        }
        case 3: {  // toggle an input edge
            auto& edges = j["input"]["edges"];
            if (!edges.empty() && rng() % 2 == 0) {
                edges.erase(random_index(edges.size()));
            } else {
                // add the first missing pair
                std::vector<std::vector<bool>> present(
                    static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
                for (const auto& e : edges)
                    present[e[0].get<std::size_t>()][e[1].get<std::size_t>()] = true;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (!present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                            edges.push_back({a, b});
                            return j;
                        }
                edges.erase(random_index(edges.size()));  // complete graph: remove instead
            }
            return j;
        }
        case 4:  // realization point count
            if (j.contains("realization"))
                j["realization"]["points"] = j["realization"]["points"].get<int>() + 1;
            else
                j["value"] = j["value"].get<int>() - 1;
            return j;
        case 5: {  // corrupt one realization line
            if (!j.contains("realization")) {
                j["mode"] = "full";  // reduced certificate claiming full mode lacks a realization
                return j;
            }
            auto& lines = j["realization"]["lines"];
            auto& line = lines[random_index(lines.size())];
            if (!line.empty())
                line.erase(line.size() - 1);
            else
                line.push_back(0);
            return j;
        }
        default: {  // permute the stored bijection off its matching position
            if (!j.contains("realization") || n < 2) {
                j["value"] = j["value"].get<int>() + 2;
                return j;
            }
            auto& map = j["realization"]["line_to_vertex"];
            std::swap(map[0], map[1]);
            return j;
        }
    }
}

}  // namespace

TEST_CASE("emitted certificates verify") {
    for (const Graph& g : testcat::graphs_up_to(4)) {
        CHECK(verify_certificate(solve_to_json(g)).ok);
        CHECK(verify_certificate(solve_to_json(g, true)).ok);
    }
}

TEST_CASE("documents round-trip through JSON") {
    Graph g = testcat::bowtie();
    nlohmann::json j = solve_to_json(g);
    CertificateDocument doc = certificate_from_json(j);
    CHECK(certificate_to_json(doc) == j);
    CHECK(doc.input == g);
    CHECK(doc.value == 6);
}

TEST_CASE("deterministic output is byte-identical and timestamp-free") {
    Graph g = testcat::paw();
    nlohmann::json a = solve_to_json(g);
    nlohmann::json b = solve_to_json(g);
    CHECK(a.dump() == b.dump());
    CHECK(!a.contains("timestamp"));

    SolveResult result = linear_intersection_number(g);
    nlohmann::json stamped = certificate_to_json(make_solve_certificate(g, result, false, false));
    CHECK(stamped.contains("timestamp"));
}

TEST_CASE("single-field mutations are rejected") {
    std::mt19937 rng(97);
    auto catalog = testcat::graphs_up_to(5);
    // keep graphs with at least one edge so every mutation class applies
    std::vector<nlohmann::json> docs;
    for (const Graph& g : catalog)
        if (g.edge_count() > 0) docs.push_back(solve_to_json(g));

    int rejected = 0, total = 0;
    for (int round = 0; round < 12; ++round) {
        for (const auto& doc : docs) {
            int which = static_cast<int>(rng() % 7);
            nlohmann::json bad = mutate(doc, which, rng);
            if (bad == doc) continue;
            ++total;
            if (!verify_certificate(bad).ok) ++rejected;
        }
    }
    CHECK(total > 500);
    CHECK(rejected == total);
}

TEST_CASE("bounds tampering is caught") {
    nlohmann::json j = solve_to_json(Graph::complete(4));
    j["bounds"]["omega"] = 2;
    CHECK(!verify_certificate(j).ok);
}

TEST_CASE("wrong schema versions are rejected") {
    nlohmann::json j = solve_to_json(Graph::complete(3));
    j["schema"] = "linspect/2";
    CHECK(!verify_certificate(j).ok);
}
