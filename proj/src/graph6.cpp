#include "linspect/graph6.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace linspect {

namespace {

constexpr std::string_view g6_header = ">>graph6<<";

int decode_byte(char c, std::string_view line) {
    int value = static_cast<unsigned char>(c) - 63;
    if (value < 0 || value > 63)
        throw ParseError("invalid graph6 byte '" + std::string(1, c) + "' in \"" +
                         std::string(line) + "\"");
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::string_view body = line;
    if (body.substr(0, g6_header.size()) == g6_header) body.remove_prefix(g6_header.size());
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
    if (body.empty()) throw ParseError("empty graph6 line");

    std::size_t pos = 0;
    long long n;
    int first = decode_byte(body[pos++], line);
    if (first < 63) {
        n = first;
    } else {
        if (body.size() < 4) throw ParseError("truncated graph6 header");
        if (decode_byte(body[1], line) == 63) throw ParseError("graph6 8-byte order not supported");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(body[pos++], line);
    }
    if (n > Graph::max_vertices)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(Graph::max_vertices));

    long long bit_count = n * (n - 1) / 2;
    std::size_t expected_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (body.size() - pos != expected_bytes)
        throw ParseError("graph6 body has " + std::to_string(body.size() - pos) +
                         " bytes, expected " + std::to_string(expected_bytes));

    std::vector<Edge> edges;
    long long bit = 0;
    for (std::size_t i = 0; i < expected_bytes; ++i) {
        int value = decode_byte(body[pos + i], line);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            bool set = (value >> shift) & 1;
            if (bit >= bit_count) {
                if (set) throw ParseError("nonzero padding bits in graph6 body");
                continue;
            }
            if (!set) continue;
            // column-major upper triangle: bit index -> (row, column)
            long long k = bit, col = 1;
            while (k >= col) k -= col++;
            edges.emplace_back(static_cast<int>(k), static_cast<int>(col));
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int accum = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            accum = (accum << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(accum + 63));
                accum = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((accum << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string raw;
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        if (!n) {
            if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
            long long count;
            if (!(fields >> count))
                throw ParseError("line " + std::to_string(line_no) + ": expected the vertex count");
            std::string extra;
            if (fields >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": trailing content after the vertex count");
            if (count < 0 || count > Graph::max_vertices)
                throw ParseError("vertex count " + std::to_string(count) + " out of range [0, " +
                                 std::to_string(Graph::max_vertices) + "]");
            n = static_cast<int>(count);
            continue;
        }
        long long a, b;
        if (!(fields >> a)) continue;  // blank line
        if (!(fields >> b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex indices");
        std::string extra;
        if (fields >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": trailing content after the edge");
        if (a < 0 || a >= *n || b < 0 || b >= *n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
        if (a == b) throw ParseError("line " + std::to_string(line_no) + ": loops are not allowed");
        edges.emplace_back(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
    }
    if (!n) throw ParseError("missing vertex count line");
    return Graph::from_edge_list(*n, edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
    return out.str();
}

Graph load_graph(const std::string& path, std::optional<GraphFormat> format) {
    std::string content;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        content = buffer.str();
    } else {
        std::ifstream file(path);
        if (!file) throw ParseError("cannot open " + path);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        content = buffer.str();
    }
    if (!format) {
        if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") {
            format = GraphFormat::graph6;
        } else {
            // a lone integer on the first meaningful line marks an edge list
            std::istringstream probe(content);
            std::string raw;
            format = GraphFormat::graph6;
            while (std::getline(probe, raw)) {
                if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
                std::istringstream fields(raw);
                std::string token;
                if (!(fields >> token)) continue;
                std::string rest;
                bool numeric = !token.empty() && token.find_first_not_of("0123456789") == std::string::npos;
                if (numeric && !(fields >> rest)) format = GraphFormat::edgelist;
                break;
            }
        }
    }
    if (*format == GraphFormat::edgelist) return parse_edge_list_text(content);
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        return parse_graph6(line);
    }
    throw ParseError("no graph6 line found in " + path);
}

}  // namespace linspect
