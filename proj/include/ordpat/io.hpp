#pragma once

// Graph ingestion and serialization.  Two formats: a human-friendly edge list
// (first non-comment line is the vertex count, then one "u v" pair per line,
// '#' comments) and graph6 (one graph per line), used to ingest exhaustive
// non-isomorphic graph lists.

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordpat/graph.hpp"

namespace ordpat {

enum class GraphFormat { EdgeList, Graph6 };

struct GraphDocument {
    UndirectedGraph graph;
    GraphFormat source_format = GraphFormat::EdgeList;
    std::string name;
};

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("parse error at line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

inline UndirectedGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    UndirectedGraph g;
    auto parse_int = [&](const std::string& token) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return value;
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + token + "'");
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank or comment-only line
        if (n < 0) {
            n = parse_int(first);
            if (n < 0) throw ParseError(line_no, "negative vertex count");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
            g = UndirectedGraph(n);
            continue;
        }
        std::string second, extra;
        if (!(ls >> second)) throw ParseError(line_no, "edge line needs two endpoints");
        if (ls >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
        try {
            g.add_edge(parse_int(first), parse_int(second));
        } catch (const std::invalid_argument& err) {
            throw ParseError(line_no, err.what());
        }
    }
    if (n < 0) throw ParseError(line_no, "missing vertex count");
    return g;
}

inline std::string emit_edge_list(const UndirectedGraph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// graph6

inline UndirectedGraph parse_graph6(std::string_view line) {
    std::string t;
    for (char c : line)
        if (c != '\r' && c != '\n' && c != ' ') t.push_back(c);
    if (t.rfind(">>graph6<<", 0) == 0) t = t.substr(10);
    if (t.empty()) throw std::invalid_argument("empty graph6 line");

    std::size_t pos = 0;
    long long n = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= t.size()) throw std::invalid_argument("truncated graph6 line");
        int b = static_cast<unsigned char>(t[i]) - 63;
        if (b < 0 || b > 63) throw std::invalid_argument("invalid graph6 byte");
        return b;
    };
    if (t[0] == '~') {
        if (t.size() >= 2 && t[1] == '~')
            throw std::invalid_argument("graph6 vertex counts beyond 2^18 are not supported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }

    UndirectedGraph g(static_cast<int>(n));
    long long bit_count = n * (n - 1) / 2;
    long long bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            std::size_t which = pos + static_cast<std::size_t>(bit_index / 6);
            int shift = 5 - static_cast<int>(bit_index % 6);
            if ((byte(which) >> shift) & 1) g.add_edge(i, j);
            ++bit_index;
        }
    }
    std::size_t expected = pos + static_cast<std::size_t>((bit_count + 5) / 6);
    if (t.size() != expected && bit_count > 0)
        throw std::invalid_argument("graph6 line has wrong length");
    if (bit_count == 0 && t.size() != pos)
        throw std::invalid_argument("graph6 line has wrong length");
    return g;
}

inline std::string emit_graph6(const UndirectedGraph& g) {
    const int n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline std::vector<UndirectedGraph> parse_graph6_lines(std::string_view text) {
    std::vector<UndirectedGraph> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (c != '\r' && c != ' ') trimmed.push_back(c);
        if (trimmed.empty()) continue;
        out.push_back(parse_graph6(trimmed));
    }
    return out;
}

// Auto-detect: a first non-comment token that parses as an integer means an
// edge list; otherwise graph6.
inline GraphDocument parse_graph_auto(std::string_view text, std::string name = "") {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        bool numeric = !token.empty() &&
                       token.find_first_not_of("0123456789") == std::string::npos;
        GraphDocument doc;
        doc.name = std::move(name);
        if (numeric) {
            doc.graph = parse_edge_list(text);
            doc.source_format = GraphFormat::EdgeList;
        } else {
            doc.graph = parse_graph6(token);
            doc.source_format = GraphFormat::Graph6;
        }
        return doc;
    }
    throw std::invalid_argument("no graph data found");
}

} // namespace ordpat
