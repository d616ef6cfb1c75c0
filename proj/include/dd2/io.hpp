#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dd2/graph.hpp"

namespace dd2 {

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

inline std::vector<long long> parse_ints(const std::string& line, int lineno, size_t expect) {
    std::istringstream iss(line);
    std::vector<long long> vals;
    long long x;
    while (iss >> x) vals.push_back(x);
    std::string rest;
    if (!iss.eof() && iss.fail()) {
        iss.clear();
        iss >> rest;
    }
    if (!rest.empty() || vals.size() != expect)
        throw parse_error("line " + std::to_string(lineno) + ": expected " +
                          std::to_string(expect) + " integers, got '" + line + "'");
    return vals;
}

} // namespace detail

/// Edge-list text format: first non-comment line "n m", then m lines "u v".
/// Lines starting with '#' are ignored. Errors carry the offending line number.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_blank_or_comment(line)) continue;
        auto header = detail::parse_ints(line, lineno, 2);
        n = header[0];
        m = header[1];
        break;
    }
    if (n < 0)
        throw parse_error("missing 'n m' header line");
    if (n > (1 << 24) || m < 0)
        throw parse_error("line " + std::to_string(lineno) + ": bad header values");

    EdgeSet edges;
    edges.reserve(static_cast<size_t>(m));
    long long seen = 0;
    while (seen < m && std::getline(in, line)) {
        ++lineno;
        if (detail::is_blank_or_comment(line)) continue;
        auto uv = detail::parse_ints(line, lineno, 2);
        long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex id out of range");
        if (u == v)
            throw parse_error("line " + std::to_string(lineno) + ": self-loop");
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        for (const auto& prev : edges)
            if (prev == e)
                throw parse_error("line " + std::to_string(lineno) + ": duplicate edge");
        edges.push_back(e);
        ++seen;
    }
    if (seen < m)
        throw parse_error("expected " + std::to_string(m) + " edges, found " +
                          std::to_string(seen));
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream iss(text);
    return parse_edge_list(iss);
}

/// Emits the same format parse_edge_list accepts; `provenance` lines, when
/// given, become '#' comments ahead of the header.
inline void serialize_edge_list(std::ostream& out, const Graph& g,
                                const std::vector<std::string>& provenance = {}) {
    for (const auto& p : provenance) out << "# " << p << "\n";
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline std::string serialize_edge_list(const Graph& g,
                                       const std::vector<std::string>& provenance = {}) {
    std::ostringstream oss;
    serialize_edge_list(oss, g, provenance);
    return oss.str();
}

inline void write_vertex_set(std::ostream& out, const char* label, const VertexSet& s) {
    out << label << ":";
    for (int v : s) out << " " << v;
    out << "\n";
}

} // namespace dd2
