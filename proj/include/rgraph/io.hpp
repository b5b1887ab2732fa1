#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rgraph/multigraph.hpp"

namespace rgraph {

// Edge-list format: first non-comment line "n m", then exactly m lines "u v"
// (0-based). '#' starts a comment line, parallel edges by repetition, loops
// rejected.
inline Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> endpoints;

    auto is_blank_or_comment = [](const std::string& s) {
        for (char c : s) {
            if (c == '#')
                return true;
            if (!std::isspace(static_cast<unsigned char>(c)))
                return false;
        }
        return true;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line))
            continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0)
                fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected header \"n m\"");
            std::string extra;
            if (fields >> extra)
                fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": trailing tokens after header");
            continue;
        }
        long u, v;
        if (!(fields >> u >> v))
            fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected \"u v\"");
        std::string extra;
        if (fields >> extra)
            fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": trailing tokens after edge");
        if (u == v)
            fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": vertex out of range");
        if (static_cast<long>(endpoints.size()) == m)
            fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": more than m edge lines");
        endpoints.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (n < 0)
        fail(ErrorKind::Parse, "empty input: missing \"n m\" header");
    if (static_cast<long>(endpoints.size()) != m)
        fail(ErrorKind::Parse, "expected " + std::to_string(m) + " edges, got " +
                                   std::to_string(endpoints.size()));
    return Multigraph(static_cast<int>(n), endpoints);
}

inline std::string serialize_edge_list(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// Standard graph6: ASCII chars 63..126, simple graphs, upper triangle
// column-major. One graph per input line; ">>graph6<<" headers are skipped.
inline Multigraph parse_graph6_line(std::string_view line) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader)
        line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.remove_suffix(1);
    if (line.empty())
        fail(ErrorKind::Parse, "empty graph6 line");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size())
            fail(ErrorKind::Parse, "graph6 data truncated");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            fail(ErrorKind::Parse, "invalid graph6 character at column " + std::to_string(pos));
        return c - 63;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        // '~' escape: 3-byte or 6-byte vertex count
        int a = next();
        if (a < 63) {
            long b = next(), c = next();
            n = (static_cast<long>(a) << 12) | (b << 6) | c;
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | next();
        }
    }
    if (n > 100000)
        fail(ErrorKind::Parse, "graph6 vertex count too large");

    std::vector<std::pair<Vertex, Vertex>> endpoints;
    int bits = 0, have = 0;
    for (long j = 1; j < n; ++j) {
        for (long i = 0; i < j; ++i) {
            if (have == 0) {
                bits = next();
                have = 6;
            }
            --have;
            if (bits >> have & 1)
                endpoints.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    if (pos != line.size())
        fail(ErrorKind::Parse, "trailing graph6 characters");
    return Multigraph(static_cast<int>(n), endpoints);
}

// Content-based detection: edge-list text starts with a digit or a comment,
// graph6 bytes never do (valid graph6 starts at ASCII 63).
inline bool looks_like_graph6(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c != '#' && !std::isdigit(static_cast<unsigned char>(c));
    }
    return false;
}

// Parse an input that may hold one edge-list graph or any number of graph6 lines.
inline std::vector<Multigraph> parse_graphs(const std::string& text) {
    if (!looks_like_graph6(text))
        return {parse_edge_list(text)};
    std::vector<Multigraph> graphs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (blank)
            continue;
        graphs.push_back(parse_graph6_line(line));
    }
    if (graphs.empty())
        fail(ErrorKind::Parse, "no graphs in input");
    return graphs;
}

// FNV-1a over the canonical sorted edge list. Not isomorphism-invariant:
// relabelings hash differently by design.
inline std::string graph_digest(const Multigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        pairs.push_back({e.u, e.v});
    std::sort(pairs.begin(), pairs.end());
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](long value) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(value >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(g.vertex_count());
    mix(g.edge_count());
    for (auto [u, v] : pairs) {
        mix(u);
        mix(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace rgraph
