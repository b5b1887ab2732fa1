#pragma once

#include "rgraph/multigraph.hpp"

// Named graphs used throughout the test corpus and the examples.

namespace rgraph {

inline Multigraph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.push_back({u, v});
    return Multigraph(n, e);
}

inline Multigraph complete_bipartite(int a, int b) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            e.push_back({u, a + v});
    return Multigraph(a + b, e);
}

inline Multigraph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        e.push_back({i, (i + 1) % n});
    return Multigraph(n, e);
}

inline Multigraph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Multigraph(n, e);
}

inline Multigraph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i)
        e.push_back({0, i});
    return Multigraph(leaves + 1, e);
}

// Two vertices joined by `multiplicity` parallel edges.
inline Multigraph digon(int multiplicity) {
    std::vector<std::pair<Vertex, Vertex>> e(static_cast<std::size_t>(multiplicity), {0, 1});
    return Multigraph(2, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Multigraph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 5; ++i)
        e.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i)
        e.push_back({5 + i, 5 + (i + 2) % 5});
    for (int i = 0; i < 5; ++i)
        e.push_back({i, i + 5});
    return Multigraph(10, e);
}

// K3 x K2: triangles {0,1,2} and {3,4,5} joined by rungs i -- i+3.
inline Multigraph prism_graph() {
    return Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Two triangles joined by a single edge between them (6 vertices, bridge 2-3).
inline Multigraph two_triangles_bridge() {
    return Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Cubic simple graph with a bridge: two K4-minus-an-edge blocks, each reached
// through a subdivision vertex, joined by the bridge 0 -- 5.
inline Multigraph bridged_cubic_graph() {
    return Multigraph(10, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                           {5, 6}, {5, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9},
                           {0, 5}});
}

} // namespace rgraph
