#pragma once

// Test-only oracles, kept independent of the library implementations they
// cross-check: brute-force subset scans, bitmask DP matching, deletion-based
// bridge finding, and a seeded random multigraph generator.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "rgraph/multigraph.hpp"

namespace oracles {

using rgraph::Multigraph;
using rgraph::Vertex;

// Maximum matching size via bitmask DP over vertex subsets (n <= ~20).
inline int max_matching_size(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    std::vector<int> memo(std::size_t{1} << n, -1);
    memo[0] = 0;
    auto rec = [&](auto&& self, std::uint32_t mask) -> int {
        int& slot = memo[mask];
        if (slot >= 0)
            return slot;
        int v = std::countr_zero(mask);
        // leave v unmatched
        int best = self(self, mask & (mask - 1));
        std::uint32_t partners = nbr[static_cast<std::size_t>(v)] & mask;
        while (partners) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::max(best, 1 + self(self, mask & ~(1u << v) & ~(1u << u)));
        }
        return slot = best;
    };
    return rec(rec, n == 32 ? ~0u : (1u << n) - 1);
}

// Number of perfect matchings via DP on the lowest uncovered vertex.
// Parallel edges count as distinct matchings, so multiplicities multiply.
inline long long perfect_matching_count(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 1)
        return 0;
    std::vector<std::vector<long long>> mult(static_cast<std::size_t>(n),
                                             std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (const auto& e : g.edges()) {
        mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += 1;
        mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += 1;
    }
    std::map<std::uint32_t, long long> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> long long {
        if (mask == 0)
            return 1;
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        int v = std::countr_zero(mask);
        long long total = 0;
        for (int u = v + 1; u < n; ++u)
            if ((mask >> u & 1) && mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0)
                total += mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] *
                         self(self, mask & ~(1u << v) & ~(1u << u));
        memo[mask] = total;
        return total;
    };
    return rec(rec, n == 32 ? ~0u : (1u << n) - 1);
}

// Minimum boundary size over all odd-cardinality vertex subsets.
inline int min_odd_cut_size(const Multigraph& g) {
    const int n = g.vertex_count();
    int best = -1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2 == 0)
            continue;
        int cut = 0;
        for (const auto& e : g.edges())
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1))
                ++cut;
        if (best < 0 || cut < best)
            best = cut;
    }
    return best;
}

// Minimum s-t cut value by scanning all sides containing s but not t.
inline int min_cut_value(const Multigraph& g, Vertex s, Vertex t) {
    const int n = g.vertex_count();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> s & 1) || (mask >> t & 1))
            continue;
        int cut = 0;
        for (const auto& e : g.edges())
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1))
                ++cut;
        if (best < 0 || cut < best)
            best = cut;
    }
    return best;
}

inline int component_count(const Multigraph& g) {
    return static_cast<int>(
        rgraph::odd_components(g, rgraph::VertexSet::empty_set(g.vertex_count())).components.size());
}

// An edge is a bridge iff deleting it increases the component count.
// Deletion-based on purpose: no shared code with any library cut machinery.
inline bool has_bridge(const Multigraph& g) {
    int base = component_count(g);
    for (const auto& e : g.edges()) {
        auto del = rgraph::delete_edges(g, {e.id});
        if (component_count(del.graph) > base)
            return true;
    }
    return false;
}

inline Multigraph induced_subgraph(const Multigraph& g, const std::vector<Vertex>& members) {
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : g.edges())
        if (index[static_cast<std::size_t>(e.u)] >= 0 && index[static_cast<std::size_t>(e.v)] >= 0)
            edges.push_back({index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]});
    return Multigraph(static_cast<int>(members.size()), edges);
}

// Deterministic random multigraph: n vertices, m edges drawn uniformly from
// all non-loop pairs (repetition allowed).
inline Multigraph random_multigraph(std::mt19937& rng, int n, int m) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    while (static_cast<int>(endpoints.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u != v)
            endpoints.push_back({u, v});
    }
    return Multigraph(n, endpoints);
}

// Random connected multigraph: a random spanning tree plus extra edges.
inline Multigraph random_connected_multigraph(std::mt19937& rng, int n, int extra) {
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> earlier(0, v - 1);
        endpoints.push_back({earlier(rng), v});
    }
    int added = 0;
    while (added < extra) {
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        endpoints.push_back({u, v});
        ++added;
    }
    return Multigraph(n, endpoints);
}

} // namespace oracles
