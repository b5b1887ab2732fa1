#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rgraph/errors.hpp"

namespace rgraph {

using Vertex = int;
using EdgeId = int;

// Parallel edges carry distinct ids; multiplicity is derived, never stored.
struct Edge {
    EdgeId id;
    Vertex u, v; // normalized u < v (unordered pair semantics)
};

class Multigraph {
public:
    Multigraph() = default;

    Multigraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& endpoints)
        : n_(vertex_count) {
        if (vertex_count < 0)
            fail(ErrorKind::InvalidArgument, "negative vertex count");
        edges_.reserve(endpoints.size());
        for (std::size_t i = 0; i < endpoints.size(); ++i) {
            auto [u, v] = endpoints[i];
            if (u == v)
                fail(ErrorKind::InvalidArgument,
                     "loop at vertex " + std::to_string(u) + " (edge " + std::to_string(i) + ")");
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                fail(ErrorKind::InvalidArgument,
                     "edge " + std::to_string(i) + " endpoint out of range");
            if (u > v)
                std::swap(u, v);
            edges_.push_back(Edge{static_cast<EdgeId>(i), u, v});
        }
        incident_.assign(n_, {});
        for (const Edge& e : edges_) {
            incident_[e.u].push_back({e.v, e.id});
            incident_[e.v].push_back({e.u, e.id});
        }
        // incidence sorted by edge id; edges were appended in id order already
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId id) const {
        if (id < 0 || id >= edge_count())
            fail(ErrorKind::InvalidArgument, "unknown edge id " + std::to_string(id));
        return edges_[static_cast<std::size_t>(id)];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbor, edge id) pairs in ascending edge-id order; parallel edges appear once each.
    const std::vector<std::pair<Vertex, EdgeId>>& incident(Vertex v) const {
        check_vertex(v);
        return incident_[static_cast<std::size_t>(v)];
    }

    // Degree counting parallel edges.
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    bool operator==(const Multigraph& other) const {
        if (n_ != other.n_ || edges_.size() != other.edges_.size())
            return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v)
                return false;
        return true;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            fail(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> incident_;
};

// A subset of the vertices of a specific graph (universe size n).
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(int universe, std::vector<Vertex> members) : universe_(universe) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        in_.assign(static_cast<std::size_t>(universe), false);
        for (Vertex v : members) {
            if (v < 0 || v >= universe)
                fail(ErrorKind::InvalidArgument,
                     "set member " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe));
            in_[static_cast<std::size_t>(v)] = true;
        }
        members_ = std::move(members);
    }

    static VertexSet empty_set(int universe) { return VertexSet(universe, {}); }

    static VertexSet full_set(int universe) {
        std::vector<Vertex> all(static_cast<std::size_t>(universe));
        for (int i = 0; i < universe; ++i)
            all[static_cast<std::size_t>(i)] = i;
        return VertexSet(universe, std::move(all));
    }

    static VertexSet from_mask(int universe, std::uint64_t mask) {
        std::vector<Vertex> members;
        for (int i = 0; i < universe; ++i)
            if (mask >> i & 1)
                members.push_back(i);
        return VertexSet(universe, std::move(members));
    }

    int universe() const { return universe_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && in_[static_cast<std::size_t>(v)];
    }
    const std::vector<Vertex>& members() const { return members_; }

    bool odd() const { return size() % 2 == 1; }
    // |X| not in {1, n-1}
    bool nontrivial() const { return size() != 1 && size() != universe_ - 1; }

    VertexSet complement() const {
        std::vector<Vertex> rest;
        rest.reserve(static_cast<std::size_t>(universe_ - size()));
        for (int v = 0; v < universe_; ++v)
            if (!in_[static_cast<std::size_t>(v)])
                rest.push_back(v);
        return VertexSet(universe_, std::move(rest));
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (Vertex v : members_)
            m |= std::uint64_t{1} << v;
        return m;
    }

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && members_ == other.members_;
    }
    // lexicographic on the sorted member lists
    bool operator<(const VertexSet& other) const { return members_ < other.members_; }

private:
    int universe_ = 0;
    std::vector<bool> in_;
    std::vector<Vertex> members_;
};

struct CutEdges {
    std::vector<EdgeId> boundary; // ascending edge ids
    VertexSet side;
    int size() const { return static_cast<int>(boundary.size()); }
};

// Edges with exactly one endpoint in X.
inline CutEdges boundary(const Multigraph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count())
        fail(ErrorKind::InvalidArgument, "vertex set universe does not match graph");
    CutEdges cut;
    cut.side = x;
    for (const Edge& e : g.edges())
        if (x.contains(e.u) != x.contains(e.v))
            cut.boundary.push_back(e.id);
    return cut;
}

struct Bipartition {
    VertexSet left, right; // left contains the lowest vertex of each component
};

// 2-coloring if one exists. Works per component; color 0 goes to the lowest
// unvisited vertex of each component.
inline std::optional<Bipartition> is_bipartite(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1)
            continue;
        color[static_cast<std::size_t>(start)] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, id] : g.incident(v)) {
                (void)id;
                int& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Vertex> left, right;
    for (Vertex v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? left : right).push_back(v);
    return Bipartition{VertexSet(n, std::move(left)), VertexSet(n, std::move(right))};
}

struct OddComponents {
    int count = 0;                    // number of odd-size components
    std::vector<VertexSet> components; // all components of G - removed, by lowest vertex
};

// Connected components of G - removed; count is the number of odd-cardinality ones.
inline OddComponents odd_components(const Multigraph& g, const VertexSet& removed) {
    if (removed.universe() != g.vertex_count())
        fail(ErrorKind::InvalidArgument, "vertex set universe does not match graph");
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    OddComponents result;
    std::vector<Vertex> stack, comp;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)] || removed.contains(start))
            continue;
        comp.clear();
        seen[static_cast<std::size_t>(start)] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [w, id] : g.incident(v)) {
                (void)id;
                if (!seen[static_cast<std::size_t>(w)] && !removed.contains(w)) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        if (comp.size() % 2 == 1)
            ++result.count;
        result.components.emplace_back(n, comp);
    }
    return result;
}

struct DeletionResult {
    Multigraph graph;
    std::vector<EdgeId> new_id_of; // old edge id -> new id, -1 for deleted edges
};

// Same vertices, listed edges removed, remaining edges re-indexed contiguously.
inline DeletionResult delete_edges(const Multigraph& g, const std::vector<EdgeId>& doomed) {
    std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
    for (EdgeId id : doomed) {
        if (id < 0 || id >= g.edge_count())
            fail(ErrorKind::InvalidArgument, "unknown edge id " + std::to_string(id));
        drop[static_cast<std::size_t>(id)] = true;
    }
    std::vector<std::pair<Vertex, Vertex>> kept;
    std::vector<EdgeId> new_id(static_cast<std::size_t>(g.edge_count()), -1);
    for (const Edge& e : g.edges()) {
        if (drop[static_cast<std::size_t>(e.id)])
            continue;
        new_id[static_cast<std::size_t>(e.id)] = static_cast<EdgeId>(kept.size());
        kept.push_back({e.u, e.v});
    }
    return DeletionResult{Multigraph(g.vertex_count(), kept), std::move(new_id)};
}

inline bool is_connected(const Multigraph& g) {
    if (g.vertex_count() == 0)
        return false;
    auto oc = odd_components(g, VertexSet::empty_set(g.vertex_count()));
    return oc.components.size() == 1;
}

// True iff n > k and no vertex set of size < k disconnects G. Parallel edges
// cannot raise vertex connectivity, so multiplicities are irrelevant here.
inline bool vertex_connectivity_at_least(const Multigraph& g, int k) {
    if (k < 1)
        fail(ErrorKind::InvalidArgument, "connectivity threshold must be positive");
    const int n = g.vertex_count();
    if (n <= k)
        return false;
    // subsets of size 0..k-1, smallest first
    std::vector<Vertex> subset;
    auto disconnects = [&](const std::vector<Vertex>& cut) {
        auto oc = odd_components(g, VertexSet(n, cut));
        return oc.components.size() >= 2;
    };
    std::vector<int> idx;
    for (int size = 0; size < k; ++size) {
        idx.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            subset.assign(idx.begin(), idx.end());
            if (disconnects(subset))
                return false;
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return true;
}

namespace detail {

// Bitmask adjacency for the exhaustive subset scans (n <= 64).
struct MaskGraph {
    int n;
    std::vector<std::uint64_t> nbr; // neighbor mask per vertex

    explicit MaskGraph(const Multigraph& g) : n(g.vertex_count()) {
        if (n > 64)
            fail(ErrorKind::ResourceLimit, "mask scan requires at most 64 vertices");
        nbr.assign(static_cast<std::size_t>(n), 0);
        for (const Edge& e : g.edges()) {
            nbr[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
            nbr[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
    }

    // number of odd components of G - removed
    int odd_component_count(std::uint64_t removed) const {
        std::uint64_t alive = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~removed;
        int odd = 0;
        while (alive) {
            std::uint64_t comp = alive & (~alive + 1); // lowest alive bit
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t reached = 0;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    reached |= nbr[static_cast<std::size_t>(v)];
                }
                frontier = reached & alive & ~comp;
                comp |= frontier;
            }
            if (std::popcount(comp) % 2 == 1)
                ++odd;
            alive &= ~comp;
        }
        return odd;
    }

    int boundary_size(const Multigraph& g, std::uint64_t side) const {
        int count = 0;
        for (const Edge& e : g.edges())
            if (((side >> e.u) & 1) != ((side >> e.v) & 1))
                ++count;
        return count;
    }
};

} // namespace detail

} // namespace rgraph
