#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "rgraph/multigraph.hpp"

namespace rgraph {

struct Matching {
    std::vector<EdgeId> edges; // ascending ids, pairwise vertex-disjoint
    int size() const { return static_cast<int>(edges.size()); }
};

struct PerfectMatching {
    std::vector<EdgeId> edges; // ascending ids, covers every vertex exactly once
    int size() const { return static_cast<int>(edges.size()); }
    bool operator==(const PerfectMatching& other) const { return edges == other.edges; }
};

inline bool is_valid_matching(const Multigraph& g, const std::vector<EdgeId>& edges) {
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
    for (EdgeId id : edges) {
        if (id < 0 || id >= g.edge_count())
            return false;
        const Edge& e = g.edge(id);
        if (covered[static_cast<std::size_t>(e.u)] || covered[static_cast<std::size_t>(e.v)])
            return false;
        covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = true;
    }
    return true;
}

inline bool is_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& edges) {
    return is_valid_matching(g, edges) &&
           2 * static_cast<int>(edges.size()) == g.vertex_count();
}

namespace detail {

// Edmonds' blossom-shrinking maximum matching on the simplified graph
// (one representative per vertex pair; matchings never need two parallel
// edges). An optional alive mask restricts the search to an induced subgraph.
class BlossomMatcher {
public:
    BlossomMatcher(const Multigraph& g, const std::vector<bool>* alive = nullptr)
        : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_)) {
        std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n_),
                                            std::vector<bool>(static_cast<std::size_t>(n_), false));
        for (const Edge& e : g.edges()) {
            if (alive && !((*alive)[static_cast<std::size_t>(e.u)] &&
                           (*alive)[static_cast<std::size_t>(e.v)]))
                continue;
            if (seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)])
                continue;
            seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
            seen[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        alive_.assign(static_cast<std::size_t>(n_), true);
        if (alive)
            alive_ = *alive;
        match_.assign(static_cast<std::size_t>(n_), -1);
        p_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        used_.assign(static_cast<std::size_t>(n_), false);
        blossom_.assign(static_cast<std::size_t>(n_), false);
    }

    // mate array; -1 for unmatched or dead vertices
    const std::vector<int>& run() {
        for (int v = 0; v < n_; ++v) {
            if (!alive_[static_cast<std::size_t>(v)] || match_[static_cast<std::size_t>(v)] != -1)
                continue;
            int leaf = find_path(v);
            if (leaf != -1)
                augment(leaf);
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> anc(static_cast<std::size_t>(n_), false);
        int u = a;
        while (true) {
            u = base_[static_cast<std::size_t>(u)];
            anc[static_cast<std::size_t>(u)] = true;
            if (match_[static_cast<std::size_t>(u)] == -1)
                break;
            u = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])];
        }
        int v = b;
        while (true) {
            v = base_[static_cast<std::size_t>(v)];
            if (anc[static_cast<std::size_t>(v)])
                return v;
            v = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int mv = match_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
            p_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = p_[static_cast<std::size_t>(mv)];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < n_; ++i)
            base_[static_cast<std::size_t>(i)] = i;
        used_[static_cast<std::size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    // odd cycle: shrink the blossom
                    int cur_base = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (p_[static_cast<std::size_t>(to)] == -1) {
                    p_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1)
                        return to;
                    int mto = match_[static_cast<std::size_t>(to)];
                    used_[static_cast<std::size_t>(mto)] = true;
                    q.push(mto);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p_[static_cast<std::size_t>(v)];
            int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> alive_;
    std::vector<int> match_, p_, base_;
    std::vector<bool> used_, blossom_;
};

inline std::vector<int> max_matching_mates(const Multigraph& g,
                                           const std::vector<bool>* alive = nullptr) {
    BlossomMatcher matcher(g, alive);
    return matcher.run();
}

inline bool subgraph_has_perfect_matching(const Multigraph& g, const std::vector<bool>& alive) {
    auto mates = max_matching_mates(g, &alive);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[static_cast<std::size_t>(v)] && mates[static_cast<std::size_t>(v)] == -1)
            return false;
    return true;
}

// lowest edge id joining u and v
inline EdgeId representative_edge(const Multigraph& g, Vertex u, Vertex v) {
    for (auto [w, id] : g.incident(u))
        if (w == v)
            return id;
    fail(ErrorKind::Integrity, "no edge between matched vertices");
}

} // namespace detail

// Maximum-cardinality matching; exact on general multigraphs. Matched pairs
// report the lowest-id edge joining them.
inline Matching maximum_matching(const Multigraph& g) {
    auto mates = detail::max_matching_mates(g);
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = mates[static_cast<std::size_t>(v)];
        if (w > v)
            m.edges.push_back(detail::representative_edge(g, v, w));
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

inline bool has_perfect_matching(const Multigraph& g) {
    return 2 * maximum_matching(g).size() == g.vertex_count();
}

// Exhaustive scan for X with theta(G-X) > |X|; agreement with
// has_perfect_matching is Tutte's theorem and is tested as an invariant.
inline std::optional<VertexSet> tutte_violator(const Multigraph& g, int bound = 20) {
    const int n = g.vertex_count();
    if (n > bound)
        fail(ErrorKind::ResourceLimit,
             "tutte_violator: " + std::to_string(n) + " vertices exceeds bound " +
                 std::to_string(bound));
    detail::MaskGraph mg(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (mg.odd_component_count(mask) > std::popcount(mask))
            return VertexSet::from_mask(n, mask);
    return std::nullopt;
}

struct PMEnumeration {
    std::vector<PerfectMatching> matchings;
    bool truncated = false; // true when more matchings exist beyond the cap
};

// All perfect matchings in deterministic order: branch on the lowest-index
// uncovered vertex, incident edges in ascending id order.
inline PMEnumeration enumerate_perfect_matchings(const Multigraph& g, std::size_t cap = 1000000) {
    PMEnumeration out;
    const int n = g.vertex_count();
    if (n % 2 == 1)
        return out;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    std::vector<EdgeId> chosen;
    bool aborted = false;

    auto rec = [&](auto&& self, int uncovered_from) -> void {
        if (aborted)
            return;
        int v = uncovered_from;
        while (v < n && covered[static_cast<std::size_t>(v)])
            ++v;
        if (v == n) {
            if (out.matchings.size() == cap) {
                out.truncated = true;
                aborted = true;
                return;
            }
            out.matchings.push_back(PerfectMatching{chosen});
            std::sort(out.matchings.back().edges.begin(), out.matchings.back().edges.end());
            return;
        }
        covered[static_cast<std::size_t>(v)] = true;
        for (auto [w, id] : g.incident(v)) {
            if (covered[static_cast<std::size_t>(w)])
                continue;
            covered[static_cast<std::size_t>(w)] = true;
            chosen.push_back(id);
            self(self, v + 1);
            chosen.pop_back();
            covered[static_cast<std::size_t>(w)] = false;
            if (aborted)
                break;
        }
        covered[static_cast<std::size_t>(v)] = false;
    };
    rec(rec, 0);
    return out;
}

// Every edge lies in some perfect matching. An edge uv lies in one iff
// G - u - v has a perfect matching.
inline bool is_matching_covered(const Multigraph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() > 0 && (n % 2 == 1 || !has_perfect_matching(g)))
        return false;
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<std::pair<Vertex, Vertex>> checked;
    for (const Edge& e : g.edges()) {
        if (std::find(checked.begin(), checked.end(), std::make_pair(e.u, e.v)) != checked.end())
            continue;
        checked.push_back({e.u, e.v});
        alive[static_cast<std::size_t>(e.u)] = alive[static_cast<std::size_t>(e.v)] = false;
        bool ok = detail::subgraph_has_perfect_matching(g, alive);
        alive[static_cast<std::size_t>(e.u)] = alive[static_cast<std::size_t>(e.v)] = true;
        if (!ok)
            return false;
    }
    return true;
}

inline bool is_factor_critical(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0)
        return false;
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v) {
        alive[static_cast<std::size_t>(v)] = false;
        bool ok = detail::subgraph_has_perfect_matching(g, alive);
        alive[static_cast<std::size_t>(v)] = true;
        if (!ok)
            return false;
    }
    return true;
}

inline bool is_bicritical(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 1 || n < 4)
        return false;
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            alive[static_cast<std::size_t>(u)] = alive[static_cast<std::size_t>(v)] = false;
            bool ok = detail::subgraph_has_perfect_matching(g, alive);
            alive[static_cast<std::size_t>(u)] = alive[static_cast<std::size_t>(v)] = true;
            if (!ok)
                return false;
        }
    }
    return true;
}

struct Barrier {
    VertexSet set;            // S with theta(G-S) = |S|
    OddComponents deficiency; // components of G-S; count == |S|
};

// Maximal barrier containing `anchor`, certified by an exhaustive scan over
// all supersets. Ties between incomparable maximal barriers go to the
// lexicographically smallest member list.
inline Barrier find_maximal_barrier(const Multigraph& g, Vertex anchor, int bound = 20) {
    const int n = g.vertex_count();
    g.check_vertex(anchor);
    if (n > bound)
        fail(ErrorKind::ResourceLimit,
             "find_maximal_barrier: " + std::to_string(n) + " vertices exceeds bound " +
                 std::to_string(bound));
    if (!has_perfect_matching(g))
        fail(ErrorKind::Precondition, "find_maximal_barrier requires a graph with a perfect matching");

    detail::MaskGraph mg(g);
    const std::uint64_t anchor_bit = std::uint64_t{1} << anchor;
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::vector<std::uint64_t> barriers;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (!(mask & anchor_bit))
            continue;
        if (mg.odd_component_count(mask) == std::popcount(mask))
            barriers.push_back(mask);
    }
    // {anchor} is always a barrier in a graph with a perfect matching
    std::sort(barriers.begin(), barriers.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t mask : barriers) {
        bool dominated = false;
        for (std::uint64_t big : maximal)
            if ((mask & big) == mask) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(mask);
    }
    VertexSet best;
    bool have = false;
    for (std::uint64_t mask : maximal) {
        VertexSet s = VertexSet::from_mask(n, mask);
        if (!have || s < best) {
            best = s;
            have = true;
        }
    }
    if (!have)
        fail(ErrorKind::Integrity, "no barrier found despite a perfect matching");
    return Barrier{best, odd_components(g, best)};
}

namespace detail {

// The vertices u for which G - anchor - u has no perfect matching, plus the
// anchor itself. In a matching covered graph this is exactly the maximal
// barrier containing anchor (the canonical partition class); callers verify
// anything they derive from it.
inline std::vector<Vertex> pm_blocking_class(const Multigraph& g, Vertex anchor) {
    const int n = g.vertex_count();
    std::vector<Vertex> cls{anchor};
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    alive[static_cast<std::size_t>(anchor)] = false;
    for (Vertex u = 0; u < n; ++u) {
        if (u == anchor)
            continue;
        alive[static_cast<std::size_t>(u)] = false;
        if (!subgraph_has_perfect_matching(g, alive))
            cls.push_back(u);
        alive[static_cast<std::size_t>(u)] = true;
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

} // namespace detail

} // namespace rgraph
