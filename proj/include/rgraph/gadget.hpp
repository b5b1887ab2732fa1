#pragma once

#include <optional>
#include <vector>

#include "rgraph/covers.hpp"
#include "rgraph/matching.hpp"
#include "rgraph/multigraph.hpp"
#include "rgraph/oddcut.hpp"

namespace rgraph {

struct UnslicabilityResult {
    std::optional<bool> unslicable;         // empty when the enumeration truncated
    std::optional<PerfectMatching> witness; // a slicing matching when unslicable == false
};

// H is unslicable iff no perfect matching F leaves an (r-1)-graph behind in
// H - F. False comes with the slicing matching as witness.
inline UnslicabilityResult is_unslicable(const Multigraph& h, int r, std::size_t pm_cap = 1000000) {
    auto check = is_r_graph(h, r);
    if (!check.ok)
        fail(ErrorKind::Precondition, "is_unslicable requires an r-graph: " + check.reason);
    auto enumeration = enumerate_perfect_matchings(h, pm_cap);
    for (const auto& pm : enumeration.matchings) {
        auto rest = delete_edges(h, pm.edges);
        if (is_r_graph(rest.graph, r - 1).ok)
            return {false, pm};
    }
    if (enumeration.truncated)
        return {std::nullopt, std::nullopt};
    return {true, std::nullopt};
}

struct GadgetResult {
    Multigraph graph;                         // G, (2k+1)-regular
    Multigraph source;                        // H, kept for verification
    PerfectMatching old_edges;                // F: the images of H's edges
    std::vector<std::vector<Vertex>> cycle_of; // H-vertex -> its r cycle vertices in order
    std::vector<EdgeId> old_edge_of;          // H-edge id -> G-edge id
    int k = 0;
};

// Replace every vertex v of H by a cycle C_v of length r = 2k+1 whose edges
// have multiplicity k; the j-th incident H-edge of v (by ascending edge id)
// attaches to cycle position j. For H-vertex i the cycle vertices are
// r*i .. r*i+r-1; cycle edges get consecutive ids per position pair.
inline GadgetResult build_gadget(const Multigraph& h, int k) {
    if (k < 1)
        fail(ErrorKind::InvalidArgument, "k must be positive");
    const int r = 2 * k + 1;
    const int nh = h.vertex_count();
    for (Vertex v = 0; v < nh; ++v)
        if (h.degree(v) != r)
            fail(ErrorKind::Construction,
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(h.degree(v)) +
                     "; the construction needs a " + std::to_string(r) + "-regular graph");

    GadgetResult out;
    out.k = k;
    out.source = h;
    std::vector<std::pair<Vertex, Vertex>> endpoints;

    // attachment position of each H-edge at each endpoint
    std::vector<std::pair<int, int>> position(static_cast<std::size_t>(h.edge_count()), {-1, -1});
    for (Vertex v = 0; v < nh; ++v) {
        const auto& inc = h.incident(v); // ascending edge id
        for (std::size_t j = 0; j < inc.size(); ++j) {
            EdgeId id = inc[j].second;
            if (h.edge(id).u == v && position[static_cast<std::size_t>(id)].first == -1)
                position[static_cast<std::size_t>(id)].first = static_cast<int>(j);
            else
                position[static_cast<std::size_t>(id)].second = static_cast<int>(j);
        }
    }
    for (const Edge& e : h.edges()) {
        auto [pu, pv] = position[static_cast<std::size_t>(e.id)];
        endpoints.push_back({r * e.u + pu, r * e.v + pv});
        out.old_edge_of.push_back(e.id); // old edges keep their ids: they come first
        out.old_edges.edges.push_back(e.id);
    }
    for (Vertex v = 0; v < nh; ++v) {
        out.cycle_of.push_back({});
        for (int pos = 0; pos < r; ++pos)
            out.cycle_of.back().push_back(r * v + pos);
        for (int pos = 0; pos < r; ++pos)
            for (int copy = 0; copy < k; ++copy)
                endpoints.push_back({r * v + pos, r * v + (pos + 1) % r});
    }
    out.graph = Multigraph(r * nh, endpoints);
    if (!is_perfect_matching(out.graph, out.old_edges.edges))
        fail(ErrorKind::Integrity, "old edges do not form a perfect matching of the gadget");
    return out;
}

// Runs the odd-cut r-graph check on the gadget and, when it passes, asserts
// the two facts the construction relies on: the source graph of a valid
// gadget has no cut vertex (it is an r-graph, hence 2-connected), and a
// minimum odd cut that uses only old edges projects to an odd cut of H of
// the same size.
inline bool verify_gadget_is_rgraph(const GadgetResult& res, int k) {
    const int r = 2 * k + 1;
    auto check = is_r_graph(res.graph, r);
    if (!check.ok)
        return false;

    if (is_r_graph(res.source, r).ok) {
        if (!vertex_connectivity_at_least(res.source, 2))
            fail(ErrorKind::Integrity, "source r-graph is not 2-vertex-connected");
    }

    auto cut = min_odd_cut(res.graph);
    std::vector<bool> is_old(static_cast<std::size_t>(res.graph.edge_count()), false);
    for (EdgeId id : res.old_edges.edges)
        is_old[static_cast<std::size_t>(id)] = true;
    bool only_old = true;
    for (EdgeId id : boundary(res.graph, cut.side).boundary)
        if (!is_old[static_cast<std::size_t>(id)])
            only_old = false;
    if (only_old) {
        // every cycle lies entirely inside or outside the cut side
        std::vector<Vertex> projected;
        for (std::size_t v = 0; v < res.cycle_of.size(); ++v) {
            int inside = 0;
            for (Vertex gv : res.cycle_of[v])
                if (cut.side.contains(gv))
                    ++inside;
            if (inside != 0 && inside != static_cast<int>(res.cycle_of[v].size()))
                fail(ErrorKind::Integrity, "old-edge-only cut splits a vertex cycle");
            if (inside > 0)
                projected.push_back(static_cast<Vertex>(v));
        }
        VertexSet shadow(res.source.vertex_count(), projected);
        if (!shadow.odd())
            fail(ErrorKind::Integrity, "old-edge-only odd cut projects to an even set");
        if (boundary(res.source, shadow).size() != cut.size)
            fail(ErrorKind::Integrity, "projected cut size changed");
    }
    return true;
}

struct FixedFVerification {
    SearchStatus search_status = SearchStatus::Indeterminate;
    std::optional<MatchingFamily> family; // the counterexample family when one exists
    bool canonical_f = true;              // F equals the construction's old edges
    std::uint64_t nodes = 0;

    // theorem confirmed: no 2k distinct matchings avoid triple meetings on F
    bool no_family() const { return search_status == SearchStatus::Refuted; }
};

// Exhaustive check that no family of 2k distinct perfect matchings
// F_1..F_2k has F ∩ F_i ∩ F_j empty for all pairs, where F is the gadget's
// distinguished matching.
inline FixedFVerification verify_no_fixed_f_family(const GadgetResult& res, int k,
                                                   std::uint64_t budget = 100000000,
                                                   std::size_t pm_cap = 1000000) {
    FixedFVerification out;
    std::vector<EdgeId> canonical = res.old_edge_of;
    std::sort(canonical.begin(), canonical.end());
    out.canonical_f = canonical == res.old_edges.edges;

    auto search = fixed_f_family(res.graph, res.old_edges, 2 * k, budget, pm_cap);
    out.search_status = search.status;
    out.nodes = search.nodes;
    if (search.status == SearchStatus::Found)
        out.family = std::move(search.witness);
    return out;
}

struct ProjectedTrace {
    std::vector<EdgeId> h_edges;     // H-edges whose images lie in M
    std::vector<int> boundary_counts; // per H-vertex: |M ∩ boundary(C_v)|, always odd
};

// Pull a perfect matching of the gadget back to H: the old edges it uses,
// plus how often it crosses each vertex cycle.
inline ProjectedTrace project_matching(const GadgetResult& res, const PerfectMatching& m) {
    if (!is_perfect_matching(res.graph, m.edges))
        fail(ErrorKind::InvalidArgument, "not a perfect matching of the gadget");
    std::vector<bool> in_m(static_cast<std::size_t>(res.graph.edge_count()), false);
    for (EdgeId id : m.edges)
        in_m[static_cast<std::size_t>(id)] = true;

    ProjectedTrace out;
    for (EdgeId h = 0; h < res.source.edge_count(); ++h)
        if (in_m[static_cast<std::size_t>(res.old_edge_of[static_cast<std::size_t>(h)])])
            out.h_edges.push_back(h);
    for (Vertex v = 0; v < res.source.vertex_count(); ++v) {
        int count = 0;
        for (auto [w, h] : res.source.incident(v)) {
            (void)w;
            if (in_m[static_cast<std::size_t>(res.old_edge_of[static_cast<std::size_t>(h)])])
                ++count;
        }
        if (count % 2 == 0)
            fail(ErrorKind::Integrity, "even crossing count on a vertex cycle boundary");
        out.boundary_counts.push_back(count);
    }
    return out;
}

} // namespace rgraph
