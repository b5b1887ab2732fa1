#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rgraph/matching.hpp"
#include "rgraph/multigraph.hpp"
#include "rgraph/oddcut.hpp"

namespace rgraph {

// Three-valued search outcome: a timed-out search must never be confused
// with an exhaustive refutation.
enum class SearchStatus { Found, Refuted, Indeterminate };

inline const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Refuted: return "refuted";
    case SearchStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<T> witness;  // present iff status == Found
    std::uint64_t nodes = 0;   // search nodes spent
};

struct EdgeColoring {
    int colors = 0;
    std::vector<int> color; // per edge id, in [0, colors)
};

inline bool is_proper_edge_coloring(const Multigraph& g, const EdgeColoring& ec) {
    if (static_cast<int>(ec.color.size()) != g.edge_count())
        return false;
    for (int c : ec.color)
        if (c < 0 || c >= ec.colors)
            return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t used = 0;
        for (auto [w, id] : g.incident(v)) {
            (void)w;
            std::uint64_t bit = std::uint64_t{1} << ec.color[static_cast<std::size_t>(id)];
            if (used & bit)
                return false;
            used |= bit;
        }
    }
    return true;
}

// Exact backtracking edge coloring: branch on the edge with the fewest
// feasible colors (ties by edge id), colors tried ascending, edge 0 pinned
// to color 0 to break color symmetry.
inline SearchResult<EdgeColoring> proper_edge_coloring(const Multigraph& g, int colors,
                                                       std::uint64_t budget = 100000000) {
    if (colors < 1 || colors > 62)
        fail(ErrorKind::InvalidArgument, "color count must be between 1 and 62");
    SearchResult<EdgeColoring> out;
    const int m = g.edge_count();
    if (m == 0) {
        out.status = SearchStatus::Found;
        out.witness = EdgeColoring{colors, {}};
        return out;
    }
    const std::uint64_t full = (std::uint64_t{1} << colors) - 1;
    std::vector<std::uint64_t> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> assignment(static_cast<std::size_t>(m), -1);
    int colored = 0;
    bool exhausted_budget = false;

    auto assign = [&](EdgeId id, int c, int delta) {
        const Edge& e = g.edge(id);
        std::uint64_t bit = std::uint64_t{1} << c;
        if (delta > 0) {
            used[static_cast<std::size_t>(e.u)] |= bit;
            used[static_cast<std::size_t>(e.v)] |= bit;
            assignment[static_cast<std::size_t>(id)] = c;
            ++colored;
        } else {
            used[static_cast<std::size_t>(e.u)] &= ~bit;
            used[static_cast<std::size_t>(e.v)] &= ~bit;
            assignment[static_cast<std::size_t>(id)] = -1;
            --colored;
        }
    };

    auto feasible = [&](EdgeId id) {
        const Edge& e = g.edge(id);
        return full & ~(used[static_cast<std::size_t>(e.u)] | used[static_cast<std::size_t>(e.v)]);
    };

    auto rec = [&](auto&& self) -> bool {
        if (colored == m)
            return true;
        // fail-first: fewest feasible colors, ties by edge id
        EdgeId pick = -1;
        int best = colors + 1;
        for (EdgeId id = 0; id < m; ++id) {
            if (assignment[static_cast<std::size_t>(id)] != -1)
                continue;
            int options = std::popcount(feasible(id));
            if (options < best) {
                best = options;
                pick = id;
                if (best == 0)
                    break;
            }
        }
        if (best == 0)
            return false;
        std::uint64_t options = feasible(pick);
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            if (++out.nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            assign(pick, c, +1);
            if (self(self))
                return true;
            assign(pick, c, -1);
            if (exhausted_budget)
                return false;
        }
        return false;
    };

    // symmetry breaking: edge 0 takes color 0
    ++out.nodes;
    assign(0, 0, +1);
    bool found = rec(rec);
    if (found) {
        out.status = SearchStatus::Found;
        out.witness = EdgeColoring{colors, assignment};
        if (!is_proper_edge_coloring(g, *out.witness))
            fail(ErrorKind::Integrity, "search produced an improper coloring");
    } else {
        out.status = exhausted_budget ? SearchStatus::Indeterminate : SearchStatus::Refuted;
    }
    return out;
}

// Proper colorings of the two contraction sides share the cut through a color
// permutation: the r cut edges meet the contracted vertex in each side, so
// their colors are distinct there, and aligning them merges the colorings.
inline EdgeColoring glue_colorings(const ContractionPair& pair, const EdgeColoring& c1,
                                   const EdgeColoring& c2) {
    if (c1.colors != c2.colors)
        fail(ErrorKind::Integrity, "color counts differ between the two sides");
    if (!is_proper_edge_coloring(pair.g1, c1) || !is_proper_edge_coloring(pair.g2, c2))
        fail(ErrorKind::Integrity, "side coloring is not proper");
    const int colors = c1.colors;

    std::vector<int> perm(static_cast<std::size_t>(colors), -1); // color in c2 -> color in c1
    std::uint64_t taken_c1 = 0, taken_c2 = 0;
    for (const auto& img : pair.cut_map) {
        int col1 = c1.color[static_cast<std::size_t>(img.in_g1)];
        int col2 = c2.color[static_cast<std::size_t>(img.in_g2)];
        if (taken_c1 >> col1 & 1 || taken_c2 >> col2 & 1)
            fail(ErrorKind::Integrity, "cut edges repeat a color within one side");
        taken_c1 |= std::uint64_t{1} << col1;
        taken_c2 |= std::uint64_t{1} << col2;
        perm[static_cast<std::size_t>(col2)] = col1;
    }
    // extend to a full permutation: unused colors in ascending order
    for (int c2col = 0, c1col = 0; c2col < colors; ++c2col) {
        if (perm[static_cast<std::size_t>(c2col)] != -1)
            continue;
        while (taken_c1 >> c1col & 1)
            ++c1col;
        perm[static_cast<std::size_t>(c2col)] = c1col++;
    }

    EdgeColoring glued;
    glued.colors = colors;
    glued.color.assign(static_cast<std::size_t>(pair.original.edge_count()), -1);
    for (const Edge& e : pair.original.edges()) {
        EdgeId id1 = pair.g1_id_of[static_cast<std::size_t>(e.id)];
        if (id1 != -1) {
            glued.color[static_cast<std::size_t>(e.id)] = c1.color[static_cast<std::size_t>(id1)];
        } else {
            EdgeId id2 = pair.g2_id_of[static_cast<std::size_t>(e.id)];
            glued.color[static_cast<std::size_t>(e.id)] =
                perm[static_cast<std::size_t>(c2.color[static_cast<std::size_t>(id2)])];
        }
    }
    if (!is_proper_edge_coloring(pair.original, glued))
        fail(ErrorKind::Integrity, "glued coloring is not proper on the original graph");
    return glued;
}

struct FulkersonCover {
    std::vector<PerfectMatching> matchings; // 2r entries; repetition allowed
};

inline bool is_fulkerson_cover(const Multigraph& g, int r, const FulkersonCover& cover) {
    if (static_cast<int>(cover.matchings.size()) != 2 * r)
        return false;
    std::vector<int> count(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& pm : cover.matchings) {
        if (!is_perfect_matching(g, pm.edges))
            return false;
        for (EdgeId id : pm.edges)
            ++count[static_cast<std::size_t>(id)];
    }
    for (int c : count)
        if (c != 2)
            return false;
    return true;
}

// Exact-cover backtracking over the enumerated perfect matchings: pick the
// lowest under-covered edge, choose the multiset of matchings finishing it.
// Multisets are canonical (non-decreasing matching indices), so each cover
// is visited once.
inline SearchResult<FulkersonCover> fulkerson_cover(const Multigraph& g, int r,
                                                    std::uint64_t budget = 100000000,
                                                    std::size_t pm_cap = 1000000) {
    auto check = is_r_graph(g, r);
    if (!check.ok)
        fail(ErrorKind::Precondition, "fulkerson_cover requires an r-graph: " + check.reason);
    SearchResult<FulkersonCover> out;
    auto enumeration = enumerate_perfect_matchings(g, pm_cap);
    const auto& pms = enumeration.matchings;
    const int m = g.edge_count();

    std::vector<std::vector<int>> containing(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < pms.size(); ++i)
        for (EdgeId id : pms[i].edges)
            containing[static_cast<std::size_t>(id)].push_back(static_cast<int>(i));

    std::vector<int> cover_count(static_cast<std::size_t>(m), 0);
    std::vector<int> chosen;
    bool exhausted_budget = false;

    auto apply = [&](int pm_index, int delta) {
        for (EdgeId id : pms[static_cast<std::size_t>(pm_index)].edges)
            cover_count[static_cast<std::size_t>(id)] += delta;
    };
    auto fits = [&](int pm_index) {
        for (EdgeId id : pms[static_cast<std::size_t>(pm_index)].edges)
            if (cover_count[static_cast<std::size_t>(id)] >= 2)
                return false;
        return true;
    };

    auto rec = [&](auto&& self, int slots_left) -> bool {
        if (exhausted_budget)
            return false;
        EdgeId target = -1;
        for (EdgeId id = 0; id < m; ++id)
            if (cover_count[static_cast<std::size_t>(id)] < 2) {
                target = id;
                break;
            }
        if (target == -1)
            return slots_left == 0;
        int need = 2 - cover_count[static_cast<std::size_t>(target)];
        if (need > slots_left)
            return false;
        const auto& cands = containing[static_cast<std::size_t>(target)];
        if (need == 1) {
            for (int i : cands) {
                if (++out.nodes > budget) {
                    exhausted_budget = true;
                    return false;
                }
                if (!fits(i))
                    continue;
                apply(i, +1);
                chosen.push_back(i);
                if (self(self, slots_left - 1))
                    return true;
                chosen.pop_back();
                apply(i, -1);
            }
            return false;
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!fits(cands[a]))
                continue;
            apply(cands[a], +1);
            chosen.push_back(cands[a]);
            for (std::size_t b = a; b < cands.size(); ++b) {
                if (++out.nodes > budget) {
                    exhausted_budget = true;
                    break;
                }
                if (!fits(cands[b]))
                    continue;
                apply(cands[b], +1);
                chosen.push_back(cands[b]);
                if (self(self, slots_left - 2))
                    return true;
                chosen.pop_back();
                apply(cands[b], -1);
            }
            chosen.pop_back();
            apply(cands[a], -1);
            if (exhausted_budget)
                return false;
        }
        return false;
    };

    bool found = rec(rec, 2 * r);
    if (found) {
        FulkersonCover cover;
        std::sort(chosen.begin(), chosen.end());
        for (int i : chosen)
            cover.matchings.push_back(pms[static_cast<std::size_t>(i)]);
        out.status = SearchStatus::Found;
        out.witness = std::move(cover);
        if (!is_fulkerson_cover(g, r, *out.witness))
            fail(ErrorKind::Integrity, "search produced an invalid cover");
    } else if (exhausted_budget || enumeration.truncated) {
        out.status = SearchStatus::Indeterminate;
    } else {
        out.status = SearchStatus::Refuted;
    }
    return out;
}

// Each matching of a side cover holds exactly one cut edge (the contracted
// vertex has degree r and is matched once), and each cut edge appears in
// exactly two matchings per side. Pair them lowest-index-first across the
// sides and take unions through the cut map.
inline FulkersonCover glue_covers(const ContractionPair& pair, const FulkersonCover& c1,
                                  const FulkersonCover& c2) {
    const int r = static_cast<int>(pair.cut_map.size());
    if (c1.matchings.size() != c2.matchings.size() ||
        static_cast<int>(c1.matchings.size()) != 2 * r)
        fail(ErrorKind::Integrity, "cover sizes do not match the cut size");
    if (!is_fulkerson_cover(pair.g1, r, c1) || !is_fulkerson_cover(pair.g2, r, c2))
        fail(ErrorKind::Integrity, "side cover is invalid");

    std::vector<EdgeId> original_of_g1(static_cast<std::size_t>(pair.g1.edge_count()), -1);
    std::vector<EdgeId> original_of_g2(static_cast<std::size_t>(pair.g2.edge_count()), -1);
    for (EdgeId id = 0; id < pair.original.edge_count(); ++id) {
        if (pair.g1_id_of[static_cast<std::size_t>(id)] != -1)
            original_of_g1[static_cast<std::size_t>(pair.g1_id_of[static_cast<std::size_t>(id)])] = id;
        if (pair.g2_id_of[static_cast<std::size_t>(id)] != -1)
            original_of_g2[static_cast<std::size_t>(pair.g2_id_of[static_cast<std::size_t>(id)])] = id;
    }

    // locate, per cut edge, the two matchings containing it on each side
    auto slots_for = [&](const FulkersonCover& cover, EdgeId image) {
        std::vector<int> slots;
        for (std::size_t i = 0; i < cover.matchings.size(); ++i)
            for (EdgeId id : cover.matchings[i].edges)
                if (id == image)
                    slots.push_back(static_cast<int>(i));
        return slots;
    };
    auto count_cut_edges = [&](const PerfectMatching& pm, const std::vector<EdgeId>& original_of,
                               bool g1_side) {
        int cut = 0;
        for (EdgeId id : pm.edges) {
            EdgeId orig = original_of[static_cast<std::size_t>(id)];
            bool is_cut = false;
            for (const auto& img : pair.cut_map)
                if (img.original == orig && (g1_side ? img.in_g1 : img.in_g2) == id)
                    is_cut = true;
            if (is_cut)
                ++cut;
        }
        return cut;
    };
    for (const auto& pm : c1.matchings)
        if (count_cut_edges(pm, original_of_g1, true) != 1)
            fail(ErrorKind::Integrity, "a side matching does not contain exactly one cut edge");
    for (const auto& pm : c2.matchings)
        if (count_cut_edges(pm, original_of_g2, false) != 1)
            fail(ErrorKind::Integrity, "a side matching does not contain exactly one cut edge");

    FulkersonCover glued;
    for (const auto& img : pair.cut_map) {
        auto a = slots_for(c1, img.in_g1);
        auto b = slots_for(c2, img.in_g2);
        if (a.size() != 2 || b.size() != 2)
            fail(ErrorKind::Integrity, "cut edge not covered exactly twice on each side");
        for (int k = 0; k < 2; ++k) {
            std::vector<EdgeId> merged;
            for (EdgeId id : c1.matchings[static_cast<std::size_t>(a[static_cast<std::size_t>(k)])].edges)
                merged.push_back(original_of_g1[static_cast<std::size_t>(id)]);
            for (EdgeId id : c2.matchings[static_cast<std::size_t>(b[static_cast<std::size_t>(k)])].edges) {
                EdgeId orig = original_of_g2[static_cast<std::size_t>(id)];
                if (orig != img.original)
                    merged.push_back(orig);
            }
            std::sort(merged.begin(), merged.end());
            if (!is_perfect_matching(pair.original, merged))
                fail(ErrorKind::Integrity, "glued matching is not perfect on the original graph");
            glued.matchings.push_back(PerfectMatching{std::move(merged)});
        }
    }
    if (!is_fulkerson_cover(pair.original, r, glued))
        fail(ErrorKind::Integrity, "glued cover does not cover every edge exactly twice");
    return glued;
}

struct MatchingFamily {
    enum class Constraint { TripleEmpty, FixedFPairsEmpty };
    std::vector<PerfectMatching> matchings;
    Constraint tag = Constraint::TripleEmpty;
};

inline bool is_triple_empty_family(const Multigraph& g, const std::vector<PerfectMatching>& fam) {
    for (const auto& pm : fam)
        if (!is_perfect_matching(g, pm.edges))
            return false;
    std::vector<int> count(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            for (std::size_t k = j + 1; k < fam.size(); ++k) {
                std::fill(count.begin(), count.end(), 0);
                for (EdgeId id : fam[i].edges)
                    ++count[static_cast<std::size_t>(id)];
                for (EdgeId id : fam[j].edges)
                    ++count[static_cast<std::size_t>(id)];
                for (EdgeId id : fam[k].edges)
                    ++count[static_cast<std::size_t>(id)];
                for (int c : count)
                    if (c == 3)
                        return false;
            }
    return true;
}

inline bool is_fixed_f_family(const Multigraph& g, const PerfectMatching& fixed,
                              const std::vector<PerfectMatching>& fam) {
    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (EdgeId id : fixed.edges)
        in_f[static_cast<std::size_t>(id)] = true;
    for (const auto& pm : fam)
        if (!is_perfect_matching(g, pm.edges))
            return false;
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            std::vector<bool> in_i(static_cast<std::size_t>(g.edge_count()), false);
            for (EdgeId id : fam[i].edges)
                in_i[static_cast<std::size_t>(id)] = true;
            for (EdgeId id : fam[j].edges)
                if (in_f[static_cast<std::size_t>(id)] && in_i[static_cast<std::size_t>(id)])
                    return false;
        }
    return true;
}

namespace detail {

using EdgeBits = std::vector<std::uint64_t>;

inline EdgeBits edge_bits(int m, const std::vector<EdgeId>& edges) {
    EdgeBits bits(static_cast<std::size_t>((m + 63) / 64), 0);
    for (EdgeId id : edges)
        bits[static_cast<std::size_t>(id / 64)] |= std::uint64_t{1} << (id % 64);
    return bits;
}

inline bool bits_disjoint(const EdgeBits& a, const EdgeBits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i])
            return false;
    return true;
}

inline EdgeBits bits_and(const EdgeBits& a, const EdgeBits& b) {
    EdgeBits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] & b[i];
    return out;
}

inline bool bits_empty(const EdgeBits& a) {
    for (std::uint64_t w : a)
        if (w)
            return false;
    return true;
}

} // namespace detail

// t distinct perfect matchings, every three with empty intersection.
// Backtracking over ascending matching indices with incremental
// pair-intersection bookkeeping.
inline SearchResult<MatchingFamily> triple_empty_family(const Multigraph& g, int t,
                                                        std::uint64_t budget = 100000000,
                                                        std::size_t pm_cap = 1000000) {
    if (t < 3)
        fail(ErrorKind::InvalidArgument, "family size must be at least 3");
    SearchResult<MatchingFamily> out;
    auto enumeration = enumerate_perfect_matchings(g, pm_cap);
    const auto& pms = enumeration.matchings;
    if (pms.empty() && !enumeration.truncated)
        fail(ErrorKind::Precondition, "triple_empty_family requires perfect matchings");
    const int m = g.edge_count();

    std::vector<detail::EdgeBits> bits;
    bits.reserve(pms.size());
    for (const auto& pm : pms)
        bits.push_back(detail::edge_bits(m, pm.edges));

    std::vector<int> chosen;
    std::vector<detail::EdgeBits> pair_traces; // intersections of chosen pairs
    bool exhausted_budget = false;

    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == t)
            return true;
        int needed = t - static_cast<int>(chosen.size());
        for (int i = from; i + needed <= static_cast<int>(pms.size()); ++i) {
            if (++out.nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            // existing pair traces must avoid candidate i
            bool ok = true;
            for (const auto& trace : pair_traces)
                if (!detail::bits_disjoint(trace, bits[static_cast<std::size_t>(i)])) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            std::size_t added = 0;
            for (int j : chosen) {
                pair_traces.push_back(detail::bits_and(bits[static_cast<std::size_t>(j)],
                                                       bits[static_cast<std::size_t>(i)]));
                ++added;
            }
            chosen.push_back(i);
            if (self(self, i + 1))
                return true;
            chosen.pop_back();
            pair_traces.resize(pair_traces.size() - added);
            if (exhausted_budget)
                return false;
        }
        return false;
    };

    if (rec(rec, 0)) {
        MatchingFamily fam;
        fam.tag = MatchingFamily::Constraint::TripleEmpty;
        for (int i : chosen)
            fam.matchings.push_back(pms[static_cast<std::size_t>(i)]);
        if (!is_triple_empty_family(g, fam.matchings))
            fail(ErrorKind::Integrity, "search produced an invalid triple-empty family");
        out.status = SearchStatus::Found;
        out.witness = std::move(fam);
    } else if (exhausted_budget || enumeration.truncated) {
        out.status = SearchStatus::Indeterminate;
    } else {
        out.status = SearchStatus::Refuted;
    }
    return out;
}

// t distinct perfect matchings F_1..F_t with F ∩ F_i ∩ F_j always empty.
// Only the traces M ∩ F matter: bucket the matchings by trace, allow at most
// one matching per non-empty trace, any number with an empty trace, and
// search for pairwise-disjoint traces.
inline SearchResult<MatchingFamily> fixed_f_family(const Multigraph& g, const PerfectMatching& fixed,
                                                   int t, std::uint64_t budget = 100000000,
                                                   std::size_t pm_cap = 1000000) {
    if (t < 1)
        fail(ErrorKind::InvalidArgument, "family size must be positive");
    if (!is_perfect_matching(g, fixed.edges))
        fail(ErrorKind::Precondition, "fixed_f_family requires F to be a perfect matching");
    SearchResult<MatchingFamily> out;
    auto enumeration = enumerate_perfect_matchings(g, pm_cap);
    const auto& pms = enumeration.matchings;
    const int m = g.edge_count();

    std::vector<bool> in_f(static_cast<std::size_t>(m), false);
    for (EdgeId id : fixed.edges)
        in_f[static_cast<std::size_t>(id)] = true;

    // bucket by trace; buckets keep ascending matching indices
    std::map<std::vector<EdgeId>, std::vector<int>> buckets;
    for (std::size_t i = 0; i < pms.size(); ++i) {
        std::vector<EdgeId> trace;
        for (EdgeId id : pms[i].edges)
            if (in_f[static_cast<std::size_t>(id)])
                trace.push_back(id);
        buckets[trace].push_back(static_cast<int>(i));
    }

    std::vector<int> empty_bucket;
    struct TraceBucket {
        detail::EdgeBits bits;
        int lowest;
        std::vector<EdgeId> trace;
    };
    std::vector<TraceBucket> traced;
    for (const auto& [trace, indices] : buckets) {
        if (trace.empty())
            empty_bucket = indices;
        else
            traced.push_back({detail::edge_bits(m, trace), indices.front(), trace});
    }
    std::sort(traced.begin(), traced.end(),
              [](const TraceBucket& a, const TraceBucket& b) { return a.lowest < b.lowest; });

    const int from_empty = std::min<int>(t, static_cast<int>(empty_bucket.size()));
    const int target = t - from_empty; // disjoint non-empty traces still needed
    std::vector<int> chosen_buckets;
    bool exhausted_budget = false;

    auto rec = [&](auto&& self, int from, detail::EdgeBits used) -> bool {
        if (static_cast<int>(chosen_buckets.size()) == target)
            return true;
        int needed = target - static_cast<int>(chosen_buckets.size());
        for (int i = from; i + needed <= static_cast<int>(traced.size()); ++i) {
            if (++out.nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            if (!detail::bits_disjoint(used, traced[static_cast<std::size_t>(i)].bits))
                continue;
            detail::EdgeBits next = used;
            for (std::size_t w = 0; w < next.size(); ++w)
                next[w] |= traced[static_cast<std::size_t>(i)].bits[w];
            chosen_buckets.push_back(i);
            if (self(self, i + 1, next))
                return true;
            chosen_buckets.pop_back();
            if (exhausted_budget)
                return false;
        }
        return false;
    };

    bool found = rec(rec, 0, detail::EdgeBits(static_cast<std::size_t>((m + 63) / 64), 0));
    if (found) {
        std::vector<int> picks;
        for (int i : chosen_buckets)
            picks.push_back(traced[static_cast<std::size_t>(i)].lowest);
        picks.insert(picks.end(), empty_bucket.begin(),
                     empty_bucket.begin() + from_empty);
        std::sort(picks.begin(), picks.end());
        MatchingFamily fam;
        fam.tag = MatchingFamily::Constraint::FixedFPairsEmpty;
        for (int i : picks)
            fam.matchings.push_back(pms[static_cast<std::size_t>(i)]);
        if (!is_fixed_f_family(g, fixed, fam.matchings))
            fail(ErrorKind::Integrity, "search produced an invalid fixed-F family");
        out.status = SearchStatus::Found;
        out.witness = std::move(fam);
    } else if (exhausted_budget || enumeration.truncated) {
        out.status = SearchStatus::Indeterminate;
    } else {
        out.status = SearchStatus::Refuted;
    }
    return out;
}

} // namespace rgraph
