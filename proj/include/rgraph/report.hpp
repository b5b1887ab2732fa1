#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rgraph/covers.hpp"
#include "rgraph/gadget.hpp"
#include "rgraph/io.hpp"
#include "rgraph/matching.hpp"
#include "rgraph/multigraph.hpp"
#include "rgraph/oddcut.hpp"

namespace rgraph {

using Json = nlohmann::ordered_json;

// One report per (command, input graph). The JSON rendering is deterministic
// byte-for-byte: identical inputs give identical reports, so wall time stays
// out of it and only appears in the human-readable rendering.
struct Report {
    std::string command;                  // subcommand echo with parameters
    std::string source;                   // input path, with :line for graph6 collections
    std::string digest;                   // canonical edge-list hash of the input
    std::string status;                   // found|refuted|indeterminate|true|false|error
    Json witness = nullptr;
    Json budgets = nullptr;
    std::uint64_t nodes = 0;
    std::string error;                    // message when status == "error"
    double wall_ms = 0.0;                 // human output only
};

inline Json to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["input"] = r.source.empty() ? Json(nullptr) : Json(r.source);
    j["digest"] = r.digest;
    j["status"] = r.status;
    j["nodes"] = r.nodes;
    j["budgets"] = r.budgets;
    j["witness"] = r.witness;
    j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
    return j;
}

inline std::string render_text(const Report& r) {
    std::ostringstream out;
    out << r.command;
    if (!r.source.empty())
        out << " " << r.source;
    out << ": " << r.status;
    if (!r.error.empty())
        out << " (" << r.error << ")";
    out << "  [digest " << r.digest << ", nodes " << r.nodes << ", " << r.wall_ms << " ms]";
    if (!r.witness.is_null())
        out << "\n  witness: " << r.witness.dump();
    return out.str();
}

struct RunOptions {
    int r = 3;
    int k = 1;
    int colors = 4;
    int t = 3;
    std::uint64_t budget = 100000000; // search nodes
    std::size_t pm_cap = 1000000;     // perfect matching enumeration cap
    std::optional<std::vector<EdgeId>> fixed_f; // explicit F for fixedf
};

namespace detail {

inline Json vertex_list(const VertexSet& s) {
    return Json(s.members());
}

inline Json edge_list(const std::vector<EdgeId>& ids) {
    return Json(ids);
}

inline Json matchings_json(const std::vector<PerfectMatching>& pms) {
    Json arr = Json::array();
    for (const auto& pm : pms)
        arr.push_back(pm.edges);
    return arr;
}

inline Json budget_json(const RunOptions& opt, bool with_pm_cap, bool with_nodes) {
    Json j;
    if (with_nodes)
        j["budget"] = opt.budget;
    if (with_pm_cap)
        j["pm_cap"] = opt.pm_cap;
    return j;
}

} // namespace detail

inline Report report_rgraph(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "rgraph --r " + std::to_string(opt.r);
    rep.digest = graph_digest(g);
    auto check = is_r_graph(g, opt.r);
    rep.status = check.ok ? "true" : "false";
    Json w;
    w["is_r_graph"] = check.ok;
    if (!check.ok) {
        w["reason"] = check.reason;
        if (check.witness)
            w["witness"] = detail::vertex_list(*check.witness);
    }
    rep.witness = w;
    return rep;
}

inline Report report_classify(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "classify --r " + std::to_string(opt.r);
    rep.digest = graph_digest(g);
    auto cls = classify(g, opt.r);
    rep.status = cls.satisfied ? "true" : "false"; // false falsifies the theorem
    Json w;
    w["bipartite"] = cls.bipartite;
    if (cls.bipartition) {
        w["bipartition"] = Json::array({detail::vertex_list(cls.bipartition->left),
                                        detail::vertex_list(cls.bipartition->right)});
    }
    w["nontrivial_r_cut"] = cls.nontrivial_r_cut;
    if (cls.cut_witness) {
        w["cut_side"] = detail::vertex_list(cls.cut_witness->side);
        w["cut_edges"] = detail::edge_list(cls.cut_witness->boundary);
    }
    w["bicritical"] = cls.bicritical;
    w["satisfied"] = cls.satisfied;
    rep.witness = w;
    return rep;
}

inline Report report_oddcut(const Multigraph& g, const RunOptions&) {
    Report rep;
    rep.command = "oddcut";
    rep.digest = graph_digest(g);
    auto cut = min_odd_cut(g);
    rep.status = "found";
    Json w;
    w["side"] = detail::vertex_list(cut.side);
    w["size"] = cut.size;
    w["edges"] = detail::edge_list(boundary(g, cut.side).boundary);
    rep.witness = w;
    return rep;
}

inline Report report_tightcut(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "tightcut --r " + std::to_string(opt.r);
    rep.digest = graph_digest(g);
    auto x = find_nontrivial_r_cut(g, opt.r);
    if (!x) {
        rep.status = "refuted"; // exhaustively absent
        return rep;
    }
    rep.status = "found";
    auto pair = contract_side(g, *x);
    Json w;
    w["side"] = detail::vertex_list(*x);
    w["cut_edges"] = detail::edge_list(boundary(g, *x).boundary);
    w["g1"] = Json{{"vertices", pair.g1.vertex_count()}, {"edges", pair.g1.edge_count()}};
    w["g2"] = Json{{"vertices", pair.g2.vertex_count()}, {"edges", pair.g2.edge_count()}};
    rep.witness = w;
    return rep;
}

inline Report report_brick(const Multigraph& g, const RunOptions&) {
    Report rep;
    rep.command = "brick";
    rep.digest = graph_digest(g);
    bool bip = is_bipartite(g).has_value();
    bool bic = is_bicritical(g);
    bool three = vertex_connectivity_at_least(g, 3);
    rep.status = (!bip && bic && three) ? "true" : "false";
    rep.witness = Json{{"non_bipartite", !bip}, {"bicritical", bic}, {"three_connected", three}};
    return rep;
}

inline Report report_brick_theorem(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "brick-theorem --r " + std::to_string(opt.r);
    rep.digest = graph_digest(g);
    rep.status = check_brick_theorem(g, opt.r) ? "true" : "false";
    return rep;
}

inline Report report_color(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "color --colors " + std::to_string(opt.colors);
    rep.digest = graph_digest(g);
    rep.budgets = detail::budget_json(opt, false, true);
    auto res = proper_edge_coloring(g, opt.colors, opt.budget);
    rep.status = to_string(res.status);
    rep.nodes = res.nodes;
    if (res.witness) {
        Json w;
        w["colors"] = res.witness->colors;
        w["assignment"] = res.witness->color;
        rep.witness = w;
    }
    return rep;
}

inline Report report_fulkerson(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "fulkerson --r " + std::to_string(opt.r);
    rep.digest = graph_digest(g);
    rep.budgets = detail::budget_json(opt, true, true);
    auto res = fulkerson_cover(g, opt.r, opt.budget, opt.pm_cap);
    rep.status = to_string(res.status);
    rep.nodes = res.nodes;
    if (res.witness)
        rep.witness = Json{{"matchings", detail::matchings_json(res.witness->matchings)}};
    return rep;
}

inline Report report_fanraspaud(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "fanraspaud --t " + std::to_string(opt.t);
    rep.digest = graph_digest(g);
    rep.budgets = detail::budget_json(opt, true, true);
    auto res = triple_empty_family(g, opt.t, opt.budget, opt.pm_cap);
    rep.status = to_string(res.status);
    rep.nodes = res.nodes;
    if (res.witness)
        rep.witness = Json{{"matchings", detail::matchings_json(res.witness->matchings)}};
    return rep;
}

inline Report report_fixedf(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "fixedf --t " + std::to_string(opt.t);
    rep.digest = graph_digest(g);
    rep.budgets = detail::budget_json(opt, true, true);
    PerfectMatching fixed;
    if (opt.fixed_f) {
        fixed.edges = *opt.fixed_f;
        std::sort(fixed.edges.begin(), fixed.edges.end());
    } else {
        auto pms = enumerate_perfect_matchings(g, 1);
        if (pms.matchings.empty())
            fail(ErrorKind::Precondition, "graph has no perfect matching to fix");
        fixed = pms.matchings.front();
    }
    auto res = fixed_f_family(g, fixed, opt.t, opt.budget, opt.pm_cap);
    rep.status = to_string(res.status);
    rep.nodes = res.nodes;
    Json w;
    w["fixed"] = fixed.edges;
    if (res.witness)
        w["matchings"] = detail::matchings_json(res.witness->matchings);
    rep.witness = w;
    return rep;
}

inline Report report_gadget(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "gadget --k " + std::to_string(opt.k);
    rep.digest = graph_digest(g);
    auto res = build_gadget(g, opt.k);
    rep.status = "found";
    Json w;
    w["graph"] = serialize_edge_list(res.graph);
    w["f"] = res.old_edges.edges;
    w["cycle_of"] = res.cycle_of;
    w["old_edge_of"] = res.old_edge_of;
    rep.witness = w;
    return rep;
}

inline Report report_unslicable(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "unslicable --r " + std::to_string(opt.r);
    rep.digest = graph_digest(g);
    rep.budgets = detail::budget_json(opt, true, false);
    auto res = is_unslicable(g, opt.r, opt.pm_cap);
    if (!res.unslicable) {
        rep.status = "indeterminate";
        return rep;
    }
    rep.status = *res.unslicable ? "true" : "false";
    if (res.witness)
        rep.witness = Json{{"slicing_matching", res.witness->edges}};
    return rep;
}

inline Report report_verify_t5(const Multigraph& g, const RunOptions& opt) {
    Report rep;
    rep.command = "verify-t5 --k " + std::to_string(opt.k);
    rep.digest = graph_digest(g);
    rep.budgets = detail::budget_json(opt, true, true);
    auto res = build_gadget(g, opt.k);
    bool rgraph_ok = verify_gadget_is_rgraph(res, opt.k);
    auto verdict = verify_no_fixed_f_family(res, opt.k, opt.budget, opt.pm_cap);
    rep.nodes = verdict.nodes;
    Json w;
    w["gadget_vertices"] = res.graph.vertex_count();
    w["gadget_edges"] = res.graph.edge_count();
    w["gadget_is_rgraph"] = rgraph_ok;
    w["f"] = res.old_edges.edges;
    w["fixedf_search"] = to_string(verdict.search_status);
    if (verdict.family)
        w["family"] = detail::matchings_json(verdict.family->matchings);
    rep.witness = w;
    if (verdict.search_status == SearchStatus::Indeterminate)
        rep.status = "indeterminate";
    else
        rep.status = (rgraph_ok && verdict.no_family()) ? "true" : "false";
    return rep;
}

// Dispatch by predicate name; unknown names are invalid arguments.
inline Report run_report(const std::string& predicate, const Multigraph& g, const RunOptions& opt) {
    if (predicate == "classify")
        return report_classify(g, opt);
    if (predicate == "rgraph")
        return report_rgraph(g, opt);
    if (predicate == "oddcut")
        return report_oddcut(g, opt);
    if (predicate == "tightcut")
        return report_tightcut(g, opt);
    if (predicate == "brick")
        return report_brick(g, opt);
    if (predicate == "brick-theorem")
        return report_brick_theorem(g, opt);
    if (predicate == "color")
        return report_color(g, opt);
    if (predicate == "fulkerson")
        return report_fulkerson(g, opt);
    if (predicate == "fanraspaud")
        return report_fanraspaud(g, opt);
    if (predicate == "fixedf")
        return report_fixedf(g, opt);
    if (predicate == "gadget")
        return report_gadget(g, opt);
    if (predicate == "unslicable")
        return report_unslicable(g, opt);
    if (predicate == "verify-t5")
        return report_verify_t5(g, opt);
    fail(ErrorKind::InvalidArgument, "unknown predicate " + predicate);
}

// Error-isolating wrapper: failures become status=error reports.
inline Report run_report_guarded(const std::string& predicate, const Multigraph& g,
                                 const RunOptions& opt) {
    try {
        return run_report(predicate, g, opt);
    } catch (const GraphError& e) {
        Report rep;
        rep.command = predicate;
        rep.digest = graph_digest(g);
        rep.status = "error";
        rep.error = e.what();
        return rep;
    }
}

} // namespace rgraph
