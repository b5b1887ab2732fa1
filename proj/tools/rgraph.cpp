// Command-line front end: parse graphs, run any toolkit operation, emit
// human-readable or JSON reports, batch-process corpora.
//
// Exit codes: 0 definitive, 1 usage/parse/falsification errors,
// 2 indeterminate (budget or cap exhausted).

#include <chrono>
#include <map>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgraph/corpus.hpp"
#include "rgraph/report.hpp"

namespace {

using namespace rgraph;

struct CommonArgs {
    RunOptions opt;
    bool json = false;
    std::vector<std::string> inputs;
    std::vector<int> fixed_edges;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input = true) {
    cmd->add_flag("--json", args.json, "one JSON report object per line");
    cmd->add_option("--budget", args.opt.budget, "search node budget")->capture_default_str();
    cmd->add_option("--pm-cap", args.opt.pm_cap, "perfect matching enumeration cap")
        ->capture_default_str();
    if (needs_input)
        cmd->add_option("inputs", args.inputs, "graph files (.mg edge list or .g6)")
            ->required()
            ->expected(-1);
}

int exit_code_for(const std::string& status) {
    if (status == "error")
        return 1;
    if (status == "indeterminate")
        return 2;
    return 0;
}

void emit(const Report& rep, bool json) {
    if (json)
        std::cout << to_json(rep).dump() << "\n";
    else
        std::cout << render_text(rep) << "\n";
}

int run_single(const std::string& predicate, const CommonArgs& args) {
    int worst = 0;
    for (const std::string& path : args.inputs) {
        std::vector<CorpusItem> items;
        rgraph::detail::load_corpus_file(path, items);
        if (items.empty()) {
            std::cerr << "warning: no graphs in " << path << "\n";
            continue;
        }
        for (const CorpusItem& item : items) {
            auto start = std::chrono::steady_clock::now();
            Report rep;
            if (!item.graph) {
                rep.command = predicate;
                rep.status = "error";
                rep.error = item.parse_error;
            } else {
                rep = run_report_guarded(predicate, *item.graph, args.opt);
            }
            rep.source = item.source;
            rep.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            emit(rep, args.json);
            worst = std::max(worst, exit_code_for(rep.status));
        }
    }
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-graph verification toolkit"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> predicates = {
        {"classify", "bipartite / tight-odd-cut / bi-critical decomposition flags"},
        {"rgraph", "r-graph recognition with a failure witness"},
        {"oddcut", "global minimum odd cut via the Gomory-Hu tree"},
        {"tightcut", "find a non-trivial size-r odd cut and contract it"},
        {"brick", "non-bipartite + bi-critical + 3-connected check"},
        {"color", "exact proper edge coloring search"},
        {"fulkerson", "2r perfect matchings covering every edge twice"},
        {"fanraspaud", "t matchings with every triple intersection empty"},
        {"fixedf", "t matchings avoiding triples through a fixed matching"},
        {"gadget", "expand vertices into multicycles (r = 2k+1)"},
        {"unslicable", "no matching removal leaves an (r-1)-graph"},
        {"verify-t5", "gadget construction plus exhaustive fixed-F refutation"}};

    std::map<std::string, CommonArgs> args;
    for (const auto& [name, blurb] : predicates) {
        CLI::App* cmd = app.add_subcommand(name, blurb);
        CommonArgs& a = args[name];
        add_common(cmd, a);
        if (name == "classify" || name == "rgraph" || name == "tightcut" ||
            name == "fulkerson" || name == "unslicable")
            cmd->add_option("--r", a.opt.r, "regularity degree")->capture_default_str();
        if (name == "gadget" || name == "verify-t5")
            cmd->add_option("--k", a.opt.k, "cycle edge multiplicity (r = 2k+1)")
                ->capture_default_str();
        if (name == "color")
            cmd->add_option("--colors", a.opt.colors, "number of colors")->capture_default_str();
        if (name == "fanraspaud") {
            a.opt.t = 3;
            cmd->add_option("--t", a.opt.t, "family size")->capture_default_str();
        }
        if (name == "fixedf") {
            a.opt.t = 2;
            cmd->add_option("--t", a.opt.t, "family size")->capture_default_str();
            cmd->add_option("--f", a.fixed_edges,
                            "edge ids of the fixed matching (default: first enumerated)")
                ->delimiter(',');
        }
    }

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "batch-run a predicate over a corpus");
    CommonArgs corpus_args;
    std::string corpus_predicate;
    std::string corpus_path;
    int jobs = 1;
    add_common(corpus_cmd, corpus_args, false);
    corpus_cmd->add_option("--predicate", corpus_predicate, "one of classify, rgraph, fulkerson, fanraspaud, brick-theorem")
        ->required()
        ->check(CLI::IsMember({"classify", "rgraph", "fulkerson", "fanraspaud", "brick-theorem"}));
    corpus_cmd->add_option("--r", corpus_args.opt.r, "regularity degree")->capture_default_str();
    corpus_cmd->add_option("--t", corpus_args.opt.t, "family size for fanraspaud")
        ->capture_default_str();
    corpus_cmd->add_option("--jobs", jobs, "parallel workers")->capture_default_str();
    corpus_cmd->add_option("path", corpus_path, "corpus file or directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        for (const auto& [name, blurb] : predicates)
            if (app.got_subcommand(name)) {
                CommonArgs& a = args[name];
                if (!a.fixed_edges.empty())
                    a.opt.fixed_f = std::vector<EdgeId>(a.fixed_edges.begin(), a.fixed_edges.end());
                return run_single(name, a);
            }

        if (app.got_subcommand("corpus")) {
            auto items = load_corpus(corpus_path);
            auto start = std::chrono::steady_clock::now();
            auto summary = corpus_run(items, corpus_predicate, corpus_args.opt, jobs);
            double wall_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            for (const Report& rep : summary.reports)
                emit(rep, corpus_args.json);
            if (corpus_args.json) {
                std::cout << to_json(summary).dump() << "\n";
            } else {
                std::cout << "corpus: " << summary.total << " graphs";
                for (const auto& [status, count] : summary.status_counts)
                    std::cout << ", " << status << "=" << count;
                std::cout << "  [" << wall_ms << " ms]\n";
            }
            if (summary.falsifications > 0) {
                std::cerr << "THEOREM FALSIFICATION: " << summary.falsifications
                          << " graph(s) violate the checked statement\n";
                return 1;
            }
            if (summary.errors > 0)
                return 1;
            if (summary.indeterminate > 0)
                return 2;
            return 0;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
