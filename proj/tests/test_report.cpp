#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "rgraph/corpus.hpp"
#include "rgraph/graphs.hpp"
#include "rgraph/io.hpp"
#include "rgraph/report.hpp"

using namespace rgraph;

#ifndef RGRAPH_TEST_DATA_DIR
#define RGRAPH_TEST_DATA_DIR "tests/data"
#endif

namespace {

std::vector<CorpusItem> cubic_corpus() {
    std::vector<CorpusItem> items;
    for (const char* name : {"/cubic04.g6", "/cubic06.g6", "/cubic08.g6", "/cubic10.g6"})
        rgraph::detail::load_corpus_file(std::string(RGRAPH_TEST_DATA_DIR) + name, items);
    return items;
}

} // namespace

TEST_CASE("reports are deterministic byte for byte") {
    auto g = petersen_graph();
    RunOptions opt;
    for (const char* predicate : {"classify", "rgraph", "oddcut", "brick", "color",
                                  "fulkerson", "fanraspaud", "verify-t5", "unslicable"}) {
        auto a = to_json(run_report_guarded(predicate, g, opt)).dump();
        auto b = to_json(run_report_guarded(predicate, g, opt)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("report schema carries fixed keys") {
    auto rep = run_report_guarded("classify", petersen_graph(), RunOptions{});
    auto j = to_json(rep);
    for (const char* key : {"command", "input", "digest", "status", "nodes", "budgets",
                            "witness", "error"})
        CHECK(j.contains(key));
}

TEST_CASE("status and witness stay consistent") {
    RunOptions opt;
    auto found = run_report_guarded("fulkerson", petersen_graph(), opt);
    CHECK(found.status == "found");
    CHECK_FALSE(found.witness.is_null());

    auto refuted = run_report_guarded("color", petersen_graph(), [] {
        RunOptions o;
        o.colors = 3;
        return o;
    }());
    CHECK(refuted.status == "refuted");
    CHECK(refuted.witness.is_null());

    opt.budget = 3;
    auto indeterminate = run_report_guarded("color", petersen_graph(), [] {
        RunOptions o;
        o.colors = 3;
        o.budget = 3;
        return o;
    }());
    CHECK(indeterminate.status == "indeterminate");
}

TEST_CASE("errors become reports, not exceptions") {
    auto rep = run_report_guarded("classify", path_graph(4), RunOptions{});
    CHECK(rep.status == "error");
    CHECK(rep.error.find("precondition") != std::string::npos);
}

TEST_CASE("corpus loading and the cubic corpus shape") {
    auto items = cubic_corpus();
    REQUIRE(items.size() == 27); // 1 + 2 + 5 + 19 connected cubic graphs
    for (const auto& item : items) {
        REQUIRE(item.graph.has_value());
        CHECK(item.graph->vertex_count() <= 10);
        for (Vertex v = 0; v < item.graph->vertex_count(); ++v)
            CHECK(item.graph->degree(v) == 3);
    }
}

TEST_CASE("corpus runs are deterministic across parallelism") {
    auto items = cubic_corpus();
    RunOptions opt;
    auto serial = corpus_run(items, "classify", opt, 1);
    auto parallel = corpus_run(items, "classify", opt, 4);
    REQUIRE(serial.reports.size() == parallel.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i)
        CHECK(to_json(serial.reports[i]).dump() == to_json(parallel.reports[i]).dump());
    CHECK(to_json(serial).dump() == to_json(parallel).dump());
}

TEST_CASE("corpus isolates bad graphs and keeps going") {
    std::string path = "/tmp/rgraph_bad_corpus_test.mg";
    {
        std::ofstream out(path);
        out << "2 1\n0 0\n"; // loop: parse error
    }
    std::vector<CorpusItem> items;
    rgraph::detail::load_corpus_file(path, items);
    std::vector<CorpusItem> good;
    rgraph::detail::load_corpus_file(std::string(RGRAPH_TEST_DATA_DIR) + "/cubic04.g6", good);
    items.insert(items.end(), good.begin(), good.end());

    auto summary = corpus_run(items, "classify", RunOptions{}, 1);
    CHECK(summary.total == 2);
    CHECK(summary.errors == 1);
    CHECK(summary.status_counts["true"] == 1);
    CHECK(summary.falsifications == 0);
}

TEST_CASE("empty corpus files contribute nothing") {
    std::string path = "/tmp/rgraph_empty_corpus_test.g6";
    {
        std::ofstream out(path);
        out << "\n\n";
    }
    std::vector<CorpusItem> items;
    rgraph::detail::load_corpus_file(path, items);
    CHECK(items.empty());
    auto summary = corpus_run(items, "classify", RunOptions{}, 1);
    CHECK(summary.total == 0);
    CHECK(summary.falsifications == 0);
}

TEST_CASE("gadget report serializes the full correspondence") {
    RunOptions opt;
    opt.k = 1;
    auto rep = run_report_guarded("gadget", petersen_graph(), opt);
    REQUIRE(rep.status == "found");
    auto& w = rep.witness;
    auto reparsed = parse_edge_list(w["graph"].get<std::string>());
    CHECK(reparsed.vertex_count() == 30);
    CHECK(reparsed.edge_count() == 45);
    CHECK(w["f"].size() == 15);
    CHECK(w["cycle_of"].size() == 10);
    CHECK(w["old_edge_of"].size() == 15);
}
