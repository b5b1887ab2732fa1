#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>
#include <vector>

#include "rgraph/report.hpp"

namespace rgraph {

struct CorpusItem {
    std::string source; // "path" or "path:line" for graph6 collections
    std::optional<Multigraph> graph;
    std::string parse_error; // set when the item failed to load
};

namespace detail {

inline void load_corpus_file(const std::string& path, std::vector<CorpusItem>& items) {
    std::ifstream in(path);
    if (!in) {
        items.push_back({path, std::nullopt, "unreadable file"});
        return;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            blank = false;
    if (blank)
        return; // empty files contribute no items

    if (!looks_like_graph6(text)) {
        CorpusItem item{path, std::nullopt, ""};
        try {
            item.graph = parse_edge_list(text);
        } catch (const GraphError& e) {
            item.parse_error = e.what();
        }
        items.push_back(std::move(item));
        return;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        bool line_blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                line_blank = false;
        if (line_blank)
            continue;
        CorpusItem item{path + ":" + std::to_string(lineno), std::nullopt, ""};
        try {
            item.graph = parse_graph6_line(line);
        } catch (const GraphError& e) {
            item.parse_error = e.what();
        }
        items.push_back(std::move(item));
    }
}

} // namespace detail

// A corpus is a single file (edge list or multi-line graph6) or a directory
// of such files, walked in sorted name order.
inline std::vector<CorpusItem> load_corpus(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<CorpusItem> items;
    if (fs::is_directory(path)) {
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file())
                files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& file : files)
            detail::load_corpus_file(file, items);
    } else if (fs::exists(path)) {
        detail::load_corpus_file(path, items);
    } else {
        fail(ErrorKind::InvalidArgument, "no such corpus path: " + path);
    }
    return items;
}

struct CorpusSummary {
    std::vector<Report> reports; // input order, one per item
    std::map<std::string, int> status_counts;
    int falsifications = 0; // theorem-level failures (classify/brick-theorem false)
    int errors = 0;
    int indeterminate = 0;
    int total = 0;
};

inline Json to_json(const CorpusSummary& s) {
    Json counts;
    for (const auto& [status, count] : s.status_counts)
        counts[status] = count;
    Json j;
    j["graphs"] = s.total;
    j["statuses"] = counts;
    j["falsifications"] = s.falsifications;
    j["errors"] = s.errors;
    j["indeterminate"] = s.indeterminate;
    return j;
}

// Runs a predicate over every item; items are independent, so the pool just
// splits indices. Reports land in input order whatever the completion order,
// and the aggregate is reduced serially, so parallel runs match serial ones
// byte for byte.
inline CorpusSummary corpus_run(const std::vector<CorpusItem>& items, const std::string& predicate,
                                const RunOptions& opt, int jobs = 1) {
    CorpusSummary summary;
    summary.total = static_cast<int>(items.size());
    summary.reports.resize(items.size());

    auto run_item = [&](std::size_t index) {
        const CorpusItem& item = items[index];
        Report rep;
        if (!item.graph) {
            rep.command = predicate;
            rep.status = "error";
            rep.error = item.parse_error;
        } else {
            rep = run_report_guarded(predicate, *item.graph, opt);
        }
        rep.source = item.source;
        summary.reports[index] = std::move(rep);
    };

    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            run_item(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size())
                    return;
                run_item(i);
            }
        };
        std::vector<std::thread> pool;
        int width = std::min<int>(jobs, static_cast<int>(items.size()));
        for (int w = 0; w < width; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& rep : summary.reports) {
        ++summary.status_counts[rep.status];
        if (rep.status == "error")
            ++summary.errors;
        if (rep.status == "indeterminate")
            ++summary.indeterminate;
        if (rep.status == "false" && (predicate == "classify" || predicate == "brick-theorem"))
            ++summary.falsifications;
    }
    return summary;
}

} // namespace rgraph
