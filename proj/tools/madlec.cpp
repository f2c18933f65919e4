// madlec: certifies chi'_l(G) <= Delta + 1 for sparse graphs via exact
// maximum-average-degree thresholds, replays the discharging verification,
// solves the threshold LP with duality certificates, and runs desk-scale
// choosability searches.  All decisive comparisons are exact rationals.

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "madlec/choosability.hpp"
#include "madlec/density.hpp"
#include "madlec/discharging.hpp"
#include "madlec/graph.hpp"
#include "madlec/lp.hpp"
#include "madlec/serialize.hpp"
#include "madlec/verdict.hpp"

namespace {

using madlec::json;

struct Options {
    std::string format = "text";
    std::string input_format = "auto";
    int jobs = 1;
    int limit_color_edges = 24;
    int limit_choose_edges = 6;
    int limit_choose_k = 4;
    std::uint64_t budget = 10'000'000;
};

struct DeltaRange {
    int lo = 0;
    int hi = 0;
};

DeltaRange parse_delta_range(const std::string& text, int minimum) {
    DeltaRange range;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoi(text);
        } else {
            range.lo = std::stoi(text.substr(0, dots));
            range.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse delta range '" + text + "' (expected A or A..B)");
    }
    if (range.lo > range.hi) throw std::invalid_argument("empty delta range '" + text + "'");
    if (range.lo < minimum)
        throw std::invalid_argument("delta must be >= " + std::to_string(minimum));
    return range;
}

madlec::Graph load_graph(const std::string& path, const std::string& input_format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::string format = input_format;
    if (format == "auto") {
        const bool g6 = path.size() >= 3 && (path.ends_with(".g6") || path.ends_with(".graph6"));
        format = g6 ? "graph6" : "edgelist";
    }
    if (format == "graph6") return madlec::parse_graph6(text);
    return madlec::parse_edge_list(text);
}

struct ItemResult {
    std::string text;
    json data;
    bool pass = true;
    std::exception_ptr error;
};

template <typename Worker>
std::vector<ItemResult> run_items(int jobs, size_t count, Worker worker) {
    std::vector<ItemResult> results(count);
    std::atomic<size_t> next{0};
    auto body = [&]() {
        for (;;) {
            const size_t index = next.fetch_add(1);
            if (index >= count) return;
            try {
                worker(index, results[index]);
            } catch (...) {
                results[index].error = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, jobs);
    if (workers == 1 || count <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        const int spawn = static_cast<int>(std::min<size_t>(static_cast<size_t>(workers), count));
        pool.reserve(static_cast<size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(body);
        for (std::thread& t : pool) t.join();
    }
    return results;
}

/// Prints per-item text blocks (or one json document) in input order.
/// Returns the exit code: 2 on the first error, 1 if any item failed a check.
int emit(const Options& options, const std::string& command,
         const std::vector<ItemResult>& results, const char* json_key = "results",
         bool blank_line_between_items = true) {
    for (const ItemResult& item : results) {
        if (!item.error) continue;
        try {
            std::rethrow_exception(item.error);
        } catch (const std::exception& e) {
            std::cerr << "madlec: error: " << e.what() << "\n";
            return 2;
        }
    }
    bool all_pass = true;
    if (options.format == "json") {
        json doc;
        doc["command"] = command;
        doc[json_key] = json::array();
        for (const ItemResult& item : results) {
            doc[json_key].push_back(item.data);
            all_pass = all_pass && item.pass;
        }
        doc["pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        bool first = true;
        for (const ItemResult& item : results) {
            if (!first && blank_line_between_items) std::cout << "\n";
            first = false;
            std::cout << item.text;
            all_pass = all_pass && item.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_mad(const Options& options, const std::vector<std::string>& files) {
    auto results = run_items(options.jobs, files.size(), [&](size_t i, ItemResult& out) {
        const madlec::Graph g = load_graph(files[i], options.input_format);
        const madlec::DensityWitness witness = madlec::mad_exact(g);
        std::ostringstream text;
        text << "file: " << files[i] << "\n";
        text << "mad: " << madlec::to_string(witness.density) << " ("
             << madlec::to_decimal_string(witness.density) << ")\n";
        text << "witness:";
        for (int v : witness.vertices) text << " " << v;
        text << "\n";
        out.text = text.str();
        out.data = json{{"file", files[i]},
                        {"mad", madlec::to_string(witness.density)},
                        {"mad_decimal", madlec::to_decimal_string(witness.density)},
                        {"witness", madlec::to_json(witness)}};
    });
    return emit(options, "mad", results);
}

int cmd_threshold(const Options& options, const std::string& range_text) {
    const DeltaRange range = parse_delta_range(range_text, 5);
    const size_t count = static_cast<size_t>(range.hi - range.lo + 1);
    auto results = run_items(options.jobs, count, [&](size_t i, ItemResult& out) {
        const int delta = range.lo + static_cast<int>(i);
        const madlec::Threshold t = madlec::threshold(delta);
        const madlec::Rational gap = t.m - madlec::rat(delta, 4);
        char line[128];
        std::snprintf(line, sizeof(line), "%-7d%-4d%-12s%-12s%s\n", t.delta, t.c,
                      madlec::to_string(t.m).c_str(), madlec::to_decimal_string(t.m).c_str(),
                      madlec::to_string(gap).c_str());
        out.text = line;
        out.data = madlec::to_json(t);
    });
    if (options.format != "json")
        std::cout << "delta  c   m           m_decimal   gap\n";
    return emit(options, "threshold", results, "rows", /*blank_line_between_items=*/false);
}

int cmd_verify(const Options& options, const std::vector<std::string>& files) {
    auto results = run_items(options.jobs, files.size(), [&](size_t i, ItemResult& out) {
        const madlec::Graph g = load_graph(files[i], options.input_format);
        const madlec::Verdict verdict = madlec::certify(g);
        out.text = "file: " + files[i] + "\n" + verdict.to_text();
        out.data = json{{"file", files[i]}};
        out.data.update(madlec::to_json(verdict));
    });
    return emit(options, "verify", results);
}

int cmd_discharge(const Options& options, const std::string& range_text) {
    const DeltaRange range = parse_delta_range(range_text, 5);
    const size_t count = static_cast<size_t>(range.hi - range.lo + 1);
    auto results = run_items(options.jobs, count, [&](size_t i, ItemResult& out) {
        const int delta = range.lo + static_cast<int>(i);
        const madlec::VerificationReport report = madlec::verify_discharging(delta);
        out.pass = report.all_pass();
        out.text = report.to_text();
        out.data = json{{"verification", madlec::to_json(report)}};
        if (delta >= 8) {
            const madlec::IdentityReport identities = madlec::closed_form_identities(delta);
            out.pass = out.pass && identities.closed_form_matches;
            out.text += identities.to_text();
            out.data["identities"] = madlec::to_json(identities);
        }
        out.data["pass"] = out.pass;
    });
    const int code = emit(options, "discharge", results, "reports");
    if (code == 0 && options.format != "json")
        std::cout << "\ndischarge " << range.lo << ".." << range.hi << ": pass\n";
    if (code == 1 && options.format != "json")
        std::cout << "\ndischarge " << range.lo << ".." << range.hi << ": FAIL\n";
    return code;
}

int cmd_lp(const Options& options, const std::string& range_text) {
    const DeltaRange range = parse_delta_range(range_text, 5);
    const size_t count = static_cast<size_t>(range.hi - range.lo + 1);
    auto results = run_items(options.jobs, count, [&](size_t i, ItemResult& out) {
        const int delta = range.lo + static_cast<int>(i);
        const madlec::LpSolution solution = madlec::optimal_threshold(delta);
        const madlec::Threshold t = madlec::threshold(delta);
        const bool sound = solution.status == madlec::LpStatus::optimal && solution.value >= t.m;
        // The closed-form multiplier scheme only yields a valid certificate
        // while m >= c; past that point (delta >= 14) its last multiplier is
        // negative, which is exactly when the LP optimum drops below m.
        std::string certificate = "negative-multiplier";
        if (t.m >= t.c) {
            const auto [lambdas, m] = madlec::discharging_certificate(delta);
            certificate = madlec::verify_certificate(delta, lambdas, m) ? "ok" : "FAIL";
        }
        out.pass = sound && certificate != "FAIL";
        const madlec::Rational gap = solution.value - t.m;
        char line[160];
        std::snprintf(line, sizeof(line), "%-7d%-12s%-12s%-10s%-8s%s\n", delta,
                      madlec::to_string(solution.value).c_str(), madlec::to_string(t.m).c_str(),
                      madlec::to_string(gap).c_str(), sound ? "yes" : "NO", certificate.c_str());
        out.text = line;
        out.data = madlec::to_json(solution);
        out.data["m"] = madlec::to_string(t.m);
        out.data["gap"] = madlec::to_string(gap);
        out.data["certificate"] = certificate;
        out.data["sound"] = sound;
        out.data["pass"] = out.pass;
    });
    if (options.format != "json")
        std::cout << "delta  m*          m           gap       sound   certificate\n";
    const int code = emit(options, "lp", results, "rows", /*blank_line_between_items=*/false);
    if (options.format != "json")
        std::cout << "\nlp " << range.lo << ".." << range.hi
                  << (code == 0 ? ": sound\n" : ": FAIL (LP optimum below the closed form)\n");
    return code;
}

int cmd_choosability(const Options& options, const std::vector<std::string>& files, int k) {
    auto results = run_items(options.jobs, files.size(), [&](size_t i, ItemResult& out) {
        const madlec::Graph g = load_graph(files[i], options.input_format);
        const madlec::ChoosabilityLimits limits{options.limit_choose_edges, options.limit_choose_k};
        const madlec::SearchBudget budget{options.budget};
        std::ostringstream text;
        text << "file: " << files[i] << "\n";
        out.data = json{{"file", files[i]}};

        const int chi = madlec::chromatic_index(g, options.limit_color_edges);
        text << "chromatic_index: " << chi << "\n";
        out.data["chromatic_index"] = chi;

        if (k > 0) {
            const madlec::BadSearchResult search = madlec::find_bad_assignment(g, k, budget, limits);
            switch (search.status) {
                case madlec::SearchStatus::found:
                    text << "bad_assignment k=" << k << ": found\n" << search.assignment->to_text();
                    out.data["bad_assignment"] =
                        json{{"k", k}, {"status", "found"},
                             {"assignment", madlec::to_json(*search.assignment)}};
                    break;
                case madlec::SearchStatus::none_complete:
                    text << "bad_assignment k=" << k << ": none (search complete)\n";
                    out.data["bad_assignment"] = json{{"k", k}, {"status", "none_complete"}};
                    break;
                case madlec::SearchStatus::budget_exhausted:
                    text << "bad_assignment k=" << k << ": budget exhausted\n";
                    out.data["bad_assignment"] = json{{"k", k}, {"status", "budget_exhausted"}};
                    break;
            }
            out.text = text.str();
            return;
        }

        if (g.edge_count() > limits.max_edges) {
            text << "list_chromatic_index: skipped (" << g.edge_count()
                 << " edges exceed the exhaustive limit " << limits.max_edges << ")\n";
            out.data["list_chromatic_index"] = json{{"status", "skipped"}};
        } else {
            const madlec::ListChromaticResult r = madlec::list_chromatic_index(g, budget, limits);
            if (r.exact) {
                text << "list_chromatic_index: " << r.value << " (exact)\n";
                out.data["list_chromatic_index"] = json{{"status", "exact"}, {"value", r.value}};
            } else {
                const char* why = r.reason == madlec::BoundReason::budget_exhausted
                                      ? "budget exhausted"
                                      : "list size limit";
                text << "list_chromatic_index: >= " << r.value << " (lower bound, " << why << ")\n";
                out.data["list_chromatic_index"] =
                    json{{"status", "lower_bound"}, {"value", r.value}, {"reason", why}};
            }
        }
        out.text = text.str();
    });
    return emit(options, "choosability", results);
}

int cmd_filter(const Options& options, const std::vector<std::string>& files) {
    auto results = run_items(options.jobs, files.size(), [&](size_t i, ItemResult& out) {
        const madlec::Graph g = load_graph(files[i], options.input_format);
        const madlec::CriticalityReport report = madlec::criticality_filter(g);
        out.text = "file: " + files[i] + "\n" + report.to_text();
        out.data = json{{"file", files[i]}};
        out.data.update(madlec::to_json(report));
    });
    return emit(options, "filter", results);
}

}  // namespace

int main(int argc, char** argv) {
    Options options;
    CLI::App app{"sparsity certificates for list edge coloring"};
    app.require_subcommand(1);
    app.add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--input-format", options.input_format, "graph file format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
        ->capture_default_str();
    app.add_option("--jobs", options.jobs, "worker threads for multi-item runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--limit-color-edges", options.limit_color_edges,
                   "edge cap for chromatic index search")
        ->capture_default_str();
    app.add_option("--limit-choose-edges", options.limit_choose_edges,
                   "edge cap for exhaustive choosability search")
        ->capture_default_str();
    app.add_option("--limit-choose-k", options.limit_choose_k,
                   "list size cap for exhaustive choosability search")
        ->capture_default_str();
    app.add_option("--budget", options.budget, "node budget for choosability searches")
        ->capture_default_str();

    std::vector<std::string> files;
    std::string range_text;
    int bad_k = 0;

    CLI::App* mad = app.add_subcommand("mad", "exact maximum average degree with witness");
    mad->add_option("files", files, "graph files")->required()->expected(-1);

    CLI::App* thresh = app.add_subcommand("threshold", "sparsity threshold table");
    thresh->add_option("--delta", range_text, "delta or range A..B")->required();

    CLI::App* verify = app.add_subcommand("verify", "per-graph certification verdict");
    verify->add_option("files", files, "graph files")->required()->expected(-1);

    CLI::App* discharge = app.add_subcommand("discharge", "replay the discharging verification");
    discharge->add_option("--delta", range_text, "delta or range A..B")->required();

    CLI::App* lp = app.add_subcommand("lp", "optimal thresholds with duality certificates");
    lp->add_option("--delta", range_text, "delta or range A..B")->required();

    CLI::App* choose = app.add_subcommand("choosability", "chromatic and list-chromatic index");
    choose->add_option("files", files, "graph files")->required()->expected(-1);
    choose->add_option("--k", bad_k, "search for a bad list assignment of this size");

    CLI::App* filter = app.add_subcommand("filter", "necessary conditions for criticality");
    filter->add_option("files", files, "graph files")->required()->expected(-1);

    // global flags may appear after the subcommand
    for (CLI::App* sub : {mad, thresh, verify, discharge, lp, choose, filter}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (mad->parsed()) return cmd_mad(options, files);
        if (thresh->parsed()) return cmd_threshold(options, range_text);
        if (verify->parsed()) return cmd_verify(options, files);
        if (discharge->parsed()) return cmd_discharge(options, range_text);
        if (lp->parsed()) return cmd_lp(options, range_text);
        if (choose->parsed()) return cmd_choosability(options, files, bad_k);
        if (filter->parsed()) return cmd_filter(options, files);
    } catch (const std::exception& e) {
        std::cerr << "madlec: error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
