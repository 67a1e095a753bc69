// metdim — command-line front end for the metric-dimension library.
//
// Verbs:
//   gen <input>      build a graph and print it (graph6 or edge list)
//   dim <input>      exact metric dimension with an optional time budget
//   check <input>    test whether --set gives a resolving set
//   aut <input>      automorphism group order and generators
//   tables <file>    verify every entry of a catalogue manifest
//
// <input> is one of: a constructor expression such as "johnson(7,2)" or
// "named(coxeter)", a bare graph name, "g6:<token>", a path to a file whose
// first line is a graph6 token, or "-" to read a graph6 token from stdin.
//
// Exit codes: 0 success / all entries consistent, 1 mismatch or non-resolving
// set, 2 usage or input error, 3 time budget exhausted.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metdim/autgroup.hpp"
#include "metdim/catalog.hpp"
#include "metdim/distance.hpp"
#include "metdim/expr.hpp"
#include "metdim/graph.hpp"
#include "metdim/graph6.hpp"
#include "metdim/metric_dimension.hpp"
#include "metdim/regularity.hpp"
#include "metdim/resolving.hpp"

namespace {

using namespace metdim;

std::string strip_g6_prefix(const std::string& s) {
    return s.rfind("g6:", 0) == 0 ? s.substr(3) : s;
}

Graph graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r\n");
        std::string body = line.substr(a, b - a + 1);
        if (body[0] == '#') continue;
        return parse_graph6(strip_g6_prefix(body));
    }
    throw std::invalid_argument("no graph6 line in '" + path + "'");
}

Graph resolve_input(const std::string& input) {
    if (input == "-") {
        std::string line;
        if (!std::getline(std::cin, line)) throw std::invalid_argument("empty stdin");
        return parse_graph6(strip_g6_prefix(line));
    }
    if (input.rfind("g6:", 0) == 0) return parse_graph6(input.substr(3));
    if (std::filesystem::exists(input) && std::filesystem::is_regular_file(input))
        return graph_from_file(input);
    return parse_expression(input);
}

int default_threads() {
    if (const char* env = std::getenv("METDIM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

Strategy to_strategy(const std::string& s) {
    if (s == "plain") return Strategy::Plain;
    if (s == "orbit") return Strategy::Orbit;
    return Strategy::Auto;
}

std::vector<int> parse_set(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (...) {
            throw std::invalid_argument("bad vertex '" + tok + "' in --set");
        }
        if (used != tok.size()) throw std::invalid_argument("bad vertex '" + tok + "' in --set");
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 0.." +
                                        std::to_string(n - 1));
        for (int w : out)
            if (w == v) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
        out.push_back(v);
    }
    return out;
}

void describe(const Graph& g, std::ostream& os) {
    int val = -1;
    bool reg = g.is_regular(&val);
    os << "n=" << g.num_vertices() << " m=" << g.num_edges();
    if (reg) os << " regular valency=" << val;
    if (g.is_connected()) os << " diameter=" << diameter(distance_matrix(g));
    else os << " disconnected";
    os << "\n";
}

int run_gen(const Graph& g, const std::string& format) {
    if (format == "edgelist") {
        for (int u = 0; u < g.num_vertices(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) std::cout << u << " " << v << "\n";
    } else {
        std::cout << to_graph6(g) << "\n";
    }
    describe(g, std::cerr);
    return 0;
}

int run_dim(const Graph& g, const SearchOptions& so) {
    if (!g.is_connected()) {
        std::cerr << "error: graph is disconnected; metric dimension is undefined here\n";
        return 2;
    }
    auto r = metric_dimension(g, so);
    std::cerr << "strategy=" << r.stats.strategy << " engine=" << r.stats.engine;
    if (!r.stats.aut_order.empty()) std::cerr << " |Aut|=" << r.stats.aut_order;
    std::cerr.setf(std::ios::fixed);
    std::cerr.precision(3);
    std::cerr << " time=" << r.stats.seconds << "s\n";
    if (r.exact) {
        std::cout << "dimension: " << r.dimension << "\n";
    } else {
        std::cout << "bounds: " << r.lo << " " << r.hi << "\n";
    }
    std::cout << "witness:";
    for (int v : r.witness) std::cout << " " << v;
    std::cout << "\n";
    return r.exact ? 0 : 3;
}

int run_check(const Graph& g, const std::string& set_text) {
    if (!g.is_connected()) {
        std::cerr << "error: graph is disconnected\n";
        return 2;
    }
    auto s = parse_set(set_text, g.num_vertices());
    auto dm = distance_matrix(g);
    auto bad = unresolved_pair(dm, s);
    if (!bad) {
        std::cout << "resolving\n";
        return 0;
    }
    std::cout << "not resolving: " << bad->first << " " << bad->second << "\n";
    return 1;
}

int run_aut(const Graph& g) {
    auto a = automorphism_group(g);
    std::cout << "order: " << order_to_string(a.order()) << "\n";
    std::cout << "generators: " << a.generators.size() << "\n";
    for (const auto& p : a.generators) {
        std::cout << "gen:";
        for (int i = 0; i < p.degree(); ++i) std::cout << " " << p(i);
        std::cout << "\n";
    }
    return 0;
}

int run_tables(const std::string& path, const SuiteOptions& opts) {
    auto entries = load_manifest(path);
    SuiteSummary summary;
    for (const auto& e : entries) {
        auto r = verify_entry(e, opts);
        if (r.status == "match") ++summary.matches;
        else if (r.status == "mismatch") ++summary.mismatches;
        else if (r.status == "bound-consistent") ++summary.bound_consistent;
        else if (r.status == "timeout") ++summary.timeouts;
        else if (r.status == "build-error") ++summary.build_errors;
        else ++summary.skipped;
        std::cout << report_line(r) << "\n" << std::flush;
        std::ostringstream row;
        row.setf(std::ios::fixed);
        row.precision(2);
        row << "  " << r.name;
        if (row.str().size() < 24) row << std::string(24 - row.str().size(), ' ');
        row << " " << r.status;
        if (!r.detail.empty()) row << "  (" << r.detail << ")";
        std::cerr << row.str() << "\n";
        summary.reports.push_back(std::move(r));
    }
    std::cerr << "matches=" << summary.matches << " mismatches=" << summary.mismatches
              << " bound-consistent=" << summary.bound_consistent
              << " timeouts=" << summary.timeouts << " build-errors=" << summary.build_errors
              << " skipped=" << summary.skipped << "\n";
    if (!summary.all_ok()) return 1;
    if (summary.timeouts > 0) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension toolkit for small distance-regular graphs"};
    app.require_subcommand(1);

    std::string input, format = "graph6", set_text, strategy = "auto", manifest;
    int threads = default_threads();
    double budget = 0, budget_scale = 1;
    bool deterministic = false;

    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--strategy", strategy, "search strategy: auto, plain or orbit")
            ->check(CLI::IsMember({"auto", "plain", "orbit"}));
        cmd->add_option("--threads", threads,
                        "worker threads for the plain strategy (default $METDIM_THREADS or 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--deterministic", deterministic,
                      "bitwise-reproducible results regardless of thread count");
    };

    auto* gen = app.add_subcommand("gen", "build a graph and print it");
    gen->add_option("input", input, "graph expression, name, g6: token, file or -")->required();
    gen->add_option("--format", format, "output format: graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* dim = app.add_subcommand("dim", "compute the metric dimension");
    dim->add_option("input", input, "graph expression, name, g6: token, file or -")->required();
    dim->add_option("--budget", budget, "time budget in seconds (0 = unlimited)");
    add_search_flags(dim);

    auto* check = app.add_subcommand("check", "test whether --set resolves the graph");
    check->add_option("input", input, "graph expression, name, g6: token, file or -")->required();
    check->add_option("--set", set_text, "comma-separated vertex list, e.g. 0,2,6")->required();

    auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
    aut->add_option("input", input, "graph expression, name, g6: token, file or -")->required();

    auto* tables = app.add_subcommand("tables", "verify a catalogue manifest");
    tables->add_option("manifest", manifest, "manifest file")->required();
    tables->add_option("--budget-scale", budget_scale, "multiply every entry budget")
        ->check(CLI::PositiveNumber);
    add_search_flags(tables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tables->parsed()) {
            SuiteOptions so;
            so.search.strategy = to_strategy(strategy);
            so.search.threads = threads;
            so.search.deterministic = deterministic;
            so.budget_scale = budget_scale;
            return run_tables(manifest, so);
        }
        Graph g = resolve_input(input);
        if (gen->parsed()) return run_gen(g, format);
        if (dim->parsed()) {
            SearchOptions so;
            so.strategy = to_strategy(strategy);
            so.threads = threads;
            so.budget_seconds = budget;
            so.deterministic = deterministic;
            return run_dim(g, so);
        }
        if (check->parsed()) return run_check(g, set_text);
        if (aut->parsed()) return run_aut(g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
