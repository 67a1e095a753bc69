// Acceptance suite: one line per criterion, "CRITERION k: PASS|FAIL — detail".
// Exit code is the number of failed blocking criteria (criterion 8 reports
// bounds and never blocks unless they contradict the expected values).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "metdim/autgroup.hpp"
#include "metdim/catalog.hpp"
#include "metdim/distance.hpp"
#include "metdim/expr.hpp"
#include "metdim/families.hpp"
#include "metdim/formulas.hpp"
#include "metdim/graph.hpp"
#include "metdim/metric_dimension.hpp"
#include "metdim/named.hpp"
#include "metdim/resolving.hpp"
#include "metdim/subset_orbits.hpp"

using namespace metdim;

namespace {

#ifndef METDIM_DATA_DIR
#error "METDIM_DATA_DIR must point at the data/ directory"
#endif
const std::string kDataDir = METDIM_DATA_DIR;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int exact_dim(const Graph& g, Strategy strategy = Strategy::Auto) {
    SearchOptions so;
    so.strategy = strategy;
    auto r = metric_dimension(g, so);
    if (!r.exact) throw std::runtime_error("search unexpectedly inexact");
    return r.dimension;
}

Graph random_connected(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> dens(0.2, 0.7);
    for (;;) {
        double p = dens(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) g.add_edge(u, v);
        if (g.is_connected()) return g;
    }
}

// All partitions of t into parts >= 1, descending order.
void partitions_of(int t, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (t == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(t, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(t - p, p, cur, out);
        cur.pop_back();
    }
}

bool preserves_adjacency(const Graph& g, const Perm& p) {
    if (p.degree() != g.num_vertices()) return false;
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && !g.adjacent(p(u), p(v))) return false;
    return true;
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    Timer t;
    auto entries = load_manifest(kDataDir + "/core_tables.manifest");
    auto s = run_suite(entries);
    std::ostringstream msg;
    bool ok = s.mismatches == 0 && s.build_errors == 0 && s.timeouts == 0;
    if (!ok)
        for (const auto& r : s.reports)
            if (r.status == "mismatch" || r.status == "build-error" || r.status == "timeout")
                msg << " [" << r.name << ": " << r.status << "]";

    // spot-check the named values, including every crown graph K_{n,n}-I
    std::vector<std::pair<std::string, int>> want = {
        {"octahedron", 3}, {"cube", 3}, {"petersen", 3}, {"J(5,2)", 3},
        {"icosahedron", 3}, {"P13", 4}, {"heawood", 5}, {"J(6,2)", 4},
        {"K(6,2)", 4}, {"Q4", 4}, {"H(2,4)", 4}, {"shrikhande", 4},
        {"clebsch", 4}, {"P17", 4}, {"pappus", 4}, {"dodecahedron", 3},
        {"desargues", 3}, {"J(6,3)", 4}, {"L(petersen)", 4}, {"L(heawood)", 4},
        {"H(2,5)", 6}, {"P25", 5}, {"IG of PG(2,3)", 8}, {"H(3,3)", 4},
        {"coxeter", 4}, {"J(8,2)", 6}, {"tutte8", 6}, {"IG of PG(3,2)", 8},
        {"Q5", 4},
    };
    for (int n = 5; n <= 17; ++n)
        want.push_back({"K" + std::to_string(n) + "," + std::to_string(n) + "-I", n - 1});
    for (const auto& [name, dim] : want) {
        auto it = std::find_if(s.reports.begin(), s.reports.end(),
                               [&](const VerifyReport& r) { return r.name == name; });
        if (it == s.reports.end()) {
            ok = false;
            msg << " [missing row " << name << "]";
        } else if (it->status != "match" || it->found != dim) {
            ok = false;
            msg << " [" << name << ": wanted " << dim << ", " << it->status << "/"
                << it->found << "]";
        }
    }
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << s.matches << " matches, " << s.skipped << " external rows skipped, "
      << want.size() << " named values spot-checked, " << t.seconds() << "s";
    if (!ok) d << ";" << msg.str();
    detail = d.str();
    return ok && t.seconds() < 2400;  // 10 min on 4 cores; 4x allowance here
}

bool criterion2(std::string& detail) {
    Timer t;
    auto entries = load_manifest(kDataDir + "/valency3.manifest");
    auto s = run_suite(entries);
    bool ok = int(s.reports.size()) == 11 && s.matches == 11;
    std::ostringstream msg;
    double worst = 0;
    std::string worst_name;
    for (const auto& r : s.reports) {
        if (r.status != "match") {
            ok = false;
            msg << " [" << r.name << ": " << r.status << " found=" << r.found << "]";
        }
        if (r.seconds > worst) {
            worst = r.seconds;
            worst_name = r.name;
        }
    }
    auto bs = std::find_if(entries.begin(), entries.end(),
                           [](const CatalogEntry& e) { return e.name == "biggs-smith"; });
    if (bs == entries.end() || bs->source.rfind("g6:", 0) != 0) {
        ok = false;
        msg << " [biggs-smith must come from an embedded graph6 token]";
    }
    if (worst > 7200) {  // 30 min each on 4 cores; 4x allowance
        ok = false;
        msg << " [" << worst_name << " took too long]";
    }
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << "all eleven cubic graphs matched, slowest " << worst_name << " " << worst
      << "s, total " << t.seconds() << "s";
    if (!ok) d << ";" << msg.str();
    detail = d.str();
    return ok;
}

bool criterion3(std::string& detail) {
    Timer t;
    int checked = 0, bad = 0;
    std::ostringstream msg;

    std::vector<std::vector<int>> parts_list;
    std::vector<int> cur;
    for (int total = 2; total <= 8; ++total) partitions_of(total, total, cur, parts_list);
    for (const auto& parts : parts_list) {
        if (parts.size() < 2) continue;  // one part has no edges
        int formula = formula_multipartite(parts);
        int search = exact_dim(complete_multipartite(parts), Strategy::Plain);
        ++checked;
        if (formula != search) {
            ++bad;
            msg << " [multipartite mismatch]";
        }
    }

    for (int q : {2, 3, 4, 5}) {
        int formula = formula_lattice(q);
        int search = exact_dim(hamming(2, q));
        ++checked;
        if (formula != search) {
            ++bad;
            msg << " [lattice q=" << q << ": " << formula << " vs " << search << "]";
        }
    }

    for (int n : {4, 5, 6, 8}) {
        int formula = formula_johnson_kneser2(n);
        int search = exact_dim(johnson(n, 2));
        ++checked;
        if (formula != search) {
            ++bad;
            msg << " [J(" << n << ",2): " << formula << " vs " << search << "]";
        }
        if (n >= 5) {  // K(4,2) is disconnected
            int ksearch = exact_dim(kneser(n, 2));
            ++checked;
            if (formula != ksearch) {
                ++bad;
                msg << " [K(" << n << ",2): " << formula << " vs " << ksearch << "]";
            }
        }
    }

    // n = 7 is reported, not asserted: reference tables disagree internally here.
    int j7 = exact_dim(johnson(7, 2));
    int k7 = exact_dim(kneser(7, 2));
    int f7 = formula_johnson_kneser2(7);
    std::printf("          n=7 report: search J(7,2)=%d, K(7,2)=%d, formula=%d "
                "(reported only, not asserted)\n", j7, k7, f7);

    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << checked << " formula/search pairs agree, " << t.seconds() << "s";
    if (bad) d << ";" << msg.str();
    detail = d.str();
    return bad == 0;
}

bool criterion4(std::string& detail) {
    Timer t;
    std::vector<std::pair<std::string, Graph>> cases;
    cases.push_back({"petersen", named_graph("petersen")});
    for (int n = 4; n <= 8; ++n)
        cases.push_back({"K" + std::to_string(n),
                         complete_multipartite(std::vector<int>(n, 1))});
    int bad = 0;
    std::ostringstream msg;
    for (const auto& [name, g] : cases) {
        if (!double_transfer_applicable(g)) {
            ++bad;
            msg << " [" << name << ": transfer precondition fails]";
            continue;
        }
        int base = exact_dim(g);
        int doubled = exact_dim(bipartite_double(g));
        if (base != doubled) {
            ++bad;
            msg << " [" << name << ": " << base << " vs doubled " << doubled << "]";
        }
    }
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << cases.size() << " graphs transfer exactly, " << t.seconds() << "s";
    if (bad) d << ";" << msg.str();
    detail = d.str();
    return bad == 0;
}

bool criterion5(std::string& detail) {
    Timer t;
    auto entries = load_manifest(kDataDir + "/hadamard.manifest");
    std::vector<CatalogEntry> small;
    for (const auto& e : entries)
        if (e.n <= 48) small.push_back(e);  // orders 4, 8, 12
    auto s = run_suite(small);
    bool ok = int(s.reports.size()) == 3 && s.matches == 3;
    std::vector<int> want = {4, 7, 8};
    double t48 = 0;
    std::ostringstream msg;
    for (size_t i = 0; i < s.reports.size() && i < want.size(); ++i) {
        if (s.reports[i].found != want[i]) {
            ok = false;
            msg << " [" << s.reports[i].name << ": found " << s.reports[i].found << "]";
        }
        if (small[i].n == 48) t48 = s.reports[i].seconds;
    }
    if (t48 > 1200) ok = false;  // 5 min on 4 cores; 4x allowance
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << "orders 4, 8, 12 give 4, 7, 8; order 12 in " << t48 << "s";
    if (!ok) d << ";" << msg.str();
    detail = d.str();
    return ok;
}

bool criterion6(std::string& detail) {
    Timer t;
    std::vector<Graph> corpus;
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> size(6, 16);
    for (int i = 0; i < 200; ++i) corpus.push_back(random_connected(size(rng), rng));

    auto entries = load_manifest(kDataDir + "/core_tables.manifest");
    int from_core = 0;
    for (const auto& e : entries) {
        if (e.source == "external" || e.n > 16) continue;
        corpus.push_back(parse_expression(e.source));
        ++from_core;
    }

    int dim_checks = 0, orbit_checks = 0, bad = 0;
    std::ostringstream msg;
    for (const auto& g : corpus) {
        int plain = exact_dim(g, Strategy::Plain);
        int orbit = exact_dim(g, Strategy::Orbit);
        ++dim_checks;
        if (plain != orbit) {
            ++bad;
            msg << " [strategy disagreement on n=" << g.num_vertices() << "]";
        }
        auto aut = automorphism_group(g);
        if (aut.order() <= 10000) {
            int n = g.num_vertices();
            for (int k = 1; k <= std::min(3, n); ++k) {
                std::uint64_t predicted = orbit_count_burnside(aut.chain, n, k);
                std::uint64_t streamed = 0;
                auto reps = orbit_reps(aut.chain, n, k);
                while (reps.next()) ++streamed;
                ++orbit_checks;
                if (predicted != streamed) {
                    ++bad;
                    msg << " [orbit count " << streamed << " != " << predicted << "]";
                }
            }
        }
    }
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << "200 random + " << from_core << " core graphs: " << dim_checks
      << " strategy agreements, " << orbit_checks << " orbit counts verified, "
      << t.seconds() << "s";
    if (bad) d << ";" << msg.str();
    detail = d.str();
    return bad == 0;
}

bool criterion7(std::string& detail) {
    Timer t;
    int bad = 0;
    std::ostringstream msg;

    for (int n = 2; n <= 8; ++n) {
        GroupOrder fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        auto a = automorphism_group(complete_multipartite(std::vector<int>(n, 1)));
        if (a.order() != fact) {
            ++bad;
            msg << " [K" << n << " aut order wrong]";
        }
    }
    for (int n = 3; n <= 12; ++n) {
        auto a = automorphism_group(cycle(n));
        if (a.order() != GroupOrder(2 * n)) {
            ++bad;
            msg << " [C" << n << " aut order wrong]";
        }
    }

    // Petersen against the exhaustive 10!-permutation oracle.
    Graph pet = named_graph("petersen");
    std::vector<int> img(10);
    std::iota(img.begin(), img.end(), 0);
    std::uint64_t brute = 0;
    do {
        if (preserves_adjacency(pet, Perm(img))) ++brute;
    } while (std::next_permutation(img.begin(), img.end()));
    auto pa = automorphism_group(pet);
    if (brute != 120 || pa.order() != GroupOrder(120)) {
        ++bad;
        msg << " [petersen: brute " << brute << ", computed may differ from 120]";
    }

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> size(5, 12);
    std::uniform_real_distribution<double> dens(0.15, 0.85);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int gens_checked = 0;
    for (int i = 0; i < 50; ++i) {
        int n = size(rng);
        double p = dens(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) g.add_edge(u, v);
        auto a = automorphism_group(g);
        for (const auto& perm : a.generators) {
            ++gens_checked;
            if (!preserves_adjacency(g, perm)) {
                ++bad;
                msg << " [random graph " << i << ": generator not an automorphism]";
            }
        }
    }
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << "K2..K8, C3..C12, petersen vs 10! brute force (" << "120 found), "
      << gens_checked << " generators verified on 50 random graphs, " << t.seconds() << "s";
    if (bad) d << ";" << msg.str();
    detail = d.str();
    return bad == 0;
}

// Stretch targets: report bounds under a small budget; fail only on contradiction.
bool criterion8(std::string& detail) {
    Timer t;
    double budget = 60;
    if (const char* env = std::getenv("METDIM_STRETCH_BUDGET")) {
        double v = std::atof(env);
        if (v > 0) budget = v;
    }
    bool ok = true;
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);

    SearchOptions so;
    so.budget_seconds = budget;
    auto hos = metric_dimension(named_graph("hoffman_singleton"), so);
    if (hos.exact) {
        d << "hoffman-singleton dimension " << hos.dimension;
        if (hos.dimension != 11) ok = false;
    } else {
        d << "hoffman-singleton bounds [" << hos.lo << "," << hos.hi << "] after " << budget
          << "s (full run budgeted in stretch.manifest)";
        if (hos.lo > 11 || hos.hi < 11) ok = false;
    }

    auto hs = metric_dimension(named_graph("higman_sims"), so);
    if (hs.exact) {
        d << "; higman-sims dimension " << hs.dimension;
        if (hs.dimension > 14) ok = false;
    } else {
        d << "; higman-sims witness of size " << hs.hi << " (expected bound 14)";
        if (hs.hi > 14) ok = false;
    }
    d << ", " << t.seconds() << "s";
    detail = d.str();
    return ok;
}

}  // namespace

int main() {
    struct Row {
        int id;
        bool blocking;
        bool (*fn)(std::string&);
    };
    const Row rows[] = {
        {1, true, criterion1}, {2, true, criterion2}, {3, true, criterion3},
        {4, true, criterion4}, {5, true, criterion5}, {6, true, criterion6},
        {7, true, criterion7}, {8, false, criterion8},
    };
    int failures = 0;
    for (const auto& row : rows) {
        std::string detail;
        bool ok = false;
        try {
            ok = row.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok && row.blocking) ++failures;
        std::printf("CRITERION %d: %s — %s%s\n", row.id, ok ? "PASS" : "FAIL", detail.c_str(),
                    !ok && !row.blocking ? " (non-blocking)" : "");
        std::fflush(stdout);
    }
    return failures;
}
