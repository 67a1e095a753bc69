#ifndef METDIM_METRIC_DIMENSION_HPP
#define METDIM_METRIC_DIMENSION_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "autgroup.hpp"
#include "distance.hpp"
#include "graph.hpp"
#include "resolving.hpp"
#include "schreier.hpp"
#include "subset_orbits.hpp"

// Exact metric dimension search.  Both strategies enumerate subsets in
// ascending set-lex order and return the set-lex least resolving set of
// minimum size, so their witnesses agree:
//   - plain: every subset,
//   - orbit: only set-lex minimal orbit representatives under the
//     automorphism group.  A set resolves iff its whole orbit does, and the
//     overall set-lex least resolving set is minimal in its orbit, so the
//     pruning keeps the same witness reachable first.

namespace metdim {

// Smallest k with k + diam^k >= n: a size-k resolving set admits at most
// k + diam^k distinct distance vectors.
inline int lower_bound(int n, int diam) {
    if (n < 1) throw std::invalid_argument("lower_bound: n < 1");
    if (n == 1) return 0;
    if (diam < 1) throw std::invalid_argument("lower_bound: diam < 1 with n > 1");
    std::uint64_t reach = 1;  // diam^k, saturating
    int k = 0;
    while (std::uint64_t(k) + reach < std::uint64_t(n)) {
        ++k;
        if (reach > std::uint64_t(n)) continue;  // already saturated past n
        reach *= std::uint64_t(diam);
    }
    return k;
}

enum class Strategy { Auto, Plain, Orbit };

struct SearchOptions {
    Strategy strategy = Strategy::Auto;
    int threads = 1;             // plain strategy fan-out
    double budget_seconds = 0;   // 0 = unlimited
    bool deterministic = false;  // no cross-thread early abort in plain scans
    // Auto picks orbit only when the automorphism group is bigger than this.
    std::uint64_t aut_threshold = 24;
    SubsetOrbitOptions orbit;    // engine knobs
};

struct LevelStats {
    int k = 0;
    std::uint64_t considered = 0;  // subsets of this size generated
    std::uint64_t tested = 0;      // resolving tests run
};

struct SearchStats {
    std::string strategy;   // "plain" or "orbit"
    std::string engine;     // "plain", "table" or "frontier"
    std::string aut_order;  // automorphism group order, when computed
    double seconds = 0;
    std::vector<LevelStats> levels;
};

// Search outcome.  exact: dimension == lo == hi and witness is the set-lex
// least resolving set of that size.  Otherwise lo/hi bound the dimension
// and witness is the best resolving set found (size hi).
struct DimResult {
    bool exact = false;
    int lo = 0, hi = 0;
    int dimension = -1;
    std::vector<int> witness;
    SearchStats stats;
};

namespace detail {

// Greedy resolving set: repeatedly add the vertex splitting the current
// distance partition into the most cells (ties to the smallest vertex),
// then drop members that became redundant.  Seeds the search upper bound.
inline std::vector<int> greedy_resolving(const DistanceMatrix& dm) {
    int n = dm.num_vertices();
    std::vector<int> cell_of(n, 0);
    int ncells = 1;
    std::vector<int> s;
    std::vector<int> stamp(std::size_t(n) * 256, -1);
    int round = 0;
    while (ncells < n) {
        int bestv = -1, bestcells = -1;
        for (int v = 0; v < n; ++v) {
            int cells = 0;
            ++round;
            for (int u = 0; u < n; ++u) {
                int key = cell_of[u] * 256 + dm.at(u, v);
                if (stamp[key] != round) {
                    stamp[key] = round;
                    ++cells;
                }
            }
            if (cells > bestcells) {
                bestcells = cells;
                bestv = v;
            }
        }
        s.push_back(bestv);
        // Renumber cells after refining by bestv.
        ++round;
        std::vector<int> next(n);
        std::vector<int> keyid(std::size_t(n) * 256, -1);
        int id = 0;
        for (int u = 0; u < n; ++u) {
            int key = cell_of[u] * 256 + dm.at(u, bestv);
            if (stamp[key] != round) {
                stamp[key] = round;
                keyid[key] = id++;
            }
            next[u] = keyid[key];
        }
        cell_of = std::move(next);
        ncells = id;
    }
    // Minimise: drop members whose removal keeps the set resolving.
    for (int i = int(s.size()) - 1; i >= 0; --i) {
        std::vector<int> trial;
        trial.reserve(s.size() - 1);
        for (int j = 0; j < int(s.size()); ++j)
            if (j != i) trial.push_back(s[j]);
        if (!trial.empty() && !first_unresolved(dm, trial)) s = std::move(trial);
    }
    std::sort(s.begin(), s.end());
    return s;
}

class Budget {
public:
    explicit Budget(double seconds) : limited_(seconds > 0) {
        if (limited_)
            end_ = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(seconds));
    }
    // Cheap amortised check: polls the clock on the first call and then
    // every 1024th.
    bool expired() {
        if (!limited_) return false;
        if ((tick_++ & 1023) != 0) return false;
        return std::chrono::steady_clock::now() >= end_;
    }

private:
    bool limited_ = false;
    std::uint64_t tick_ = 0;
    std::chrono::steady_clock::time_point end_;
};

// Depth-first scan of set-lex minimal prefixes with an adaptive upper
// bound.  Nodes are pruned when even their best extension cannot beat the
// bound; resolving nodes shrink the bound and are never extended.
struct DfsSearch {
    const DistanceMatrix& dm;
    EngineVariant& eng;
    int n, lb, maxsplit;
    RefinementStack part;
    std::vector<int> prefix;
    int ub;
    std::vector<int> witness;
    std::vector<LevelStats>& levels;
    Budget budget;
    bool aborted = false;
    bool done = false;

    DfsSearch(const DistanceMatrix& d, EngineVariant& e, int lb_, int ub_,
              std::vector<int> wit, std::vector<LevelStats>& lv, double seconds)
        : dm(d), eng(e), n(d.num_vertices()), lb(lb_),
          maxsplit(d.max_finite() + 1), part(d), prefix(), ub(ub_),
          witness(std::move(wit)), levels(lv), budget(seconds) {}

    void run() { dfs(); }

    void dfs() {
        int j = int(prefix.size());
        int first = j ? prefix.back() + 1 : 0;
        for (int x = first; x < n; ++x) {
            if (j + 1 >= ub) return;  // a child can no longer improve the bound
            if (budget.expired()) {
                aborted = true;
                return;
            }
            if (!engine_child_minimal(eng, x)) continue;
            ++levels[j + 1].considered;
            bool resolving = false;
            // One more column splits a cell into at most maxsplit parts, so
            // bigger cells make the test pointless; below lb it cannot pass.
            if (j + 1 >= lb && part.max_cell() <= maxsplit) {
                ++levels[j + 1].tested;
                resolving = part.would_resolve(x);
            }
            if (resolving) {
                ub = j + 1;
                witness = prefix;
                witness.push_back(x);
                if (ub == lb) {
                    done = true;
                    return;
                }
                continue;  // supersets of a resolving set stay resolving
            }
            if (j + 2 < ub) {
                engine_push(eng, x);
                part.push(x);
                prefix.push_back(x);
                dfs();
                prefix.pop_back();
                part.pop();
                engine_pop(eng);
                if (aborted || done) return;
            }
        }
    }
};

// Combination with the given rank in the C(n,k) set-lex order.
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> c;
    c.reserve(k);
    int x = 0;
    for (int slot = k; slot > 0; --slot) {
        while (true) {
            std::uint64_t block = binom_capped(n - x - 1, slot - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        c.push_back(x++);
    }
    return c;
}

// Advances to the set-lex successor; false when exhausted.
inline bool next_combination(std::vector<int>& c, int n) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Plain per-size scan, fanned out over contiguous rank ranges.  Every
// worker reports the first success in its range; the least rank wins, so
// the merged witness is the global set-lex first of this size.
struct PlainLevel {
    std::uint64_t found_rank = UINT64_MAX;
    std::vector<int> found;
    std::uint64_t considered = 0, tested = 0;
    bool aborted = false;
};

inline PlainLevel plain_scan_level(const DistanceMatrix& dm, int k, int threads,
                                   bool deterministic, Budget budget) {
    int n = dm.num_vertices();
    std::uint64_t total = binom_capped(n, k);
    PlainLevel out;
    if (total == 0) return out;
    int nw = int(std::max<std::uint64_t>(1, std::min(std::uint64_t(threads), total)));
    std::vector<PlainLevel> parts(nw);
    std::atomic<std::uint64_t> best_rank{UINT64_MAX};
    std::atomic<bool> out_of_time{false};
    auto work = [&](int w) {
        std::uint64_t lo = total * std::uint64_t(w) / nw;
        std::uint64_t hi = total * std::uint64_t(w + 1) / nw;
        if (lo >= hi) return;
        auto combo = unrank_combination(n, k, lo);
        Budget local = budget;
        for (std::uint64_t r = lo; r < hi; ++r, next_combination(combo, n)) {
            if (local.expired() || out_of_time.load(std::memory_order_relaxed)) {
                out_of_time = true;
                parts[w].aborted = true;
                return;
            }
            if (!deterministic && best_rank.load(std::memory_order_relaxed) < r)
                return;  // a smaller rank already succeeded
            ++parts[w].considered;
            ++parts[w].tested;
            if (!first_unresolved(dm, combo)) {
                parts[w].found_rank = r;
                parts[w].found = combo;
                std::uint64_t cur = best_rank.load();
                while (r < cur && !best_rank.compare_exchange_weak(cur, r)) {
                }
                return;  // later ranks in this range cannot be smaller
            }
        }
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& p : parts) {
        out.considered += p.considered;
        out.tested += p.tested;
        out.aborted = out.aborted || p.aborted;
        if (p.found_rank < out.found_rank) {
            out.found_rank = p.found_rank;
            out.found = p.found;
        }
    }
    return out;
}

}  // namespace detail

inline DimResult metric_dimension(const Graph& g, const SearchOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    int n = g.num_vertices();
    auto dm = distance_matrix(g);
    if (!dm.all_finite())
        throw std::invalid_argument("metric_dimension: graph is disconnected");

    DimResult res;
    if (n == 1) {
        res.exact = true;
        res.lo = res.hi = res.dimension = 0;
        res.stats.strategy = "plain";
        res.stats.engine = "plain";
        return res;
    }

    int diam = dm.max_finite();
    int lb = lower_bound(n, diam);
    // Greedy seed: witness/size bound now, rediscovered canonically below.
    std::vector<int> witness = detail::greedy_resolving(dm);
    int seed = int(witness.size());

    // Strategy choice.
    Strategy strat = opts.strategy;
    GroupOrder aut_order = 0;
    std::optional<AutomorphismGroup> aut;
    if (strat != Strategy::Plain) {
        aut = automorphism_group(g);
        aut_order = aut->order();
        if (strat == Strategy::Auto) {
            strat = Strategy::Orbit;
            if (aut_order <= GroupOrder(opts.aut_threshold)) strat = Strategy::Plain;
            else if (aut_order <= GroupOrder(opts.orbit.predict_budget)) {
                std::uint64_t reps = orbit_count_burnside(aut->chain, n, lb, opts.orbit);
                std::uint64_t all = detail::binom_capped(n, lb);
                if (all != UINT64_MAX && double(reps) > opts.orbit.plain_fraction * double(all))
                    strat = Strategy::Plain;
            }
        }
    }

    res.stats.strategy = strat == Strategy::Plain ? "plain" : "orbit";
    if (aut_order) res.stats.aut_order = order_to_string(aut_order);
    std::vector<LevelStats> levels(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) levels[k].k = k;

    bool aborted = false;
    int certified_lo = lb;

    bool use_dfs = strat == Strategy::Orbit || opts.threads <= 1;
    if (use_dfs) {
        detail::EngineVariant eng = [&]() -> detail::EngineVariant {
            if (strat == Strategy::Plain || aut_order <= 1)
                return detail::TrivialEngine(n);
            bool table_ok = aut_order <= GroupOrder(opts.orbit.element_budget) && n <= 256 &&
                            2 * std::uint64_t(aut_order) * std::uint64_t(n) <=
                                opts.orbit.table_budget_bytes;
            if (table_ok) return detail::ElementTableEngine(aut->chain, opts.orbit);
            return detail::FrontierEngine(aut->chain);
        }();
        res.stats.engine = std::holds_alternative<detail::TrivialEngine>(eng) ? "plain"
                           : std::holds_alternative<detail::ElementTableEngine>(eng)
                               ? "table"
                               : "frontier";
        // Pruning bound seed + 1: the set-lex least optimum is rediscovered
        // even when the greedy set is already minimum, keeping the witness
        // canonical.
        detail::DfsSearch search(dm, eng, lb, seed + 1, witness, levels,
                                 opts.budget_seconds);
        if (lb <= seed) search.run();
        aborted = search.aborted;
        witness = search.witness;
    } else {
        // Literal per-size scans, parallel within each size.  The greedy
        // size is rescanned so the witness is the set-lex first of its size.
        res.stats.engine = "plain";
        detail::Budget budget(opts.budget_seconds);
        for (int k = lb; k <= seed; ++k) {
            auto lvl = detail::plain_scan_level(dm, k, opts.threads, opts.deterministic,
                                                budget);
            levels[k].considered += lvl.considered;
            levels[k].tested += lvl.tested;
            if (lvl.found_rank != UINT64_MAX) {
                witness = lvl.found;
                break;
            }
            if (lvl.aborted) {
                aborted = true;
                certified_lo = k;  // sizes below k are fully exhausted
                break;
            }
            certified_lo = k + 1;
        }
    }

    if (!is_resolving(dm, witness))
        throw std::logic_error("metric_dimension: search produced a non-resolving witness");

    res.exact = !aborted;
    res.hi = int(witness.size());
    res.lo = aborted ? certified_lo : res.hi;
    res.dimension = aborted ? -1 : res.hi;
    res.witness = std::move(witness);
    for (auto& lv : levels)
        if (lv.considered || lv.tested) res.stats.levels.push_back(lv);
    res.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace metdim

#endif  // METDIM_METRIC_DIMENSION_HPP
