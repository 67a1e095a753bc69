#ifndef METDIM_SUBSET_ORBITS_HPP
#define METDIM_SUBSET_ORBITS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "bits.hpp"
#include "perm.hpp"
#include "schreier.hpp"

// Set-lex minimal orbit representatives of k-subsets under a permutation
// group.  A subset is a representative iff it is the smallest element of its
// orbit in set-lex order (sorted subsets compared elementwise).  RepStream
// enumerates representatives in ascending set-lex order and can be
// snapshotted by copying.  Two interchangeable pruning engines back the
// search:
//   - element table: materialises every group element (small groups),
//   - frontier: orbit/stabilizer search along the prefix (large groups).
// Both answer the same query: given a set-lex minimal prefix P and a
// candidate x > max(P), is P + {x} set-lex minimal in its orbit?

namespace metdim {

struct SubsetOrbitOptions {
    // Largest group order that may be enumerated element by element
    // (Burnside counts and the element-table engine).
    std::uint64_t element_budget = 1ull << 21;
    // Cap on element-table memory (two bytes per element per point).
    std::uint64_t table_budget_bytes = 64ull << 20;
    // Burnside-based prediction (for strategy heuristics) is only attempted
    // for groups up to this order.
    std::uint64_t predict_budget = 100000;
    // Callers running their own unreduced scans (e.g. the solver's strategy
    // choice) treat reduction as unprofitable when the predicted
    // representative count exceeds this fraction of C(n,k).  Representative
    // streams always reduce exactly regardless of this knob.
    double plain_fraction = 0.5;
    // 0 = auto, 1 = trivial (plain), 2 = element table, 3 = frontier.
    int force_engine = 0;
};

namespace detail {

// C(n,k), saturating at UINT64_MAX.
inline std::uint64_t binom_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (unsigned __int128)(n - k + i) / i;
        if (r > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return std::uint64_t(r);
}

// Orbit of a start point with inverse transversals: inv[i](pts[i]) == pts[0].
struct PointOrbit {
    std::vector<int> pts;    // discovery order, pts[0] = start
    std::vector<int> where;  // point -> index in pts, or -1
    std::vector<Perm> inv;
    Bits mask;
};

inline PointOrbit point_orbit_with_inv(int n, int start, const std::vector<Perm>& gens) {
    PointOrbit o;
    o.where.assign(n, -1);
    o.mask = Bits(n);
    std::vector<Perm> fwd;  // fwd[i](start) == pts[i]
    o.pts.push_back(start);
    o.where[start] = 0;
    o.mask.set(start);
    fwd.push_back(Perm(n));
    o.inv.push_back(Perm(n));
    for (size_t i = 0; i < o.pts.size(); ++i) {
        for (const auto& g : gens) {
            int z = g(o.pts[i]);
            if (o.where[z] < 0) {
                o.where[z] = int(o.pts.size());
                o.pts.push_back(z);
                o.mask.set(z);
                fwd.push_back(fwd[i] * g);
                o.inv.push_back(fwd.back().inverse());
            }
        }
    }
    return o;
}

// Orbit partition of all points under a generator set.
struct OrbitPartition {
    std::vector<int> id;      // point -> orbit id
    std::vector<Bits> masks;  // orbit id -> member mask
};

inline OrbitPartition orbit_partition(int n, const std::vector<Perm>& gens) {
    OrbitPartition p;
    p.id.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (p.id[s] >= 0) continue;
        int oid = int(p.masks.size());
        p.masks.emplace_back(n);
        std::vector<int> queue{s};
        p.id[s] = oid;
        p.masks[oid].set(s);
        for (size_t i = 0; i < queue.size(); ++i)
            for (const auto& g : gens) {
                int z = g(queue[i]);
                if (p.id[z] < 0) {
                    p.id[z] = oid;
                    p.masks[oid].set(z);
                    queue.push_back(z);
                }
            }
    }
    return p;
}

// Plain enumeration: every extension is accepted.
class TrivialEngine {
public:
    explicit TrivialEngine(int n) : n_(n) {}
    int degree() const { return n_; }
    bool child_minimal(int) { return true; }
    void push(int) {}
    void pop() {}

private:
    int n_ = 0;
};

// Scans every group element once per extended node and records, for all
// candidates x > max(P) at once, whether some element maps P + {x} below
// itself.  Image and inverse tables are shared between copies.
class ElementTableEngine {
public:
    ElementTableEngine(const StabilizerChain& chain, const SubsetOrbitOptions& opts) {
        auto sh = std::make_shared<Shared>();
        sh->n = chain.degree();
        if (sh->n > 256) throw std::invalid_argument("element table: degree > 256");
        GroupOrder ord = chain.order();
        if (ord > GroupOrder(opts.element_budget))
            throw std::invalid_argument("element table: group order exceeds budget");
        sh->m = std::size_t(std::uint64_t(ord));
        if (2 * std::uint64_t(sh->m) * sh->n > opts.table_budget_bytes)
            throw std::invalid_argument("element table: table exceeds memory budget");
        sh->img.reserve(sh->m * sh->n);
        sh->inv.reserve(sh->m * sh->n);
        for_each_group_element(chain, [&](const Perm& g) {
            Perm gi = g.inverse();
            for (int i = 0; i < sh->n; ++i) sh->img.push_back(std::uint8_t(g(i)));
            for (int i = 0; i < sh->n; ++i) sh->inv.push_back(std::uint8_t(gi(i)));
        });
        sh_ = std::move(sh);
        words_ = (sh_->n + 63) / 64;
        pmask_.assign(words_, 0);
        fail_.emplace_back();  // root node, lazily scanned
    }

    int degree() const { return sh_->n; }

    bool child_minimal(int x) {
        if (fail_.back().empty()) scan();
        return !fail_.back()[x];
    }

    void push(int x) {
        prefix_.push_back(x);
        pmask_[x >> 6] |= std::uint64_t(1) << (x & 63);
        fail_.emplace_back();
    }

    void pop() {
        int x = prefix_.back();
        prefix_.pop_back();
        pmask_[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
        fail_.pop_back();
    }

private:
    struct Shared {
        int n = 0;
        std::size_t m = 0;
        std::vector<std::uint8_t> img, inv;  // m rows of n points each
    };

    void scan() {
        const int n = sh_->n;
        const int maxp = prefix_.empty() ? -1 : prefix_.back();
        auto& fail = fail_.back();
        fail.assign(n, 0);
        std::uint64_t gmask[4];
        for (std::size_t e = 0; e < sh_->m; ++e) {
            const std::uint8_t* g = &sh_->img[e * n];
            const std::uint8_t* gi = &sh_->inv[e * n];
            for (int w = 0; w < words_; ++w) gmask[w] = 0;
            for (int p : prefix_) gmask[g[p] >> 6] |= std::uint64_t(1) << (g[p] & 63);
            int b = -1;
            for (int w = 0; w < words_; ++w) {
                std::uint64_t d = gmask[w] ^ pmask_[w];
                if (d) { b = w * 64 + std::countr_zero(d); break; }
            }
            if (b < 0) {
                // g(P) == P: P + {x} drops iff g(x) < x.
                for (int x = maxp + 1; x < n; ++x)
                    if (g[x] < x) fail[x] = 1;
                continue;
            }
            if ((gmask[b >> 6] >> (b & 63)) & 1) continue;  // g(P) < P: P not minimal
            // g(P) > P with first difference at b (b in P only).  Adding x
            // with g(x) < b makes g(P + {x}) smaller; g(x) == b needs a full
            // comparison of the extended sets.
            for (int y = 0; y < b; ++y) {
                int x = gi[y];
                if (x > maxp) fail[x] = 1;
            }
            int x0 = gi[b];
            if (x0 > maxp && !fail[x0]) {
                std::uint64_t ib = std::uint64_t(1) << (b & 63);
                std::uint64_t ix = std::uint64_t(1) << (x0 & 63);
                for (int w = 0; w < words_; ++w) {
                    std::uint64_t cw = pmask_[w] | ((x0 >> 6) == w ? ix : 0);
                    std::uint64_t gw = gmask[w] | ((b >> 6) == w ? ib : 0);
                    std::uint64_t d = cw ^ gw;
                    if (d) {
                        int b2 = w * 64 + std::countr_zero(d);
                        if ((gw >> (b2 & 63)) & 1) fail[x0] = 1;
                        break;
                    }
                }
            }
        }
    }

    std::shared_ptr<const Shared> sh_;
    int words_ = 0;
    std::vector<int> prefix_;
    std::vector<std::uint64_t> pmask_;
    std::vector<std::vector<std::uint8_t>> fail_;  // per node; empty = not yet scanned
};

// Searches for an element mapping P + {x} below itself by walking the prefix
// positions with orbit/transversal data, pulling the target set back one
// position at a time.  Never enumerates the group.
class FrontierEngine {
public:
    explicit FrontierEngine(const StabilizerChain& chain)
        : n_(chain.degree()), cur_gens_(chain.generators()), cur_order_(chain.order()) {}

    int degree() const { return n_; }

    bool child_minimal(int x) {
        prepare_node();
        if (cand_pt_ != x) {
            cand_orb_ = point_orbit_with_inv(n_, x, cur_gens_);
            cand_pt_ = x;
        }
        // Target = prefix + {x}; look for an image below it.
        Bits t(n_);
        for (const auto& lv : levels_) t.set(lv.q);
        t.set(x);
        seen_.assign(levels_.size() + 1, {});
        return !drops(0, t, x);
    }

    void push(int x) {
        if (cand_pt_ != x) {
            prepare_node();
            cand_orb_ = point_orbit_with_inv(n_, x, cur_gens_);
            cand_pt_ = x;
        }
        Level lv;
        lv.q = x;
        lv.gens = cur_gens_;
        lv.order = cur_order_;
        lv.orb = cand_orb_;
        lv.below = below_[x];
        levels_.push_back(std::move(lv));
        if (cand_orb_.pts.size() > 1) {
            StabilizerChain tail(n_, cur_gens_, {x}, cur_order_);
            cur_gens_ = tail.num_levels() >= 2 ? tail.level_generators(1) : std::vector<Perm>{};
            cur_order_ /= GroupOrder(cand_orb_.pts.size());
        }
        node_ready_ = false;
        cand_pt_ = -1;
    }

    void pop() {
        cur_gens_ = std::move(levels_.back().gens);
        cur_order_ = levels_.back().order;
        levels_.pop_back();
        node_ready_ = false;
        cand_pt_ = -1;
    }

private:
    struct Level {
        int q = -1;
        std::vector<Perm> gens;  // generators of the stabilizer of the prefix before q
        GroupOrder order = 1;
        PointOrbit orb;          // orbit of q under that stabilizer
        Bits below;              // union of its orbits of points < q
    };

    void prepare_node() {
        if (node_ready_) return;
        part_ = orbit_partition(n_, cur_gens_);
        below_.assign(n_, Bits(n_));
        for (int x = 1; x < n_; ++x) {
            below_[x] = below_[x - 1];
            below_[x].or_with(part_.masks[part_.id[x - 1]]);
        }
        node_ready_ = true;
    }

    // True iff some element maps the current target set strictly below the
    // prefix + candidate.  Position m consumes one target point from the
    // orbit of position m's base; smaller-orbit points reachable from the
    // target mean a strictly smaller image exists.
    bool drops(std::size_t m, const Bits& t, int x) {
        const PointOrbit& orb = m < levels_.size() ? levels_[m].orb : cand_orb_;
        const Bits& below = m < levels_.size() ? levels_[m].below : below_[x];
        if (t.count_and(below) > 0) return true;
        if (m == levels_.size()) return false;  // candidate position consumed: image equal
        bool found = false;
        t.for_each([&](int z) {
            if (found || !orb.mask.test(z)) return;
            const Perm& u = orb.inv[orb.where[z]];
            Bits t2(n_);
            t.for_each([&](int y) {
                if (y != z) t2.set(u(y));
            });
            if (seen_[m + 1].insert(t2.words()).second && drops(m + 1, t2, x)) found = true;
        });
        return found;
    }

    int n_ = 0;
    std::vector<Level> levels_;
    std::vector<Perm> cur_gens_;  // generators of the stabilizer of the whole prefix
    GroupOrder cur_order_ = 1;
    bool node_ready_ = false;
    OrbitPartition part_;       // orbits under the current stabilizer
    std::vector<Bits> below_;   // below_[x] = union of orbits of points < x
    int cand_pt_ = -1;
    PointOrbit cand_orb_;
    std::vector<std::set<std::vector<std::uint64_t>>> seen_;  // per-position dedup
};

using EngineVariant = std::variant<TrivialEngine, ElementTableEngine, FrontierEngine>;

inline bool engine_child_minimal(EngineVariant& e, int x) {
    return std::visit([&](auto& eng) { return eng.child_minimal(x); }, e);
}
inline void engine_push(EngineVariant& e, int x) {
    std::visit([&](auto& eng) { eng.push(x); }, e);
}
inline void engine_pop(EngineVariant& e) {
    std::visit([&](auto& eng) { eng.pop(); }, e);
}

}  // namespace detail

// Number of orbits of k-subsets, by averaging fixed-subset counts over the
// group.  The group order must fit the enumeration budget.
inline std::uint64_t orbit_count_burnside(const StabilizerChain& group, int n, int k,
                                          const SubsetOrbitOptions& opts = {}) {
    if (n != group.degree())
        throw std::invalid_argument("orbit_count_burnside: n != group degree");
    if (k < 0 || k > n) throw std::invalid_argument("orbit_count_burnside: k out of range");
    if (group.order() > GroupOrder(opts.element_budget))
        throw std::runtime_error("orbit_count_burnside: group order exceeds enumeration budget");
    unsigned __int128 total = 0;
    std::vector<char> done(n);
    std::vector<unsigned __int128> dp(std::size_t(k) + 1);
    for_each_group_element(group, [&](const Perm& g) {
        // Fixed k-subsets are unions of cycles: product of (1 + x^len).
        std::fill(done.begin(), done.end(), 0);
        std::fill(dp.begin(), dp.end(), 0);
        dp[0] = 1;
        for (int s = 0; s < n; ++s) {
            if (done[s]) continue;
            int len = 0, p = s;
            do {
                done[p] = 1;
                ++len;
                p = g(p);
            } while (p != s);
            for (int j = k; j >= len; --j) dp[j] += dp[j - len];
        }
        total += dp[k];
    });
    total /= (unsigned __int128)group.order();
    if (total > (unsigned __int128)UINT64_MAX)
        throw std::overflow_error("orbit_count_burnside: count exceeds 64 bits");
    return std::uint64_t(total);
}

// True iff s (sorted ascending, duplicate-free) is the set-lex smallest
// element of its orbit.
inline bool is_lex_minimal(const StabilizerChain& group, const std::vector<int>& s) {
    int n = group.degree();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw std::invalid_argument("is_lex_minimal: point out of range");
        if (i && s[i] <= s[i - 1])
            throw std::invalid_argument("is_lex_minimal: set must be sorted ascending");
    }
    if (s.empty() || int(s.size()) == n || group.order() == 1) return true;
    detail::FrontierEngine eng(group);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (!eng.child_minimal(s[i])) return false;  // a non-minimal prefix rules s out
        eng.push(s[i]);
    }
    return eng.child_minimal(s.back());
}

enum class RepEngine { Trivial, ElementTable, Frontier };

// Streams the set-lex minimal representatives of k-subset orbits in
// ascending set-lex order — exactly one subset per orbit, so the emitted
// count always equals the Burnside count (force_engine = 1 opts out into a
// plain scan of every subset).  Copying a stream snapshots its position.
class RepStream {
public:
    RepStream(const StabilizerChain& group, int n, int k, const SubsetOrbitOptions& opts = {})
        : n_(n), k_(k) {
        if (n != group.degree())
            throw std::invalid_argument("orbit_reps: n != group degree");
        if (k < 0 || k > n) throw std::invalid_argument("orbit_reps: k out of range");
        pick_engine(group, opts);
        cand_.push_back(0);
    }

    RepEngine engine() const { return kind_; }
    std::uint64_t emitted() const { return emitted_; }

    // Next representative, or nullopt when exhausted.
    std::optional<std::vector<int>> next() {
        if (done_) return std::nullopt;
        if (k_ == 0) {
            done_ = true;
            ++emitted_;
            return std::vector<int>{};
        }
        while (true) {
            int d = int(prefix_.size());
            int x = cand_.back();
            if (x > n_ - k_ + d) {  // too few points left to finish
                if (prefix_.empty()) {
                    done_ = true;
                    return std::nullopt;
                }
                detail::engine_pop(*eng_);
                prefix_.pop_back();
                cand_.pop_back();
                continue;
            }
            cand_.back() = x + 1;
            if (!detail::engine_child_minimal(*eng_, x)) continue;
            if (d + 1 == k_) {
                auto rep = prefix_;
                rep.push_back(x);
                ++emitted_;
                return rep;
            }
            detail::engine_push(*eng_, x);
            prefix_.push_back(x);
            cand_.push_back(x + 1);
        }
    }

private:
    void pick_engine(const StabilizerChain& group, const SubsetOrbitOptions& opts) {
        using namespace detail;
        GroupOrder ord = group.order();
        int force = opts.force_engine;
        if (force == 0) {
            if (ord == 1) {
                force = 1;
            } else {
                bool table_ok = ord <= GroupOrder(opts.element_budget) && n_ <= 256 &&
                                2 * std::uint64_t(ord) * n_ <= opts.table_budget_bytes;
                force = table_ok ? 2 : 3;
            }
        }
        if (force == 1) {
            kind_ = RepEngine::Trivial;
            eng_ = std::make_shared<EngineVariant>(TrivialEngine(n_));
        } else if (force == 2) {
            kind_ = RepEngine::ElementTable;
            eng_ = std::make_shared<EngineVariant>(ElementTableEngine(group, opts));
        } else {
            kind_ = RepEngine::Frontier;
            eng_ = std::make_shared<EngineVariant>(FrontierEngine(group));
        }
    }

    // Copying must snapshot engine state, so copies share nothing mutable.
    struct EnginePtr : std::shared_ptr<detail::EngineVariant> {
        EnginePtr() = default;
        EnginePtr(std::shared_ptr<detail::EngineVariant> p)
            : std::shared_ptr<detail::EngineVariant>(std::move(p)) {}
        EnginePtr(const EnginePtr& o)
            : std::shared_ptr<detail::EngineVariant>(
                  o ? std::make_shared<detail::EngineVariant>(*o) : nullptr) {}
        EnginePtr& operator=(const EnginePtr& o) {
            if (this != &o)
                static_cast<std::shared_ptr<detail::EngineVariant>&>(*this) =
                    o ? std::make_shared<detail::EngineVariant>(*o) : nullptr;
            return *this;
        }
        EnginePtr(EnginePtr&&) = default;
        EnginePtr& operator=(EnginePtr&&) = default;
    };

    int n_ = 0, k_ = 0;
    RepEngine kind_ = RepEngine::Trivial;
    EnginePtr eng_;
    std::vector<int> prefix_;
    std::vector<int> cand_;  // cand_.back() = next candidate at the current node
    bool done_ = false;
    std::uint64_t emitted_ = 0;
};

inline RepStream orbit_reps(const StabilizerChain& group, int n, int k,
                            const SubsetOrbitOptions& opts = {}) {
    return RepStream(group, n, k, opts);
}

}  // namespace metdim

#endif  // METDIM_SUBSET_ORBITS_HPP
