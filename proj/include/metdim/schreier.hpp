#ifndef METDIM_SCHREIER_HPP
#define METDIM_SCHREIER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "metdim/perm.hpp"

namespace metdim {

using GroupOrder = unsigned __int128;

inline std::string order_to_string(GroupOrder x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s += char('0' + int(x % 10));
        x /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

// One level of a stabilizer chain: a base point, the transversal of its orbit
// under the level's group (stored with inverses), and the strong generators
// that fix all earlier base points.
struct ChainLevel {
    int base = -1;
    std::vector<Perm> gens;          // generators of this level's group
    std::vector<int> orbit;          // orbit of base in discovery order
    std::vector<int> where;          // where[p] = index into orbit, or -1
    std::vector<Perm> transversal;   // u with u(base) = p, indexed like orbit
    std::vector<Perm> trans_inv;

    bool in_orbit(int p) const { return where[p] >= 0; }
    const Perm& rep_to(int p) const { return transversal[where[p]]; }
    const Perm& rep_from(int p) const { return trans_inv[where[p]]; }
};

// Stabilizer chain built by a deterministic Schreier-Sims procedure.
// Level i stabilises base points 0..i-1 pointwise.
class StabilizerChain {
public:
    StabilizerChain() = default;

    // base_hint: points forced to head the base, in order (levels are created
    // for them even when their orbits are trivial, so callers can rely on
    // level i being the pointwise stabiliser of the first i hint points).
    // known_order: when nonzero, construction stops as soon as the chain
    // reaches that order, skipping the remaining Schreier generator sifting.
    StabilizerChain(int degree, const std::vector<Perm>& gens,
                    const std::vector<int>& base_hint = {},
                    GroupOrder known_order = 0) {
        degree_ = degree;
        target_ = known_order;
        for (const auto& g : gens)
            if (g.degree() != degree)
                throw std::invalid_argument("stabilizer_chain: degree mismatch");
        for (int b : base_hint) force_level(b);
        for (const auto& g : gens) {
            if (done()) break;
            Perm p = g;
            validate_perm(p);
            add_generator(std::move(p), 0);
        }
        target_ = 0;
    }

    int degree() const { return degree_; }
    size_t num_levels() const { return levels_.size(); }
    const ChainLevel& level(size_t i) const { return *levels_[i]; }

    std::vector<int> base() const {
        std::vector<int> b;
        for (const auto& l : levels_) b.push_back(l->base);
        return b;
    }

    GroupOrder order() const {
        GroupOrder o = 1;
        for (const auto& l : levels_) o *= GroupOrder(l->orbit.size());
        return o;
    }

    // Generators of the whole group (level-0 strong generators).
    const std::vector<Perm>& generators() const {
        static const std::vector<Perm> empty;
        return levels_.empty() ? empty : levels_[0]->gens;
    }

    // Strong generators at a level: generate the stabiliser of base[0..i-1].
    const std::vector<Perm>& level_generators(size_t i) const {
        static const std::vector<Perm> empty;
        return i < levels_.size() ? levels_[i]->gens : empty;
    }

    bool contains(const Perm& p) const {
        if (p.degree() != degree_) return false;
        Perm r = p;
        size_t lev = sift(r);
        return lev == levels_.size() && r.is_identity();
    }

    // Residue after dividing out transversal elements; identity iff member.
    size_t sift(Perm& p) const {
        for (size_t i = 0; i < levels_.size(); ++i) {
            const auto& l = *levels_[i];
            int img = p(l.base);
            if (!l.in_orbit(img)) return i;
            p = p * l.rep_from(img);
        }
        return levels_.size();
    }

    // Orbit of a point under the whole group.
    std::vector<int> point_orbit(int p) const {
        std::vector<int> orb{p};
        std::vector<bool> seen(degree_, false);
        seen[p] = true;
        for (size_t h = 0; h < orb.size(); ++h)
            for (const auto& g : generators()) {
                int q = g(orb[h]);
                if (!seen[q]) { seen[q] = true; orb.push_back(q); }
            }
        return orb;
    }

private:
    void force_level(int b) {
        if (b < 0 || b >= degree_)
            throw std::invalid_argument("stabilizer_chain: base point out of range");
        auto l = std::make_shared<ChainLevel>();
        l->base = b;
        l->where.assign(degree_, -1);
        l->orbit = {b};
        l->where[b] = 0;
        l->transversal = {Perm(degree_)};
        l->trans_inv = {Perm(degree_)};
        levels_.push_back(std::move(l));
    }

    // Sifts p, assumed to lie in the group generated by level `from - 1` (or
    // to be an original generator when from == 0). On failure the residue is
    // installed as a strong generator at every level from..stuck — it fixes
    // the base prefix, so it belongs to all those stabilisers — and the
    // affected orbits are rebuilt deepest first.
    void add_generator(Perm p, size_t from) {
        size_t i = from;
        for (; i < levels_.size(); ++i) {
            const auto& l = *levels_[i];
            int img = p(l.base);
            if (!l.in_orbit(img)) break;
            p = p * l.rep_from(img);
        }
        if (i == levels_.size()) {
            if (p.is_identity()) return;
            force_level(p.first_moved());
        }
        install(std::move(p), from, i);
    }

    void install(Perm p, size_t from, size_t stuck) {
        for (size_t i = from; i <= stuck; ++i) levels_[i]->gens.push_back(p);
        for (size_t i = stuck + 1; i-- > from;) {
            recompute_orbit(i);
            if (done()) return;
        }
    }

    // Rebuilds the orbit/transversal at a level and sifts all Schreier
    // generators into the next level.
    void recompute_orbit(size_t lev) {
        auto& l = *levels_[lev];
        l.orbit = {l.base};
        std::fill(l.where.begin(), l.where.end(), -1);
        l.where[l.base] = 0;
        l.transversal = {Perm(degree_)};
        l.trans_inv = {Perm(degree_)};
        for (size_t h = 0; h < l.orbit.size(); ++h) {
            for (const auto& g : l.gens) {
                int q = g(l.orbit[h]);
                if (!l.in_orbit(q)) {
                    l.orbit.push_back(q);
                    l.where[q] = int(l.orbit.size()) - 1;
                    l.transversal.push_back(l.transversal[h] * g);
                    l.trans_inv.push_back(l.transversal.back().inverse());
                }
            }
        }
        // Schreier generators: u_p * g * u_{g(p)}^{-1}.
        for (size_t h = 0; h < l.orbit.size(); ++h)
            for (const auto& g : l.gens) {
                if (done()) return;
                int q = g(l.orbit[h]);
                Perm schreier = l.transversal[h] * g * l.rep_from(q);
                if (!schreier.is_identity()) add_generator(std::move(schreier), lev + 1);
            }
    }

    bool done() const { return target_ != 0 && order() >= target_; }

    int degree_ = 0;
    GroupOrder target_ = 0;
    std::vector<std::shared_ptr<ChainLevel>> levels_;
};

inline StabilizerChain stabilizer_chain(int degree, const std::vector<Perm>& gens,
                                        const std::vector<int>& base_hint = {}) {
    return StabilizerChain(degree, gens, base_hint);
}

// Calls f(const Perm&) once for every group element, in a deterministic order
// given by nested transversal products g = t_L * ... * t_1 * t_0.
template <class F>
void for_each_group_element(const StabilizerChain& c, F&& f) {
    Perm id(c.degree());
    auto rec = [&](auto&& self, size_t lev, const Perm& tail) -> void {
        if (lev == c.num_levels()) {
            f(tail);
            return;
        }
        for (const auto& u : c.level(lev).transversal) self(self, lev + 1, u * tail);
    };
    rec(rec, 0, id);
}

// Chain for the stabiliser of a point: rebase so pt heads the base, then drop
// the first level.
inline StabilizerChain point_stabilizer(const StabilizerChain& c, int pt) {
    StabilizerChain rebased(c.degree(), c.generators(), {pt});
    return StabilizerChain(c.degree(), rebased.level_generators(1), {});
}

inline std::vector<int> orbit(const StabilizerChain& c, int pt) {
    return c.point_orbit(pt);
}

}  // namespace metdim

#endif  // METDIM_SCHREIER_HPP
