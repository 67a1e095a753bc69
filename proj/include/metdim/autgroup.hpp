#ifndef METDIM_AUTGROUP_HPP
#define METDIM_AUTGROUP_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "metdim/bits.hpp"
#include "metdim/graph.hpp"
#include "metdim/perm.hpp"
#include "metdim/schreier.hpp"

namespace metdim {

namespace detail {

// Ordered partition of the vertex set with equitable refinement. Cells live in
// stable slots; display order is tracked separately so slot ids survive
// splitting. Fragments produced by a split are ordered by their numeric count
// key, which keeps the refinement isomorphism-invariant.
class OrderedPartition {
public:
    explicit OrderedPartition(int n) : n_(n), cell_of_(n, 0) {
        if (n > 0) {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            cells_.push_back(std::move(all));
            order_.push_back(0);
        }
    }

    int num_cells() const { return int(order_.size()); }
    const std::vector<int>& cell_at(int pos) const { return cells_[order_[pos]]; }
    bool discrete() const { return int(order_.size()) == n_; }

    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(order_.size());
        for (int slot : order_) s.push_back(int(cells_[slot].size()));
        return s;
    }

    // Position of the leftmost smallest non-singleton cell, or -1 if discrete.
    int target_cell() const {
        int best = -1;
        size_t best_size = 0;
        for (size_t k = 0; k < order_.size(); ++k) {
            size_t sz = cells_[order_[k]].size();
            if (sz > 1 && (best < 0 || sz < best_size)) {
                best = int(k);
                best_size = sz;
            }
        }
        return best;
    }

    // Vertex order of a discrete partition: position -> vertex.
    std::vector<int> leaf_order() const {
        std::vector<int> out;
        out.reserve(order_.size());
        for (int slot : order_) out.push_back(cells_[slot].front());
        return out;
    }

    void refine_all(const Graph& g) { refine(g, order_); }

    // Splits v off as a singleton ahead of the rest of its cell, then refines
    // back to a stable partition.
    void individualize_refine(const Graph& g, int v) {
        int slot = cell_of_[v];
        auto& c = cells_[slot];
        if (c.size() <= 1) return;
        std::vector<int> rest;
        rest.reserve(c.size() - 1);
        for (int u : c)
            if (u != v) rest.push_back(u);
        c = {v};
        int fresh = new_slot(std::move(rest), slot);
        refine(g, {slot, fresh});
    }

private:
    int new_slot(std::vector<int> content, int after_slot) {
        int id = int(cells_.size());
        for (int u : content) cell_of_[u] = id;
        cells_.push_back(std::move(content));
        auto it = std::find(order_.begin(), order_.end(), after_slot);
        order_.insert(it + 1, id);
        return id;
    }

    void refine(const Graph& g, std::vector<int> seed) {
        std::deque<int> queue(seed.begin(), seed.end());
        std::vector<bool> queued(cells_.size(), false);
        for (int s : queue) queued[s] = true;
        Bits mask(n_);
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            queued[s] = false;
            mask.clear();
            for (int u : cells_[s]) mask.set(u);
            std::vector<int> snapshot = order_;
            for (int slot : snapshot) {
                if (cells_[slot].size() <= 1) continue;
                std::map<int, std::vector<int>> frag;
                for (int u : cells_[slot]) frag[g.row(u).count_and(mask)].push_back(u);
                if (frag.size() <= 1) continue;
                auto it = frag.begin();
                cells_[slot] = std::move(it->second);
                int prev = slot;
                std::vector<int> created{slot};
                for (++it; it != frag.end(); ++it) {
                    prev = new_slot(std::move(it->second), prev);
                    created.push_back(prev);
                }
                queued.resize(cells_.size(), false);
                for (int id : created)
                    if (!queued[id]) {
                        queued[id] = true;
                        queue.push_back(id);
                    }
            }
        }
    }

    int n_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<int> order_;  // slots in display order
    std::vector<int> cell_of_;
};

}  // namespace detail

struct AutomorphismGroup {
    std::vector<Perm> generators;  // verified automorphisms found by the search
    std::vector<int> base;         // individualised vertices along the left path
    StabilizerChain chain;         // chain with the base forced, one level each

    GroupOrder order() const { return chain.order(); }
};

// Orbits of <gens> on 0..degree-1, each sorted, ordered by least element.
inline std::vector<std::vector<int>> vertex_orbits(int degree,
                                                   const std::vector<Perm>& gens) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree, false);
    for (int v = 0; v < degree; ++v) {
        if (seen[v]) continue;
        std::vector<int> orb{v};
        seen[v] = true;
        for (size_t h = 0; h < orb.size(); ++h)
            for (const auto& gp : gens) {
                int q = gp(orb[h]);
                if (!seen[q]) {
                    seen[q] = true;
                    orb.push_back(q);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

namespace detail {

// Partition backtracking for the automorphism group. The left path fixes a
// base; the search maps base points to other members of their cells, pruning
// by refinement-trace mismatch and by orbits of the group found so far. A
// subtree off the spine only needs one automorphism (coset representative).
class AutSearch {
public:
    explicit AutSearch(const Graph& graph)
        : g_(graph), n_(graph.num_vertices()), edges_(graph.edges()) {}

    AutomorphismGroup run() {
        build_left();
        search(left_.front(), 0, true);
        return AutomorphismGroup{std::move(found_), std::move(base_),
                                 std::move(*chain_)};
    }

private:
    void build_left() {
        OrderedPartition p(n_);
        p.refine_all(g_);
        left_.push_back(std::move(p));
        while (!left_.back().discrete()) {
            int k = left_.back().target_cell();
            int b = left_.back().cell_at(k).front();
            base_.push_back(b);
            OrderedPartition q = left_.back();
            q.individualize_refine(g_, b);
            trace_.push_back(q.sizes());
            left_.push_back(std::move(q));
        }
        leaf0_ = left_.back().leaf_order();
        chain_ = std::make_unique<StabilizerChain>(n_, std::vector<Perm>{}, base_);
    }

    bool is_automorphism(const Perm& p) const {
        for (auto [u, v] : edges_)
            if (!g_.adjacent(p(u), p(v))) return false;
        return true;
    }

    // Returns true if an automorphism was found in this subtree.
    bool search(const OrderedPartition& part, size_t depth, bool spine) {
        if (part.discrete()) {
            auto leaf = part.leaf_order();
            Perm p(n_);
            for (int pos = 0; pos < n_; ++pos) p.img[leaf0_[pos]] = leaf[pos];
            if (p.is_identity() || !is_automorphism(p)) return false;
            found_.push_back(std::move(p));
            chain_ = std::make_unique<StabilizerChain>(n_, found_, base_);
            return true;
        }
        int k = part.target_cell();
        const std::vector<int> cellv = part.cell_at(k);
        bool found_any = false;
        for (int w : cellv) {
            if (spine && w != base_[depth] && chain_->level(depth).in_orbit(w))
                continue;
            OrderedPartition child = part;
            child.individualize_refine(g_, w);
            if (child.sizes() != trace_[depth]) continue;
            bool hit = search(child, depth + 1, spine && w == base_[depth]);
            found_any = found_any || hit;
            if (hit && !spine) return true;
        }
        return found_any;
    }

    const Graph& g_;
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<OrderedPartition> left_;     // stable partition at each depth
    std::vector<int> base_;                  // vertex individualised at depth i
    std::vector<std::vector<int>> trace_;    // cell sizes of left_[i+1]
    std::vector<int> leaf0_;                 // vertex order at the left leaf
    std::vector<Perm> found_;
    std::unique_ptr<StabilizerChain> chain_;
};

}  // namespace detail

// Automorphism group of a graph, as verified generators plus a stabilizer
// chain over the search base.
inline AutomorphismGroup automorphism_group(const Graph& g) {
    detail::AutSearch s(g);
    return s.run();
}

}  // namespace metdim

#endif  // METDIM_AUTGROUP_HPP
