#ifndef METDIM_RESOLVING_HPP
#define METDIM_RESOLVING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distance.hpp"

// Resolving-set queries.  A landmark set S resolves a connected graph when
// every vertex has a distinct vector of distances to S.

namespace metdim {

namespace detail {

inline void check_landmarks(const DistanceMatrix& dm, const std::vector<int>& s) {
    int n = dm.num_vertices();
    if (!dm.all_finite())
        throw std::invalid_argument("resolving: distance matrix has unreachable pairs");
    if (s.empty() && n > 1) throw std::invalid_argument("resolving: empty landmark set");
    for (int v : s)
        if (v < 0 || v >= n) throw std::invalid_argument("resolving: landmark out of range");
}

// Lex-first pair of vertices sharing a distance vector to s, if any.
inline std::optional<std::pair<int, int>> first_unresolved(const DistanceMatrix& dm,
                                                           const std::vector<int>& s) {
    int n = dm.num_vertices();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto cmp = [&](int a, int b) {
        for (int c : s) {
            auto da = dm.at(a, c), db = dm.at(b, c);
            if (da != db) return da < db;
        }
        return false;
    };
    auto eq = [&](int a, int b) {
        for (int c : s)
            if (dm.at(a, c) != dm.at(b, c)) return false;
        return true;
    };
    std::sort(idx.begin(), idx.end(), cmp);
    std::optional<std::pair<int, int>> best;
    for (int i = 0; i < n;) {
        int j = i + 1;
        while (j < n && eq(idx[i], idx[j])) ++j;
        if (j - i >= 2) {
            // Two smallest vertices of the clashing group form its lex-first pair.
            int lo = n, lo2 = n;
            for (int t = i; t < j; ++t) {
                int v = idx[t];
                if (v < lo) lo2 = lo, lo = v;
                else if (v < lo2) lo2 = v;
            }
            if (!best || std::make_pair(lo, lo2) < *best) best = {lo, lo2};
        }
        i = j;
    }
    return best;
}

}  // namespace detail

inline bool is_resolving(const DistanceMatrix& dm, const std::vector<int>& s) {
    detail::check_landmarks(dm, s);
    return !detail::first_unresolved(dm, s);
}

inline std::optional<std::pair<int, int>> unresolved_pair(const DistanceMatrix& dm,
                                                          const std::vector<int>& s) {
    detail::check_landmarks(dm, s);
    return detail::first_unresolved(dm, s);
}

// Incremental distance-partition refinement used by the search.  Vertices
// start in one cell; push(col) splits every cell by distance to col and pop
// undoes it.  The pushed columns resolve the graph iff every cell is a
// singleton.  Hot path: no input validation (callers pass a connected
// graph's matrix and in-range columns).
class RefinementStack {
public:
    explicit RefinementStack(const DistanceMatrix& dm) : dm_(&dm), n_(dm.num_vertices()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        cells_.push_back({0, n_});
        singles_ = n_ == 1 ? 1 : 0;
    }

    bool resolved() const { return singles_ == n_; }
    int depth() const { return int(snaps_.size()); }

    // Largest cell size.  A single extra column can split a cell into at
    // most max_distance+1 parts, so cells above that can never be finished
    // in one step.
    int max_cell() const {
        int m = 1;
        for (const auto& c : cells_) m = std::max(m, c.len);
        return m;
    }

    // True iff pushing col would make every cell a singleton.
    bool would_resolve(int col) const {
        for (const auto& c : cells_) {
            if (c.len == 1) continue;
            std::uint64_t seen[4] = {0, 0, 0, 0};
            for (int i = c.start; i < c.start + c.len; ++i) {
                int d = dm_->at(order_[i], col);
                std::uint64_t bit = std::uint64_t(1) << (d & 63);
                if (seen[d >> 6] & bit) return false;
                seen[d >> 6] |= bit;
            }
        }
        return true;
    }

    void push(int col) {
        snaps_.push_back({order_, cells_, singles_});
        std::vector<int> norder;
        norder.reserve(n_);
        std::vector<Cell> ncells;
        for (const auto& c : cells_) {
            if (c.len == 1) {
                ncells.push_back({int(norder.size()), 1});
                norder.push_back(order_[c.start]);
                continue;
            }
            // Emit sub-cells in ascending distance, preserving member order.
            split_.clear();
            for (int i = c.start; i < c.start + c.len; ++i)
                split_.emplace_back(dm_->at(order_[i], col), order_[i]);
            std::stable_sort(split_.begin(), split_.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t i = 0; i < split_.size();) {
                std::size_t j = i + 1;
                while (j < split_.size() && split_[j].first == split_[i].first) ++j;
                ncells.push_back({int(norder.size()), int(j - i)});
                for (std::size_t t = i; t < j; ++t) norder.push_back(split_[t].second);
                i = j;
            }
        }
        singles_ = 0;
        for (const auto& c : ncells)
            if (c.len == 1) ++singles_;
        order_ = std::move(norder);
        cells_ = std::move(ncells);
    }

    void pop() {
        auto& s = snaps_.back();
        order_ = std::move(s.order);
        cells_ = std::move(s.cells);
        singles_ = s.singles;
        snaps_.pop_back();
    }

private:
    struct Cell {
        int start = 0, len = 0;
    };
    struct Snap {
        std::vector<int> order;
        std::vector<Cell> cells;
        int singles = 0;
    };

    const DistanceMatrix* dm_ = nullptr;
    int n_ = 0;
    std::vector<int> order_;  // vertices grouped by cell
    std::vector<Cell> cells_;
    int singles_ = 0;
    std::vector<Snap> snaps_;
    std::vector<std::pair<std::uint8_t, int>> split_;  // scratch for push
};

}  // namespace metdim

#endif  // METDIM_RESOLVING_HPP
