#ifndef METDIM_REGULARITY_HPP
#define METDIM_REGULARITY_HPP

#include <optional>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

// Intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph.
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    int diameter() const { return int(c.size()); }
    bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
};

// Checks distance-regularity by counting, for every vertex pair at distance i,
// neighbours at distance i-1 (c_i) and i+1 (b_i) from the first vertex.
// Returns the array when all counts agree, nullopt otherwise.
inline std::optional<IntersectionArray> intersection_array(const Graph& g,
                                                           const DistanceMatrix& dm) {
    int n = g.num_vertices();
    if (n == 0 || !dm.all_finite()) return std::nullopt;
    int d = dm.max_finite();
    if (d == 0) return std::nullopt;  // single vertex: not treated as distance-regular

    std::vector<int> b(d + 1, -1), c(d + 1, -1);
    for (int u = 0; u < n; ++u) {
        const uint8_t* du = dm.row(u);
        for (int v = 0; v < n; ++v) {
            int i = du[v];
            int up = 0, down = 0;
            g.row(v).for_each([&](int w) {
                if (du[w] == i + 1) ++up;
                else if (du[w] == i - 1) ++down;
            });
            if (b[i] == -1) b[i] = up;
            else if (b[i] != up) { b[0] = -2; }
            if (c[i] == -1) c[i] = down;
            else if (c[i] != down) { b[0] = -2; }
            if (b[0] == -2) return std::nullopt;
        }
    }
    IntersectionArray ia;
    ia.b.assign(b.begin(), b.end() - 1);      // b_0 .. b_{d-1}
    ia.c.assign(c.begin() + 1, c.end());      // c_1 .. c_d
    return ia;
}

inline std::optional<IntersectionArray> intersection_array(const Graph& g) {
    return intersection_array(g, distance_matrix(g));
}

// Strongly regular parameters (n, k, a, c): k-regular, adjacent pairs share a
// common neighbours, non-adjacent pairs share c.
struct SrgParams {
    int n = 0, k = 0, a = 0, c = 0;
    bool operator==(const SrgParams& o) const {
        return n == o.n && k == o.k && a == o.a && c == o.c;
    }
};

// Returns parameters when the graph is connected strongly regular with diameter 2.
inline std::optional<SrgParams> srg_parameters(const Graph& g, const DistanceMatrix& dm) {
    int n = g.num_vertices();
    if (n < 3 || !dm.all_finite() || dm.max_finite() != 2) return std::nullopt;
    int k = -1, a = -1, c = -1;
    for (int u = 0; u < n; ++u) {
        if (k == -1) k = g.degree(u);
        else if (g.degree(u) != k) return std::nullopt;
        for (int v = u + 1; v < n; ++v) {
            int common = g.row(u).count_and(g.row(v));
            if (g.adjacent(u, v)) {
                if (a == -1) a = common;
                else if (a != common) return std::nullopt;
            } else {
                if (c == -1) c = common;
                else if (c != common) return std::nullopt;
            }
        }
    }
    return SrgParams{n, k, a < 0 ? 0 : a, c < 0 ? 0 : c};
}

inline std::optional<SrgParams> srg_parameters(const Graph& g) {
    return srg_parameters(g, distance_matrix(g));
}

}  // namespace metdim

#endif  // METDIM_REGULARITY_HPP
