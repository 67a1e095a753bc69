#ifndef METDIM_DISTANCE_HPP
#define METDIM_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

// All-pairs shortest path table, one byte per entry.
class DistanceMatrix {
public:
    static constexpr uint8_t UNREACHABLE = 255;

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(size_t(n) * n, UNREACHABLE) {}

    int num_vertices() const { return n_; }
    uint8_t at(int u, int v) const { return d_[size_t(u) * n_ + v]; }
    uint8_t& at(int u, int v) { return d_[size_t(u) * n_ + v]; }
    const uint8_t* row(int u) const { return d_.data() + size_t(u) * n_; }

    // Largest finite entry; 0 for the one-vertex graph.
    int max_finite() const {
        int m = 0;
        for (auto x : d_)
            if (x != UNREACHABLE && x > m) m = x;
        return m;
    }

    bool all_finite() const {
        for (auto x : d_)
            if (x == UNREACHABLE) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<uint8_t> d_;
};

// BFS from every vertex. Disconnected pairs stay UNREACHABLE.
inline DistanceMatrix distance_matrix(const Graph& g) {
    int n = g.num_vertices();
    DistanceMatrix dm(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int head = 0, tail = 0;
        queue[tail++] = s;
        dm.at(s, s) = 0;
        while (head < tail) {
            int u = queue[head++];
            int du = dm.at(s, u);
            if (du + 1 >= int(DistanceMatrix::UNREACHABLE))
                throw std::invalid_argument("distance_matrix: diameter out of range");
            g.row(u).for_each([&](int v) {
                if (dm.at(s, v) == DistanceMatrix::UNREACHABLE) {
                    dm.at(s, v) = uint8_t(du + 1);
                    queue[tail++] = v;
                }
            });
        }
    }
    return dm;
}

// Diameter of a connected graph.
inline int diameter(const DistanceMatrix& dm) {
    if (!dm.all_finite())
        throw std::invalid_argument("diameter: graph is disconnected");
    return dm.max_finite();
}

// Graph on the same vertex set joining pairs at distance exactly i.
inline Graph distance_graph(const DistanceMatrix& dm, int i) {
    if (i < 1 || i >= int(DistanceMatrix::UNREACHABLE))
        throw std::invalid_argument("distance_graph: bad distance");
    int n = dm.num_vertices();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dm.at(u, v) == i) g.add_edge(u, v);
    return g;
}

inline Graph distance_graph(const Graph& g, int i) {
    return distance_graph(distance_matrix(g), i);
}

// Subgraph induced on the vertices at distance exactly i from vertex 0,
// kept in increasing label order.
inline Graph subconstituent(const Graph& g, int i) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("subconstituent: empty graph");
    if (i < 0 || i >= int(DistanceMatrix::UNREACHABLE))
        throw std::invalid_argument("subconstituent: bad distance");
    auto dm = distance_matrix(g);
    std::vector<int> verts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dm.at(0, v) == i) verts.push_back(v);
    if (verts.empty())
        throw std::invalid_argument("subconstituent: no vertices at that distance");
    return induced_subgraph(g, verts);
}

// Halved graph of a connected bipartite graph: the distance-2 graph on the
// colour class of vertex 0, classes kept in increasing label order.
inline Graph halved(const Graph& g) {
    std::vector<int> side;
    if (g.num_vertices() == 0 || !g.is_connected() || !g.bipartition(&side))
        throw std::invalid_argument("halved: need a connected bipartite graph");
    auto dm = distance_matrix(g);
    std::vector<int> verts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (side[v] == side[0]) verts.push_back(v);
    int m = int(verts.size());
    Graph h(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (dm.at(verts[a], verts[b]) == 2) h.add_edge(a, b);
    return h;
}

// Length of a shortest odd cycle, if any. BFS parity: an edge joining two
// vertices at equal distance from some root closes an odd cycle.
inline std::optional<int> odd_girth(const Graph& g) {
    int n = g.num_vertices();
    std::optional<int> best;
    auto edges = g.edges();
    std::vector<int> dist(n), queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = s;
        dist[s] = 0;
        while (head < tail) {
            int u = queue[head++];
            g.row(u).for_each([&](int v) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    queue[tail++] = v;
                }
            });
        }
        for (auto [u, v] : edges) {
            if (dist[u] >= 0 && dist[u] == dist[v]) {
                int len = 2 * dist[u] + 1;
                if (!best || len < *best) best = len;
            }
        }
    }
    return best;
}

}  // namespace metdim

#endif  // METDIM_DISTANCE_HPP
