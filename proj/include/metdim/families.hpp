#ifndef METDIM_FAMILIES_HPP
#define METDIM_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metdim/gf.hpp"
#include "metdim/graph.hpp"

namespace metdim {

// Complete multipartite graph; parts laid out consecutively in the given order.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    for (int m : parts)
        if (m < 1) throw std::invalid_argument("complete_multipartite: bad part size");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[v++] = int(p);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) g.add_edge(u, w);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k == 0) { out.push_back({}); return out; }
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace famdetail {

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++c; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return c;
}

}  // namespace famdetail

// Johnson graph J(n, k): k-subsets adjacent when they share k-1 elements.
inline Graph johnson(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("johnson: need 1 <= k <= n");
    auto verts = k_subsets(n, k);
    Graph g(int(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (famdetail::intersection_size(verts[a], verts[b]) == k - 1)
                g.add_edge(int(a), int(b));
    return g;
}

// Kneser graph K(n, k): k-subsets adjacent when disjoint.
inline Graph kneser(int n, int k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser: need n >= 2k, k >= 1");
    auto verts = k_subsets(n, k);
    Graph g(int(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (famdetail::intersection_size(verts[a], verts[b]) == 0)
                g.add_edge(int(a), int(b));
    return g;
}

// Hamming graph H(d, q): words of length d over q symbols, adjacent at Hamming
// distance 1. Vertex v encodes the word whose i-th letter is (v / q^i) % q.
inline Graph hamming(int d, int q) {
    if (d < 1 || q < 2) throw std::invalid_argument("hamming: need d >= 1, q >= 2");
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= q;
        if (n > 100000) throw std::invalid_argument("hamming: graph too large");
    }
    Graph g{int(n)};
    for (int v = 0; v < int(n); ++v) {
        long long place = 1;
        for (int i = 0; i < d; ++i, place *= q) {
            int digit = int(v / place) % q;
            for (int c = digit + 1; c < q; ++c)
                g.add_edge(v, int(v + place * (c - digit)));
        }
    }
    return g;
}

// LCF notation [s_0, ..., s_{m-1}]^r: a Hamiltonian cubic graph on n = m*r
// vertices, cycle 0..n-1 plus chords v ~ v + s_{v mod m}.
inline Graph lcf_graph(const std::vector<int>& shifts, int repeats) {
    int m = int(shifts.size());
    if (m < 1 || repeats < 1)
        throw std::invalid_argument("lcf_graph: empty pattern");
    int n = m * repeats;
    if (n < 3) throw std::invalid_argument("lcf_graph: too few vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    for (int v = 0; v < n; ++v) {
        int s = shifts[v % m] % n;
        g.add_edge(v, (v + s + n) % n);
    }
    if (!g.is_regular() || g.degree(0) != 3)
        throw std::invalid_argument("lcf_graph: notation does not give a cubic graph");
    return g;
}

// Folded d-cube: antipodal quotient of the d-cube. Realised on binary words of
// length d-1, adjacent when their XOR has weight 1 or d-1.
inline Graph folded_cube(int d) {
    if (d < 2 || d > 17) throw std::invalid_argument("folded_cube: need 2 <= d <= 17");
    int n = 1 << (d - 1);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int w = std::popcount(unsigned(u ^ v));
            if (w == 1 || w == d - 1) g.add_edge(u, v);
        }
    return g;
}

// Paley graph on GF(q), q = 1 (mod 4): x ~ y iff x - y is a nonzero square.
inline Graph paley(int q) {
    if (q % 4 != 1) throw std::invalid_argument("paley: order must be 1 mod 4");
    GF f(q);  // rejects orders other than p or p^2
    auto sq = f.square_table();
    Graph g(q);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (sq[f.sub(u, v)]) g.add_edge(u, v);
    return g;
}

// K_{n,n} minus a perfect matching: left i = i, right i = n + i, i ~ n + j iff i != j.
inline Graph knn_minus_i(int n) {
    if (n < 2) throw std::invalid_argument("knn_minus_i: need n >= 2");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.add_edge(i, n + j);
    return g;
}

// Incidence graph of the projective plane PG(2, q). Points and lines are the
// 1-dimensional subspaces of GF(q)^3 in either role, numbered by their
// normalised coordinate triple (first nonzero entry 1) in lexicographic order:
// (0,0,1), then (0,1,c), then (1,b,c). Point p and line l are incident when
// their coordinate dot product vanishes. Vertices: points 0..N-1, lines N..2N-1.
inline Graph pg2_incidence(int q) {
    GF f(q);
    std::vector<std::array<int, 3>> reps;
    reps.push_back({0, 0, f.one()});
    for (int c = 0; c < q; ++c) reps.push_back({0, f.one(), c});
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) reps.push_back({f.one(), b, c});
    int N = int(reps.size());  // q^2 + q + 1
    Graph g(2 * N);
    for (int p = 0; p < N; ++p)
        for (int l = 0; l < N; ++l) {
            int dot = 0;
            for (int t = 0; t < 3; ++t)
                dot = f.add(dot, f.mul(reps[p][t], reps[l][t]));
            if (dot == f.zero()) g.add_edge(p, N + l);
        }
    return g;
}

}  // namespace metdim

#endif  // METDIM_FAMILIES_HPP
