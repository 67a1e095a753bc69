#ifndef METDIM_GRAPH_HPP
#define METDIM_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metdim/bits.hpp"

namespace metdim {

// Simple undirected graph on vertices 0..n-1, adjacency kept as dense bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bits(n)) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    }

    int num_vertices() const { return n_; }

    int num_edges() const {
        int twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loop not allowed");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    const Bits& row(int v) const { return rows_[v]; }

    int degree(int v) const { return rows_[v].count(); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        rows_[v].for_each([&](int u) { out.push_back(u); });
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            rows_[u].for_each([&](int v) { if (u < v) es.emplace_back(u, v); });
        return es;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    bool is_connected() const {
        if (n_ == 0) return true;
        Bits seen(n_), frontier(n_);
        seen.set(0);
        frontier.set(0);
        while (frontier.any()) {
            Bits next(n_);
            frontier.for_each([&](int v) { next.or_with(rows_[v]); });
            next.andnot_with(seen);
            seen.or_with(next);
            frontier = next;
        }
        return seen.count() == n_;
    }

    bool is_regular(int* valency = nullptr) const {
        if (n_ == 0) return true;
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return false;
        if (valency) *valency = d;
        return true;
    }

    // Proper 2-colouring if one exists; parts returned as 0/1 labels.
    bool bipartition(std::vector<int>* side = nullptr) const {
        std::vector<int> color(n_, -1);
        for (int s = 0; s < n_; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                bool ok = true;
                rows_[u].for_each([&](int v) {
                    if (color[v] == -1) {
                        color[v] = color[u] ^ 1;
                        stack.push_back(v);
                    } else if (color[v] == color[u]) {
                        ok = false;
                    }
                });
                if (!ok) return false;
            }
        }
        if (side) *side = std::move(color);
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
    }

    int n_ = 0;
    std::vector<Bits> rows_;
};

// Builds a graph from an explicit edge list; duplicate edges collapse.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Induced subgraph; vertex i of the result is verts[i] of g.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.num_vertices())
            throw std::out_of_range("induced_subgraph: vertex out of range");
        if (seen[v]++) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    }
    int m = int(verts.size());
    Graph h(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (g.adjacent(verts[a], verts[b])) h.add_edge(a, b);
    return h;
}

inline Graph complement(const Graph& g) {
    int n = g.num_vertices();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

// Line graph; vertices are the edges of g sorted by endpoint pair.
inline Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) throw std::invalid_argument("line_graph: graph has no edges");
    int m = int(es.size());
    Graph lg(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) lg.add_edge(a, b);
        }
    return lg;
}

// Bipartite double cover: vertices v+ = v and v- = v + n, with u+ ~ w- iff u ~ w.
inline Graph bipartite_double(const Graph& g) {
    int n = g.num_vertices();
    Graph d(2 * n);
    for (auto [u, v] : g.edges()) {
        d.add_edge(u, n + v);
        d.add_edge(v, n + u);
    }
    return d;
}

// Plain text edge-list format: first line "n m", then m lines "i j".
inline Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        es.emplace_back(u, v);
    }
    return build_graph(n, es);
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.num_vertices() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace metdim

#endif  // METDIM_GRAPH_HPP
