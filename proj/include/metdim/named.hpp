#ifndef METDIM_NAMED_HPP
#define METDIM_NAMED_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/families.hpp"
#include "metdim/gf.hpp"
#include "metdim/graph.hpp"
#include "metdim/graph6.hpp"
#include "metdim/named_data.hpp"

namespace metdim {
namespace named_detail {

// Icosahedron: two pentagonal rings between two apexes (pentagonal antiprism
// plus poles). Apexes 0 and 11, upper ring 1..5, lower ring 6..10.
inline Graph icosahedron() {
    Graph g(12);
    for (int k = 0; k < 5; ++k) {
        int u = 1 + k, un = 1 + (k + 1) % 5;
        int l = 6 + k, ln = 6 + (k + 1) % 5;
        g.add_edge(0, u);
        g.add_edge(11, l);
        g.add_edge(u, un);
        g.add_edge(l, ln);
        g.add_edge(u, l);
        g.add_edge(un, l);
    }
    return g;
}

// Shrikhande graph: Cayley graph of Z4 x Z4, connection set {+-(1,0), +-(0,1),
// +-(1,1)}. Same srg parameters as H(2,4) but locally a hexagon.
inline Graph shrikhande() {
    Graph g(16);
    auto id = [](int a, int b) { return 4 * (a & 3) + (b & 3); };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            g.add_edge(id(a, b), id(a + 1, b));
            g.add_edge(id(a, b), id(a, b + 1));
            g.add_edge(id(a, b), id(a + 1, b + 1));
        }
    return g;
}

// The three Chang graphs: Seidel switching of the triangular graph T(8) (the
// line graph of K8, vertices = pairs from {0..7} in lexicographic order)
// with respect to a 4-matching, an 8-cycle, or a triangle plus a pentagon.
inline Graph chang(int which) {
    auto pairs = k_subsets(8, 2);
    int n = int(pairs.size());  // 28
    Graph t8(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (famdetail::intersection_size(pairs[a], pairs[b]) == 1) t8.add_edge(a, b);

    static const std::vector<std::vector<std::pair<int, int>>> sets = {
        {{0, 1}, {2, 3}, {4, 5}, {6, 7}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}},
        {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}},
    };
    std::vector<char> in_s(n, 0);
    for (auto [i, j] : sets.at(which)) {
        std::vector<int> p{i, j};
        auto it = std::find(pairs.begin(), pairs.end(), p);
        in_s[it - pairs.begin()] = 1;
    }
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool adj = t8.adjacent(a, b);
            if (in_s[a] != in_s[b]) adj = !adj;
            if (adj) g.add_edge(a, b);
        }
    return g;
}

// Coxeter graph: the 28 triples of Z7 that are not lines {i, i+1, i+3} of the
// Fano plane, adjacent when disjoint.
inline Graph coxeter() {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> L{i, (i + 1) % 7, (i + 3) % 7};
        std::sort(L.begin(), L.end());
        lines.push_back(L);
    }
    std::vector<std::vector<int>> verts;
    for (auto& t : k_subsets(7, 3))
        if (std::find(lines.begin(), lines.end(), t) == lines.end()) verts.push_back(t);
    int n = int(verts.size());  // 28
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (famdetail::intersection_size(verts[a], verts[b]) == 0) g.add_edge(a, b);
    return g;
}

// Schlafli graph, srg(27,16,10,8): complement of the line-intersection graph
// of a double six. Lines a_0..a_5 -> 0..5, b_0..b_5 -> 6..11, c_{ij} -> 12 +
// lexicographic rank of {i,j}. Two lines meet per the classical rules.
inline Graph schlafli() {
    auto cpairs = k_subsets(6, 2);
    auto crank = [&](int i, int j) {
        std::vector<int> p{std::min(i, j), std::max(i, j)};
        return 12 + int(std::find(cpairs.begin(), cpairs.end(), p) - cpairs.begin());
    };
    Graph meet(27);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) meet.add_edge(i, 6 + j);
    for (size_t r = 0; r < cpairs.size(); ++r) {
        int i = cpairs[r][0], j = cpairs[r][1];
        meet.add_edge(i, 12 + int(r));
        meet.add_edge(j, 12 + int(r));
        meet.add_edge(6 + i, 12 + int(r));
        meet.add_edge(6 + j, 12 + int(r));
        for (size_t s = r + 1; s < cpairs.size(); ++s)
            if (famdetail::intersection_size(cpairs[r], cpairs[s]) == 0)
                meet.add_edge(12 + int(r), 12 + int(s));
    }
    return complement(meet);
}

// Hoffman-Singleton graph, srg(50,7,0,1): five pentagons P_h and five
// pentagrams Q_j, with p_{h,i} joined to q_{j, hj+i mod 5}.
inline Graph hoffman_singleton() {
    Graph g(50);
    auto P = [](int h, int i) { return 5 * h + ((i % 5) + 5) % 5; };
    auto Q = [](int j, int i) { return 25 + 5 * j + ((i % 5) + 5) % 5; };
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) {
            g.add_edge(P(h, i), P(h, i + 1));
            g.add_edge(Q(h, i), Q(h, i + 2));
        }
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 5; ++i) g.add_edge(P(h, i), Q(j, h * j + i));
    return g;
}

// Sylvester graph (36 vertices, 5-regular): the vertices of the
// Hoffman-Singleton graph at distance 2 from both ends of an edge.
inline Graph sylvester() {
    Graph hs = hoffman_singleton();
    auto dm = distance_matrix(hs);
    int u = 0, v = hs.neighbors(0).front();
    std::vector<int> verts;
    for (int w = 0; w < hs.num_vertices(); ++w)
        if (dm.at(u, w) == 2 && dm.at(v, w) == 2) verts.push_back(w);
    return induced_subgraph(hs, verts);
}

// Blocks of the Steiner system S(3,6,22) on points {0..21}: the 21 lines of
// PG(2,4) extended by the point 21, plus one of the three equivalence classes
// of hyperovals (classes generated by "meet in an even number of points").
// Line blocks come first, then the chosen hyperovals in lexicographic order.
inline std::vector<std::vector<int>> build_s3622() {
    GF f(4);
    std::vector<std::array<int, 3>> reps;
    reps.push_back({0, 0, 1});
    for (int c = 0; c < 4; ++c) reps.push_back({0, 1, c});
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) reps.push_back({1, b, c});
    auto incident = [&](int p, int l) {
        int d = 0;
        for (int t = 0; t < 3; ++t) d = f.add(d, f.mul(reps[p][t], reps[l][t]));
        return d == 0;
    };
    std::vector<std::uint32_t> linemask(21, 0);
    for (int l = 0; l < 21; ++l)
        for (int p = 0; p < 21; ++p)
            if (incident(p, l)) linemask[l] |= std::uint32_t(1) << p;

    // hyperovals: 6-sets of points meeting every line in at most 2 points
    std::vector<std::uint32_t> ovals;
    for (auto& s : k_subsets(21, 6)) {
        std::uint32_t m = 0;
        for (int p : s) m |= std::uint32_t(1) << p;
        bool ok = true;
        for (int l = 0; l < 21 && ok; ++l)
            if (std::popcount(linemask[l] & m) > 2) ok = false;
        if (ok) ovals.push_back(m);
    }
    if (ovals.size() != 168) throw std::logic_error("s3622: hyperoval count");

    // class of the first hyperoval under even-intersection closure
    std::vector<char> picked(ovals.size(), 0);
    picked[0] = 1;
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t a : frontier)
            for (size_t b = 0; b < ovals.size(); ++b)
                if (!picked[b] && std::popcount(ovals[a] & ovals[b]) % 2 == 0) {
                    picked[b] = 1;
                    next.push_back(b);
                }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> blocks;
    for (int l = 0; l < 21; ++l) {
        std::vector<int> blk;
        for (int p = 0; p < 21; ++p)
            if (linemask[l] >> p & 1) blk.push_back(p);
        blk.push_back(21);
        blocks.push_back(blk);
    }
    int chosen = 0;
    for (size_t a = 0; a < ovals.size(); ++a) {
        if (!picked[a]) continue;
        ++chosen;
        std::vector<int> blk;
        for (int p = 0; p < 21; ++p)
            if (ovals[a] >> p & 1) blk.push_back(p);
        blocks.push_back(blk);
    }
    if (chosen != 56) throw std::logic_error("s3622: hyperoval class size");
    return blocks;
}

inline const std::vector<std::vector<int>>& s3622_blocks() {
    static const std::vector<std::vector<int>> blocks = build_s3622();
    return blocks;
}

inline std::vector<std::uint32_t> block_masks() {
    std::vector<std::uint32_t> m;
    for (auto& blk : s3622_blocks()) {
        std::uint32_t w = 0;
        for (int p : blk) w |= std::uint32_t(1) << p;
        m.push_back(w);
    }
    return m;
}

// M22 graph, srg(77,16,0,4): blocks of S(3,6,22), adjacent when disjoint.
inline Graph m22() {
    auto m = block_masks();
    Graph g(77);
    for (int a = 0; a < 77; ++a)
        for (int b = a + 1; b < 77; ++b)
            if ((m[a] & m[b]) == 0) g.add_edge(a, b);
    return g;
}

// Gewirtz graph, srg(56,10,0,2): the 56 blocks avoiding the extension point,
// adjacent when disjoint.
inline Graph gewirtz() {
    auto m = block_masks();
    std::vector<std::uint32_t> sel;
    for (auto w : m)
        if (!(w >> 21 & 1)) sel.push_back(w);
    int n = int(sel.size());  // 56
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((sel[a] & sel[b]) == 0) g.add_edge(a, b);
    return g;
}

// Higman-Sims graph, srg(100,22,0,6): a master vertex joined to the 22 points
// of S(3,6,22); points joined to the blocks containing them; blocks joined
// when disjoint. Vertex 0 = master, 1..22 = points, 23..99 = blocks.
inline Graph higman_sims() {
    auto m = block_masks();
    Graph g(100);
    for (int p = 0; p < 22; ++p) g.add_edge(0, 1 + p);
    for (int b = 0; b < 77; ++b) {
        for (int p = 0; p < 22; ++p)
            if (m[b] >> p & 1) g.add_edge(1 + p, 23 + b);
        for (int c = b + 1; c < 77; ++c)
            if ((m[b] & m[c]) == 0) g.add_edge(23 + b, 23 + c);
    }
    return g;
}

// Incidence graph of the unique 2-(11,5,2) biplane: blocks are the translates
// of the quadratic residues mod 11. Points 0..10, blocks 11..21.
inline Graph ig_biplane() {
    static const int qr[5] = {1, 3, 4, 5, 9};
    Graph g(22);
    for (int i = 0; i < 11; ++i)
        for (int r : qr) g.add_edge((i + r) % 11, 11 + i);
    return g;
}

// Incidence graph of PG(3,2): points vs planes as nonzero vectors of GF(2)^4,
// incident when the dot product vanishes. Points 0..14, planes 15..29.
inline Graph pg32_incidence() {
    Graph g(30);
    for (int p = 1; p < 16; ++p)
        for (int h = 1; h < 16; ++h)
            if (std::popcount(unsigned(p & h)) % 2 == 0) g.add_edge(p - 1, 14 + h);
    return g;
}

inline Graph biggs_smith() { return parse_graph6(BIGGS_SMITH_G6); }

}  // namespace named_detail

// Registry of named graphs usable in constructor expressions and manifests.
inline const std::map<std::string, Graph (*)()>& named_registry() {
    static const std::map<std::string, Graph (*)()> reg = {
        {"octahedron", +[] { return complete_multipartite({2, 2, 2}); }},
        {"cube", +[] { return hamming(3, 2); }},
        {"petersen", +[] { return kneser(5, 2); }},
        {"heawood", +[] { return pg2_incidence(2); }},
        {"icosahedron", &named_detail::icosahedron},
        {"clebsch", +[] { return folded_cube(5); }},
        {"shrikhande", &named_detail::shrikhande},
        {"pappus", +[] { return lcf_graph({5, 7, -7, 7, -7, -5}, 3); }},
        {"desargues", +[] { return lcf_graph({5, -5, 9, -9}, 5); }},
        {"dodecahedron",
         +[] { return lcf_graph({10, 7, 4, -4, -7, 10, -4, 7, -7, 4}, 2); }},
        {"ig_biplane", &named_detail::ig_biplane},
        {"schlafli", &named_detail::schlafli},
        {"chang1", +[] { return named_detail::chang(0); }},
        {"chang2", +[] { return named_detail::chang(1); }},
        {"chang3", +[] { return named_detail::chang(2); }},
        {"coxeter", &named_detail::coxeter},
        {"tutte8", +[] { return lcf_graph({-13, -9, 7, -7, 9, 13}, 5); }},
        {"pg32_incidence", &named_detail::pg32_incidence},
        {"hoffman_singleton", &named_detail::hoffman_singleton},
        {"sylvester", &named_detail::sylvester},
        {"gewirtz", &named_detail::gewirtz},
        {"m22", &named_detail::m22},
        {"foster", +[] { return lcf_graph({17, -9, 37, -37, 9, -17}, 15); }},
        {"higman_sims", &named_detail::higman_sims},
        {"biggs_smith", &named_detail::biggs_smith},
        {"tutte12",
         +[] {
             return lcf_graph({17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21,
                               57, 11, -21, -57, 59, -17},
                              7);
         }},
    };
    return reg;
}

inline Graph named_graph(const std::string& name) {
    auto& reg = named_registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw std::invalid_argument("named: unknown graph '" + name + "'");
    return it->second();
}

inline std::vector<std::string> named_graph_names() {
    std::vector<std::string> out;
    for (auto& [name, fn] : named_registry()) out.push_back(name);
    return out;
}

}  // namespace metdim

#endif  // METDIM_NAMED_HPP
