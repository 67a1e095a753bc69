#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "metdim/autgroup.hpp"
#include "metdim/families.hpp"
#include "metdim/graph.hpp"

using namespace metdim;

namespace {

// Oracle: count automorphisms by trying all n! vertex permutations.
long long brute_force_aut_count(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    auto edges = g.edges();
    long long count = 0;
    do {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!g.adjacent(p[u], p[v])) {
                ok = false;
                break;
            }
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

Graph random_graph(int n, double density, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void check_generators_are_automorphisms(const Graph& g, const AutomorphismGroup& a) {
    auto edges = g.edges();
    for (const auto& p : a.generators) {
        validate_perm(p);
        for (auto [u, v] : edges) REQUIRE(g.adjacent(p(u), p(v)));
    }
}

}  // namespace

TEST_CASE("aut groups of small graphs match brute force", "[autgroup]") {
    std::vector<Graph> cases = {
        Graph(1),
        Graph(4),                                     // empty: S4, order 24
        build_graph(3, {{0, 1}, {1, 2}}),             // path: 2
        build_graph(4, {{0, 1}, {1, 2}, {2, 3}}),     // path: 2
        cycle(4),                                     // dihedral: 8
        cycle(5),                                     // 10
        cycle(6),                                     // 12
        complete_multipartite({1, 1, 1, 1}),          // K4: 24
        complete_multipartite({2, 3}),                // K_{2,3}: 2! * 3! = 12
        complete_multipartite({2, 2, 2}),             // octahedron: 48
        build_graph(4, {{0, 1}, {0, 2}, {0, 3}}),     // star: 6
        build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}),  // tadpole: 2
        build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}}),  // H shape: 2
        knn_minus_i(3),                               // C6 again: 12
        hamming(3, 2),                                // cube: 48
    };
    for (const auto& g : cases) {
        auto a = automorphism_group(g);
        check_generators_are_automorphisms(g, a);
        REQUIRE(a.order() == GroupOrder(brute_force_aut_count(g)));
    }
}

TEST_CASE("aut groups of random graphs match brute force", "[autgroup]") {
    std::mt19937 rng(555);
    for (int n : {5, 6, 7}) {
        for (double dens : {0.2, 0.5}) {
            for (int rep = 0; rep < 4; ++rep) {
                Graph g = random_graph(n, dens, rng);
                auto a = automorphism_group(g);
                check_generators_are_automorphisms(g, a);
                REQUIRE(a.order() == GroupOrder(brute_force_aut_count(g)));
            }
        }
    }
}

TEST_CASE("aut groups of named graphs have the known orders", "[autgroup]") {
    // Petersen
    REQUIRE(automorphism_group(kneser(5, 2)).order() == 120);
    // K_{3,3}: wreath 2 * (3!)^2
    REQUIRE(automorphism_group(complete_multipartite({3, 3})).order() == 72);
    // C10
    REQUIRE(automorphism_group(cycle(10)).order() == 20);
    // 3x3 rook: S3 wr S2
    REQUIRE(automorphism_group(hamming(2, 3)).order() == 72);
    // Heawood: PGL(3,2) x duality
    REQUIRE(automorphism_group(pg2_incidence(2)).order() == 336);
    // Johnson J(5,2) = triangular T(5): S5
    REQUIRE(automorphism_group(johnson(5, 2)).order() == 120);
    // Paley(13): 13 * 6
    REQUIRE(automorphism_group(paley(13)).order() == 78);
    // crown K_{5,5} - I: S5 x C2
    REQUIRE(automorphism_group(knn_minus_i(5)).order() == 240);
    // 4-cube: 2^4 * 4!
    REQUIRE(automorphism_group(hamming(4, 2)).order() == 384);
}

TEST_CASE("aut group chain exposes usable structure", "[autgroup]") {
    Graph pet = kneser(5, 2);
    auto a = automorphism_group(pet);
    REQUIRE(a.chain.num_levels() >= a.base.size());
    for (size_t i = 0; i < a.base.size(); ++i)
        REQUIRE(a.chain.level(i).base == a.base[i]);
    // every generator is a member of its own chain
    for (const auto& gp : a.generators) REQUIRE(a.chain.contains(gp));

    // vertex transitivity shows up as a single orbit
    auto orbs = vertex_orbits(pet.num_vertices(), a.generators);
    REQUIRE(orbs.size() == 1);
    REQUIRE(orbs[0].size() == 10);

    // K_{2,3} splits into its two sides
    Graph k23 = complete_multipartite({2, 3});
    auto a23 = automorphism_group(k23);
    auto orbs23 = vertex_orbits(5, a23.generators);
    REQUIRE(orbs23.size() == 2);
}
