#include <vector>

#include "catch_amalgamated.hpp"
#include "metdim/distance.hpp"
#include "metdim/families.hpp"
#include "metdim/graph.hpp"
#include "metdim/regularity.hpp"

using namespace metdim;

namespace {

// Oracle: recount b_i / c_i for one sample pair per distance and verify the
// claimed array holds for every pair.
bool check_array_everywhere(const Graph& g, const IntersectionArray& ia) {
    auto dm = distance_matrix(g);
    int n = g.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int i = dm.at(u, v);
            int up = 0, down = 0;
            for (int w : g.neighbors(v)) {
                if (dm.at(u, w) == i + 1) ++up;
                if (dm.at(u, w) == i - 1) ++down;
            }
            int want_up = i < int(ia.b.size()) ? ia.b[i] : 0;
            int want_down = i == 0 ? 0 : ia.c[i - 1];
            if (up != want_up || down != want_down) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("intersection arrays of known graphs", "[regularity]") {
    auto pet = intersection_array(kneser(5, 2));
    REQUIRE(pet.has_value());
    REQUIRE(pet->b == std::vector<int>{3, 2});
    REQUIRE(pet->c == std::vector<int>{1, 1});
    REQUIRE(pet->diameter() == 2);
    REQUIRE(check_array_everywhere(kneser(5, 2), *pet));

    auto c6 = intersection_array(cycle(6));
    REQUIRE(c6.has_value());
    REQUIRE(c6->b == std::vector<int>{2, 1, 1});
    REQUIRE(c6->c == std::vector<int>{1, 1, 2});
    REQUIRE(check_array_everywhere(cycle(6), *c6));

    auto k4 = intersection_array(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(k4.has_value());
    REQUIRE(k4->b == std::vector<int>{3});
    REQUIRE(k4->c == std::vector<int>{1});

    auto cube = intersection_array(hamming(3, 2));
    REQUIRE(cube.has_value());
    REQUIRE(cube->b == std::vector<int>{3, 2, 1});
    REQUIRE(cube->c == std::vector<int>{1, 2, 3});
    REQUIRE(check_array_everywhere(hamming(3, 2), *cube));

    auto j52 = intersection_array(johnson(5, 2));
    REQUIRE(j52.has_value());
    REQUIRE(j52->b == std::vector<int>{6, 2});
    REQUIRE(j52->c == std::vector<int>{1, 4});
}

TEST_CASE("intersection array rejects non-DRG graphs", "[regularity]") {
    REQUIRE_FALSE(intersection_array(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
    REQUIRE_FALSE(intersection_array(build_graph(4, {{0, 1}, {2, 3}})).has_value());
    REQUIRE_FALSE(intersection_array(Graph(1)).has_value());
    // K_{1,3}: regular only in valency-degenerate sense; star is not DR
    REQUIRE_FALSE(intersection_array(build_graph(4, {{0, 1}, {0, 2}, {0, 3}})).has_value());
    // prism C3 x K2 is vertex-transitive but not distance-regular
    Graph prism = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                  {0, 3}, {1, 4}, {2, 5}});
    REQUIRE_FALSE(intersection_array(prism).has_value());
}

TEST_CASE("srg parameters of known graphs", "[regularity]") {
    REQUIRE(srg_parameters(kneser(5, 2)) == SrgParams{10, 3, 0, 1});
    REQUIRE(srg_parameters(paley(5)) == SrgParams{5, 2, 0, 1});
    REQUIRE(srg_parameters(paley(13)) == SrgParams{13, 6, 2, 3});
    REQUIRE(srg_parameters(hamming(2, 3)) == SrgParams{9, 4, 1, 2});
    REQUIRE(srg_parameters(johnson(5, 2)) == SrgParams{10, 6, 3, 4});
    REQUIRE(srg_parameters(complete_multipartite({3, 3})) == SrgParams{6, 3, 0, 3});

    REQUIRE_FALSE(srg_parameters(cycle(6)).has_value());   // diameter 3
    REQUIRE_FALSE(srg_parameters(cycle(7)).has_value());
    REQUIRE_FALSE(srg_parameters(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
}

TEST_CASE("srg and intersection array agree on diameter-2 DRGs", "[regularity]") {
    for (const Graph& g : {kneser(5, 2), paley(9), paley(13), hamming(2, 3)}) {
        auto s = srg_parameters(g);
        auto ia = intersection_array(g);
        REQUIRE(s.has_value());
        REQUIRE(ia.has_value());
        // b0 = k, c2 = c, b1 = k - a - 1
        REQUIRE(ia->b[0] == s->k);
        REQUIRE(ia->c[1] == s->c);
        REQUIRE(ia->b[1] == s->k - s->a - 1);
    }
}
