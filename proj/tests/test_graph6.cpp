#include <random>

#include "catch_amalgamated.hpp"
#include "metdim/families.hpp"
#include "metdim/graph.hpp"
#include "metdim/graph6.hpp"

using namespace metdim;

TEST_CASE("graph6 hand-checked strings", "[graph6]") {
    // "A_" is K2: header 'A' = 2 vertices, body '_' = 100001 -> single bit set
    Graph k2 = parse_graph6("A_");
    REQUIRE(k2.num_vertices() == 2);
    REQUIRE(k2.num_edges() == 1);
    REQUIRE(k2.adjacent(0, 1));

    // "A?" is the empty graph on 2 vertices
    Graph e2 = parse_graph6("A?");
    REQUIRE(e2.num_vertices() == 2);
    REQUIRE(e2.num_edges() == 0);

    // "D??" is the empty graph on 5 vertices
    Graph e5 = parse_graph6("D??");
    REQUIRE(e5.num_vertices() == 5);
    REQUIRE(e5.num_edges() == 0);

    // C5 packs as 101001 100100: bits (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),...
    REQUIRE(parse_graph6("Dhc") == cycle(5));
    REQUIRE(to_graph6(cycle(5)) == "Dhc");

    // standard encodings produced by common tools
    REQUIRE(parse_graph6("Bw") == build_graph(3, {{0, 1}, {0, 2}, {1, 2}}));  // K3
    REQUIRE(to_graph6(build_graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    REQUIRE(to_graph6(Graph(0)) == "?");
    REQUIRE(parse_graph6("?").num_vertices() == 0);
    REQUIRE(to_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 roundtrip on random graphs", "[graph6]") {
    std::mt19937 rng(1234);
    for (int n : {1, 2, 5, 20, 61, 62, 63, 64, 90}) {
        for (int rep = 0; rep < 3; ++rep) {
            Graph g(n);
            std::uniform_int_distribution<int> pick(0, n - 1);
            int m = n * 2;
            for (int i = 0; i < m; ++i) {
                int u = pick(rng), v = pick(rng);
                if (u != v) g.add_edge(u, v);
            }
            std::string s = to_graph6(g);
            if (n <= 62) REQUIRE(s[0] != '~');
            else REQUIRE(s[0] == '~');
            REQUIRE(parse_graph6(s) == g);
        }
    }
}

TEST_CASE("graph6 roundtrip on structured graphs", "[graph6]") {
    for (const Graph& g : {cycle(7), kneser(5, 2), hamming(3, 2), johnson(6, 3)}) {
        REQUIRE(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 error handling", "[graph6]") {
    REQUIRE_THROWS_AS(parse_graph6(""), std::invalid_argument);
    // byte below '?' in header
    REQUIRE_THROWS_AS(parse_graph6("!"), std::invalid_argument);
    // body too short / too long
    REQUIRE_THROWS_AS(parse_graph6("D?"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_graph6("D???"), std::invalid_argument);
    // nonzero padding: C needs 6 bits for 3 pairs, pad must be zero
    REQUIRE_THROWS_AS(parse_graph6("B~"), std::invalid_argument);
    // bad byte inside body
    REQUIRE_THROWS_AS(parse_graph6(std::string("D") + char(200) + "?"), std::invalid_argument);
    // non-canonical long header for a small n
    REQUIRE_THROWS_AS(parse_graph6("~??A?"), std::invalid_argument);
    // truncated long header
    REQUIRE_THROWS_AS(parse_graph6("~?"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_graph6("~~???"), std::invalid_argument);
}
