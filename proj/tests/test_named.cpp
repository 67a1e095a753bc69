#include <map>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "metdim/autgroup.hpp"
#include "metdim/distance.hpp"
#include "metdim/named.hpp"
#include "metdim/regularity.hpp"

using namespace metdim;

namespace {

GroupOrder aut_order(const Graph& g) { return automorphism_group(g).order(); }

void check_ia(const Graph& g, const std::vector<int>& b, const std::vector<int>& c) {
    auto ia = intersection_array(g);
    REQUIRE(ia.has_value());
    REQUIRE(ia->b == b);
    REQUIRE(ia->c == c);
}

}  // namespace

TEST_CASE("named registry basics", "[named]") {
    auto names = named_graph_names();
    REQUIRE(names.size() == 26);
    for (auto& nm : names) {
        Graph g = named_graph(nm);
        REQUIRE(g.num_vertices() >= 6);
        REQUIRE(g.is_connected());
        REQUIRE(g.is_regular());
    }
    REQUIRE_THROWS_AS(named_graph("nonesuch"), std::invalid_argument);
}

TEST_CASE("named strongly regular graphs", "[named]") {
    // Each srg identified by parameters; lookalikes separated by |Aut|.
    REQUIRE(srg_parameters(named_graph("shrikhande")) == SrgParams{16, 6, 2, 2});
    REQUIRE(aut_order(named_graph("shrikhande")) == 192);    // H(2,4) has 1152
    REQUIRE(srg_parameters(hamming(2, 4)) == SrgParams{16, 6, 2, 2});
    REQUIRE(aut_order(hamming(2, 4)) == 1152);

    // the three Chang graphs share srg(28,12,6,4) with T(8) = L(K8) but have
    // pairwise different automorphism groups, none of order 8!
    std::vector<GroupOrder> orders;
    for (auto nm : {"chang1", "chang2", "chang3"}) {
        Graph g = named_graph(nm);
        REQUIRE(srg_parameters(g) == SrgParams{28, 12, 6, 4});
        orders.push_back(aut_order(g));
    }
    REQUIRE(orders == std::vector<GroupOrder>{384, 96, 360});

    REQUIRE(srg_parameters(named_graph("schlafli")) == SrgParams{27, 16, 10, 8});
    REQUIRE(aut_order(named_graph("schlafli")) == 51840);

    REQUIRE(srg_parameters(named_graph("hoffman_singleton")) == SrgParams{50, 7, 0, 1});
    REQUIRE(aut_order(named_graph("hoffman_singleton")) == 252000);

    REQUIRE(srg_parameters(named_graph("gewirtz")) == SrgParams{56, 10, 0, 2});
    REQUIRE(aut_order(named_graph("gewirtz")) == 80640);

    REQUIRE(srg_parameters(named_graph("m22")) == SrgParams{77, 16, 0, 4});
    REQUIRE(aut_order(named_graph("m22")) == 887040);

    REQUIRE(srg_parameters(named_graph("higman_sims")) == SrgParams{100, 22, 0, 6});
    REQUIRE(aut_order(named_graph("higman_sims")) == 88704000);

    REQUIRE(srg_parameters(named_graph("clebsch")) == SrgParams{16, 5, 0, 2});
}

TEST_CASE("named distance-regular graphs", "[named]") {
    check_ia(named_graph("icosahedron"), {5, 2, 1}, {1, 2, 5});
    REQUIRE(aut_order(named_graph("icosahedron")) == 120);

    check_ia(named_graph("coxeter"), {3, 2, 2, 1}, {1, 1, 1, 2});
    REQUIRE(aut_order(named_graph("coxeter")) == 336);

    check_ia(named_graph("ig_biplane"), {5, 4, 3}, {1, 2, 5});
    REQUIRE(aut_order(named_graph("ig_biplane")) == 1320);

    check_ia(named_graph("pg32_incidence"), {7, 6, 4}, {1, 3, 7});
    REQUIRE(aut_order(named_graph("pg32_incidence")) == 40320);

    check_ia(named_graph("sylvester"), {5, 4, 2}, {1, 1, 4});
    REQUIRE(aut_order(named_graph("sylvester")) == 1440);

    // the cubic cages and friends, each pinned by its intersection array
    check_ia(named_graph("pappus"), {3, 2, 2, 1}, {1, 1, 2, 3});
    check_ia(named_graph("desargues"), {3, 2, 2, 1, 1}, {1, 1, 2, 2, 3});
    check_ia(named_graph("dodecahedron"), {3, 2, 1, 1, 1}, {1, 1, 1, 2, 3});
    check_ia(named_graph("tutte8"), {3, 2, 2, 2}, {1, 1, 1, 3});
    check_ia(named_graph("foster"), {3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3});
    check_ia(named_graph("biggs_smith"), {3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3});
    check_ia(named_graph("tutte12"), {3, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 3});

    REQUIRE(aut_order(named_graph("tutte8")) == 1440);
    REQUIRE(aut_order(named_graph("foster")) == 4320);
    REQUIRE(aut_order(named_graph("biggs_smith")) == 2448);  // PSL(2,17)
    REQUIRE(aut_order(named_graph("tutte12")) == 12096);
}

TEST_CASE("named aliases agree with family constructions", "[named]") {
    REQUIRE(named_graph("petersen") == kneser(5, 2));
    REQUIRE(named_graph("cube") == hamming(3, 2));
    REQUIRE(named_graph("heawood") == pg2_incidence(2));
    REQUIRE(named_graph("clebsch") == folded_cube(5));
    REQUIRE(named_graph("octahedron") == complete_multipartite({2, 2, 2}));

    // lcf desargues is isomorphic to the doubled Petersen graph (same
    // intersection array; the cubic drgs are determined by their arrays)
    REQUIRE(*intersection_array(named_graph("desargues")) ==
            *intersection_array(bipartite_double(kneser(5, 2))));
}

TEST_CASE("steiner system behind the block graphs", "[named]") {
    auto& blocks = named_detail::s3622_blocks();
    REQUIRE(blocks.size() == 77);
    for (auto& blk : blocks) REQUIRE(blk.size() == 6);

    // S(3,6,22): every 3-subset of the 22 points lies in exactly one block
    std::map<std::vector<int>, int> triples;
    for (auto& blk : blocks)
        for (size_t a = 0; a < 6; ++a)
            for (size_t b = a + 1; b < 6; ++b)
                for (size_t c = b + 1; c < 6; ++c)
                    ++triples[{blk[a], blk[b], blk[c]}];
    REQUIRE(triples.size() == 1540);  // C(22,3)
    for (auto& [t, cnt] : triples) REQUIRE(cnt == 1);
}
