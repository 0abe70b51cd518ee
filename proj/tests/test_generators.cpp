#include <doctest.h>

#include "generators.hpp"
#include "graph.hpp"

using namespace sepscope;

TEST_CASE("k-theta") {
    CHECK_THROWS_AS(k_theta(2), input_error);
    for (int k = 3; k <= 12; ++k) {
        Graph g = k_theta(k);
        CHECK(g.order() == 2 * k + 2);
        CHECK(g.size() == 3 * k);
    }
    Graph t4 = k_theta(4);
    CHECK(!t4.has_edge(0, 1));
    CHECK(t4.degree(0) == 4);
    CHECK(t4.degree(1) == 4);
    // every a,b-path has length 3: a's neighbors are the a_i, each a_i sees
    // only a and its b_i, each b_i sees only its a_i and b
    for (int i = 0; i < 4; ++i) {
        const int ai = 2 + i, bi = 2 + 4 + i;
        CHECK(t4.neighbors(ai) == std::vector<int>{0, bi});
        CHECK(t4.neighbors(bi) == std::vector<int>{1, ai});
    }
}

TEST_CASE("k-prism") {
    CHECK_THROWS_AS(k_prism(2), input_error);
    for (int k = 3; k <= 12; ++k) {
        Graph g = k_prism(k);
        CHECK(g.order() == 2 * k);
        CHECK(g.size() == k * (k - 1) + k);
    }
    CHECK(is_isomorphic(k_prism(3), complement(cycle_graph(6))));
    // deleting the matched pair a_k, b_k leaves the (k-1)-prism
    for (int k = 4; k <= 6; ++k) {
        Graph g = k_prism(k);
        VertexSet keep;
        for (int v = 0; v < 2 * k; ++v)
            if (v != k - 1 && v != 2 * k - 1) keep.push_back(v);
        CHECK(induced_subgraph(g, keep) == k_prism(k - 1));
    }
}

TEST_CASE("k-skinny-ladder") {
    CHECK_THROWS_AS(k_skinny_ladder(0), input_error);
    CHECK(is_isomorphic(k_skinny_ladder(1), path_graph(3)));
    CHECK(is_isomorphic(k_skinny_ladder(3), gamma(2, 4, 4)));
    Graph g = k_skinny_ladder(4);
    CHECK(g.order() == 12);
    // R independent, anticomplete to non-matched path vertices
    for (int i = 0; i < 4; ++i) {
        const int ri = 8 + i;
        CHECK(g.neighbors(ri) == std::vector<int>{i, 4 + i});
    }
}

TEST_CASE("k-creature") {
    // minimal spec is the 3-theta
    CreatureSpec minimal;
    minimal.k = 3;
    minimal.a_size = minimal.b_size = 1;
    minimal.attach_a = {{0}, {0}, {0}};
    minimal.attach_b = {{0}, {0}, {0}};
    CreatureLayout lay;
    Graph g = k_creature(minimal, &lay);
    CHECK(is_isomorphic(g, k_theta(3)));
    CHECK_NOTHROW(validate_creature(g, lay));

    // an A-B edge violates axiom (ii)
    CreatureSpec bad = minimal;
    bad.a_size = bad.b_size = 1;
    bad.extra_edges = {{0, 7}}; // A vertex 0, B vertex 1+2*3 = 7
    try {
        k_creature(bad);
        CHECK(false);
    } catch (const construction_error& e) {
        CHECK(std::string(e.what()).find("(ii)") != std::string::npos);
    }

    // empty attachment violates axiom (iii)
    CreatureSpec no_attach = minimal;
    no_attach.attach_a = {{0}, {}, {0}};
    CHECK_THROWS_AS(k_creature(no_attach), construction_error);

    // disconnected A violates axiom (i)
    CreatureSpec disc;
    disc.k = 2;
    disc.a_size = 2;
    disc.b_size = 1;
    disc.attach_a = {{0}, {1}};
    disc.attach_b = {{0}, {0}};
    try {
        k_creature(disc);
        CHECK(false);
    } catch (const construction_error& e) {
        CHECK(std::string(e.what()).find("(i)") != std::string::npos);
    }

    // the generator's own outputs always validate
    for (int k = 1; k <= 4; ++k)
        for (bool xc : {false, true})
            for (bool yc : {false, true}) {
                CreatureLayout l2;
                Graph c = k_creature(standard_creature_spec(k, 2, 3, xc, yc), &l2);
                CHECK_NOTHROW(validate_creature(c, l2));
                CHECK(c.order() == 2 + 3 + 2 * k);
            }
}

TEST_CASE("gamma") {
    CHECK(is_isomorphic(gamma(1, 2, 3), house_graph()));
    CHECK(is_isomorphic(gamma(2, 2, 2), complete_bipartite(2, 3)));
    CHECK(is_isomorphic(gamma(1, 2, 2), diamond_graph()));
    CHECK_THROWS_AS(gamma(1, 1, 3), input_error);
    CHECK_THROWS_AS(gamma(0, 2, 3), input_error);
    CHECK(gamma(2, 3, 4).order() == 2 + 3 + 4 - 1);
    // hole condition: with all lengths >= 2 every pair union is a chordless cycle
    for (int i = 2; i <= 3; ++i)
        for (int j = i; j <= 4; ++j)
            for (int k = j; k <= 4; ++k) CHECK_NOTHROW(validate_gamma(gamma(i, j, k), i, j, k));
    // a,b adjacent exactly when some length is 1
    CHECK(gamma(1, 2, 4).has_edge(0, 1));
    CHECK(!gamma(2, 2, 3).has_edge(0, 1));
}

TEST_CASE("long twin wheel") {
    Graph w5 = long_twin_wheel(5);
    CHECK(w5.order() == 6);
    CHECK(w5.size() == 8);
    CHECK(w5.degree(5) == 3);
    // center neighborhood induces a P3 on the hole
    CHECK(is_isomorphic(induced_subgraph(w5, {0, 1, 2}), path_graph(3)));
    CHECK_THROWS_AS(long_twin_wheel(4), input_error);
    for (int L = 5; L <= 9; ++L) {
        Graph w = long_twin_wheel(L);
        CHECK(w.order() == L + 1);
        CHECK(w.size() == L + 3);
    }
}

TEST_CASE("subdivide") {
    Graph k3 = complete_graph(3);
    CHECK(is_isomorphic(subdivide(k3, {1, 1, 1}), cycle_graph(6)));
    // subdividing the house's base chord once gives gamma(2,2,3)
    Graph house = house_graph();
    REQUIRE(house.edges()[1] == Edge{0, 3});
    CHECK(is_isomorphic(subdivide(house, {0, 1, 0, 0, 0, 0}), gamma(2, 2, 3)));
    CHECK(subdivide(house, {0, 0, 0, 0, 0, 0}) == house);
    CHECK_THROWS_AS(subdivide(house, {1, 1}), input_error);
    CHECK_THROWS_AS(subdivide(house, {0, -1, 0, 0, 0, 0}), input_error);
}
