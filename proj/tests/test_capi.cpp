#include <doctest.h>

#include <sepscope/sepscope.h>

#include <cstring>
#include <string>

namespace {

struct Owned {
    ss_graph* g = nullptr;
    ~Owned() { ss_graph_free(g); }
};

struct OwnedStr {
    char* s = nullptr;
    ~OwnedStr() { ss_string_free(s); }
};

} // namespace

TEST_CASE("c api construction and errors") {
    Owned g;
    const int edges[] = {0, 1, 1, 2, 0, 2};
    REQUIRE(ss_graph_from_edge_list(3, edges, 3, &g.g) == SS_OK);
    CHECK(ss_graph_order(g.g) == 3);
    CHECK(ss_graph_size(g.g) == 3);

    ss_graph* bad = nullptr;
    const int loop[] = {0, 0};
    CHECK(ss_graph_from_edge_list(2, loop, 1, &bad) == SS_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ss_last_error()).find("loop") != std::string::npos);

    CHECK(ss_graph_parse("~??", "graph6", &bad) == SS_ERR_PARSE);
    CHECK(ss_graph_from_edge_list(2, nullptr, 1, &bad) == SS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api parse encode round trip") {
    Owned g;
    REQUIRE(ss_graph_parse("Dlc", "auto", &g.g) == SS_OK);
    CHECK(ss_graph_order(g.g) == 5);
    CHECK(ss_graph_size(g.g) == 6);
    OwnedStr g6;
    REQUIRE(ss_graph_encode(g.g, "graph6", &g6.s) == SS_OK);
    CHECK(std::string(g6.s) == "Dlc");
    OwnedStr el;
    REQUIRE(ss_graph_encode(g.g, "edgelist", &el.s) == SS_OK);
    Owned back;
    REQUIRE(ss_graph_parse(el.s, "edgelist", &back.g) == SS_OK);
    CHECK(ss_graph_order(back.g) == 5);
}

TEST_CASE("c api named and generate") {
    Owned house, gamma123;
    REQUIRE(ss_graph_named("house", &house.g) == SS_OK);
    const int params[] = {1, 2, 3};
    REQUIRE(ss_generate("gamma", params, 3, &gamma123.g) == SS_OK);
    int iso = 0;
    REQUIRE(ss_isomorphic(house.g, gamma123.g, &iso) == SS_OK);
    CHECK(iso == 1);

    Owned theta;
    const int k4[] = {4};
    REQUIRE(ss_generate("theta", k4, 1, &theta.g) == SS_OK);
    CHECK(ss_graph_order(theta.g) == 10);
    CHECK(ss_graph_size(theta.g) == 12);

    ss_graph* bad = nullptr;
    CHECK(ss_generate("nope", k4, 1, &bad) == SS_ERR_INVALID_ARGUMENT);
    CHECK(ss_graph_named("nope", &bad) == SS_ERR_INVALID_ARGUMENT);
    const int bad_tw[] = {4};
    CHECK(ss_generate("twin-wheel", bad_tw, 1, &bad) == SS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api subdivide") {
    Owned k3, c6;
    REQUIRE(ss_graph_named("k3", &k3.g) == SS_OK);
    const int ones[] = {1, 1, 1};
    REQUIRE(ss_subdivide(k3.g, ones, 3, &c6.g) == SS_OK);
    Owned ref;
    REQUIRE(ss_graph_named("c6", &ref.g) == SS_OK);
    int iso = 0;
    REQUIRE(ss_isomorphic(c6.g, ref.g, &iso) == SS_OK);
    CHECK(iso == 1);
}

TEST_CASE("c api minsep") {
    Owned k5, theta3;
    REQUIRE(ss_graph_named("k5", &k5.g) == SS_OK);
    long long count = -1;
    int capped = -1;
    REQUIRE(ss_minsep_count(k5.g, -1, &count, &capped) == SS_OK);
    CHECK(count == 0);
    CHECK(capped == 0);
    const int k3[] = {3};
    REQUIRE(ss_generate("theta", k3, 1, &theta3.g) == SS_OK);
    REQUIRE(ss_minsep_count(theta3.g, -1, &count, &capped) == SS_OK);
    CHECK(count == 15);
    OwnedStr list;
    REQUIRE(ss_minsep_list(theta3.g, -1, &list.s, &capped) == SS_OK);
    CHECK(std::string(list.s).find("{0, 1}") != std::string::npos);
    REQUIRE(ss_minsep_count(theta3.g, 4, &count, &capped) == SS_OK);
    CHECK(capped == 1);
    CHECK(count == 5);
}

TEST_CASE("c api recognize and oracle") {
    Owned house;
    REQUIRE(ss_graph_named("house", &house.g) == SS_OK);
    int present = 0;
    OwnedStr witness;
    REQUIRE(ss_recognize(house.g, "house-im", 0, &present, &witness.s) == SS_OK);
    CHECK(present == 1);
    REQUIRE(witness.s != nullptr);
    CHECK(std::string(witness.s).find("long-unichord") != std::string::npos);

    Owned diamond;
    REQUIRE(ss_graph_named("diamond", &diamond.g) == SS_OK);
    int found = 0;
    OwnedStr model;
    REQUIRE(ss_oracle_contains(house.g, diamond.g, "induced-minor", &found, &model.s) == SS_OK);
    CHECK(found == 1);
    REQUIRE(model.s != nullptr);
    CHECK(std::string(model.s).find("model") != std::string::npos);

    int fvs = -1;
    REQUIRE(ss_oracle_fvs(house.g, &fvs) == SS_OK);
    CHECK(fvs == 1);

    int bad = 0;
    CHECK(ss_recognize(house.g, "bogus", 0, &bad, nullptr) == SS_ERR_INVALID_ARGUMENT);
    CHECK(ss_oracle_contains(house.g, diamond.g, "bogus", &bad, nullptr) == SS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api classify") {
    Owned butterfly;
    REQUIRE(ss_graph_named("butterfly", &butterfly.g) == SS_OK);
    int tame = -1;
    OwnedStr just;
    REQUIRE(ss_classify(butterfly.g, "itm", &tame, &just.s) == SS_OK);
    CHECK(tame == 0);
    CHECK(std::string(just.s) == "none");
    REQUIRE(ss_classify(butterfly.g, "induced-minor", &tame, nullptr) == SS_OK);
    CHECK(tame == 1);
}

TEST_CASE("c api dot export") {
    Owned house;
    REQUIRE(ss_graph_named("house", &house.g) == SS_OK);
    OwnedStr dot;
    REQUIRE(ss_graph_to_dot(house.g, "long-twin-wheel\nhole: [0, 1, 2]\ncenter: {3}\n", &dot.s) == SS_OK);
    const std::string text = dot.s;
    CHECK(text.find("graph sepscope") != std::string::npos);
    CHECK(text.find("fillcolor=gold") != std::string::npos);
}

TEST_CASE("c api experiments") {
    OwnedStr csv, log;
    int ok = -1;
    REQUIRE(ss_experiment_feral_growth("prism", 3, 4, -1, 5, &csv.s, &log.s, &ok) == SS_OK);
    CHECK(ok == 1);
    CHECK(std::string(csv.s).rfind("#sepscope-csv v1", 0) == 0);

    OwnedStr csv2, log2;
    REQUIRE(ss_experiment_dichotomy_table(&csv2.s, &log2.s, &ok) == SS_OK);
    CHECK(ok == 1);
    CHECK(std::string(csv2.s).find("im_of_prism5") != std::string::npos);

    OwnedStr csv3, log3;
    REQUIRE(ss_experiment_tame_profile("none", 4, 5, 5, 1, 0, 100, &csv3.s, &log3.s) == SS_OK);
    CHECK(std::string(csv3.s).rfind("#sepscope-csv v1", 0) == 0);
}

TEST_CASE("c api version") {
    CHECK(std::string(ss_version()).find("sepscope") != std::string::npos);
}
