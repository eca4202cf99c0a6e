#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rsk/corpus.hpp"
#include "rsk/json_io.hpp"
#include "rsk/octahedron.hpp"

using namespace rsk;

TEST_CASE("partition wire format") {
    CHECK(to_json(Partition({3, 2, 1})) == json::parse("[3,2,1]"));
    CHECK(partition_from_json(json::parse("[3,2,1]")) == Partition({3, 2, 1}));
    CHECK(partition_from_json(json::parse("[]")) == Partition{});
    CHECK_THROWS_AS(partition_from_json(json::parse("{}")), ParseError);
    CHECK_THROWS_AS(partition_from_json(json::parse("[2,3]")), ParseError);
    CHECK_THROWS_AS(partition_from_json(json::parse("[1.5]")), ParseError);
}

TEST_CASE("box wire format") {
    CHECK(to_json(Box{2, 3}) == json::parse("[2,3]"));
    CHECK(box_from_json(json::parse("[2,3]")) == Box{2, 3});
    CHECK_THROWS_AS(box_from_json(json::parse("[2]")), ParseError);
    CHECK(boxes_from_json(json::parse("[[1,1],[1,2]]")) ==
          std::vector<Box>{{1, 1}, {1, 2}});
}

TEST_CASE("tableau wire format accepts both spellings") {
    NTableau t = NTableau::from_rows({{1, 2}, {3}});
    json full = to_json(t);
    CHECK(full["shape"] == json::parse("[2,1]"));
    CHECK(full["rows"] == json::parse("[[1,2],[3]]"));
    CHECK(tableau_from_json(full) == t);
    CHECK(tableau_from_json(json::parse("[[1,2],[3]]")) == t);
    CHECK(tableau_from_json(json::parse("{\"shape\":[2,1],\"rows\":[[1,2],[3]]}")) == t);
    CHECK_THROWS_AS(tableau_from_json(json::parse("{\"rows\":[[1]]}")), ParseError);
    CHECK_THROWS_AS(tableau_from_json(json::parse("[[1],[2,3]]")), ParseError);
    CHECK_THROWS_AS(tableau_from_json(json::parse("[[-1]]")), ParseError);
    CHECK_THROWS_AS(tableau_from_json(json::parse("{\"shape\":[2],\"rows\":[[1]]}")), ParseError);
}

TEST_CASE("tableau round-trips through json") {
    for (int i = 0; i < 50; ++i) {
        Rng rng(14'000 + i);
        NTableau t = random_tableau(rng, 10, 6);
        CHECK(tableau_from_json(to_json(t)) == t);
    }
}

TEST_CASE("pattern and pyramid serialisations are stable") {
    GtPattern g({{4, 2, 1}, {4, 1}, {2}});
    CHECK(to_json(g) == json::parse("[[4,2,1],[4,1],[2]]"));
    NTableau t = NTableau::from_rows({{1}});
    json dumped = to_json(build_u(t));
    REQUIRE(dumped.is_array());
    // Levels k = 0 (nine points around the single box) come first.
    CHECK(dumped[0] == json::parse("{\"i\":-1,\"j\":-1,\"k\":0,\"v\":0}"));
    bool saw_seed = false;
    for (const json& cell : dumped)
        if (cell["k"] == 1 && cell["i"] == 1 && cell["j"] == 1) {
            CHECK(cell["v"] == 1);
            saw_seed = true;
        }
    CHECK(saw_seed);
}
