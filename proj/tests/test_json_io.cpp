#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "braidmono/errors.hpp"
#include "braidmono/json_io.hpp"

using namespace braidmono;

TEST_CASE("braid object form round trips") {
    const std::vector<BraidWord> words = {
        BraidWord::identity(2),
        BraidWord(4, {1, 1, -3, 2, 2, 2, -1}),
        BraidWord(9, {8, -8, 8}),
    };
    for (const BraidWord& b : words) {
        const Json j = parse_json_text(dump_canonical(braid_to_json(b)));
        CHECK(braid_from_json(j) == b);
    }
}

TEST_CASE("braid text form round trips and validates") {
    const BraidWord b(5, {1, 1, 1, -4, 2, -4, -4});
    CHECK(braid_from_text(b.str(), 5) == b);
    CHECK(braid_from_text("1", 3) == BraidWord::identity(3));
    CHECK(braid_from_text("", 3) == BraidWord::identity(3));
    CHECK(braid_from_text("s2^-2 s1", 3) == BraidWord(3, {-2, -2, 1}));

    CHECK_THROWS_AS(braid_from_text("t1", 3), ValidationError);
    CHECK_THROWS_AS(braid_from_text("s1^x", 3), ValidationError);
    CHECK_THROWS_AS(braid_from_text("s3", 3), ValidationError); // out of range
    // Text form without a strand count from context is rejected.
    CHECK_THROWS_AS(braid_from_json(Json("s1"), 0), ValidationError);
}

TEST_CASE("factorization round trips with and without labels") {
    const Factorization labeled(
        3, true, {BraidWord(3, {1, 1}), BraidWord(3, {2, 2})}, {"", "x=0"});
    const Json j = parse_json_text(dump_canonical(factorization_to_json(labeled)));
    CHECK(factorization_from_json(j) == labeled);
    // Empty labels serialize as null.
    CHECK(j["labels"][0].is_null());
    CHECK(j["labels"][1] == "x=0");

    // Missing "labels" means unlabeled; entries accept both forms.
    const Json mixed = parse_json_text(R"({
      "strands": 3, "marked": false,
      "entries": ["s1^2", {"strands": 3, "letters": [2]}]
    })");
    const Factorization f = factorization_from_json(mixed);
    CHECK(f == Factorization(3, false, {BraidWord(3, {1, 1}), BraidWord(3, {2})}));

    CHECK_THROWS_AS(factorization_from_json(parse_json_text(
                        R"({"strands": 3, "marked": false, "entries": ["s1"],
                            "labels": []})")),
                    ValidationError);
}

TEST_CASE("presentation round trips") {
    GroupPresentation p;
    p.generators = {"m1", "m2", "g1"};
    p.relators = {FreeWord(3, {-3, 1, 3, -2}), FreeWord(3, {1, 2, 1, -2, -1, -2})};
    const Json j = parse_json_text(dump_canonical(presentation_to_json(p)));
    const GroupPresentation back = presentation_from_json(j);
    CHECK(back.generators == p.generators);
    CHECK(back.relators == p.relators);

    CHECK_THROWS_AS(presentation_from_json(parse_json_text(
                        R"({"generators": ["a"], "relators": [[2]]})")),
                    ValidationError);
}

TEST_CASE("local point data round trips") {
    LocalPointData type0;
    type0.point_type = 0;
    type0.milnor = 4;
    type0.branches = {{1, 2, 3, 1}, {0, 1, 1, 2}};
    type0.pairwise_intersections = {5};
    const Json j = parse_json_text(dump_canonical(local_point_to_json(type0)));
    const LocalPointData back = local_point_from_json(j);
    CHECK(back.point_type == 0);
    CHECK(back.milnor == 4);
    REQUIRE(back.branches.size() == 2);
    CHECK(back.branches[0].axis_mult_2 == 3);
    CHECK(back.branches[1].components == 2);
    CHECK(back.pairwise_intersections == std::vector<long long>{5});

    LocalPointData type1;
    type1.point_type = 1;
    type1.branches = {{0, 2, std::nullopt, 1}};
    const Json j1 = local_point_to_json(type1);
    CHECK_FALSE(j1["branches"][0].contains("axis_mult_2"));
    CHECK_FALSE(local_point_from_json(j1).branches[0].axis_mult_2.has_value());
}

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(rational_to_text(rational_from_text("3/6")) == "1/2");
    CHECK(rational_to_text(rational_from_text("-3/7")) == "-3/7");
    CHECK(rational_to_text(rational_from_text("4/-2")) == "-2");
    CHECK(rational_to_text(rational_from_text("5")) == "5");
    CHECK_THROWS_AS(rational_from_text("1/0"), ValidationError);
    CHECK_THROWS_AS(rational_from_text("a"), ValidationError);
}

TEST_CASE("json syntax errors surface as validation errors") {
    CHECK_THROWS_AS(parse_json_text("{"), ValidationError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), ValidationError);
}
