#include <doctest.h>

#include "fairdiv/json_io.hpp"
#include "test_util.hpp"

using namespace fairdiv;
using namespace testutil;

TEST_CASE("instance documents round-trip") {
    std::string text = R"({
        "agents": 2,
        "objects": 3,
        "weights": [[8, 2, 1], [5, 1, 5]]
    })";
    Instance inst = parse_instance(text);
    CHECK(inst.num_agents() == 2);
    CHECK(inst.num_objects() == 3);
    CHECK(inst.weight(1, 2) == 5);

    nlohmann::ordered_json doc = instance_to_json(inst);
    Instance again = instance_from_json(doc);
    CHECK(again.weights() == inst.weights());
    CHECK(doc["weights"][0][0] == 8);  // integers stay integers
}

TEST_CASE("fractional weights ride as strings, floats are refused") {
    Instance inst = parse_instance(
        R"({"agents": 1, "objects": 2, "weights": [["3/4", "0.5"]]})");
    CHECK(inst.weight(0, 0) == Rational(3, 4));
    CHECK(inst.weight(0, 1) == Rational(1, 2));
    nlohmann::ordered_json doc = instance_to_json(inst);
    CHECK(doc["weights"][0][0] == "3/4");
    CHECK(doc["weights"][0][1] == "1/2");

    CHECK_THROWS_AS(parse_instance(
                        R"({"agents": 1, "objects": 1, "weights": [[0.5]]})"),
                    ParseError);
}

TEST_CASE("instance parse errors name the problem") {
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"agents": 1, "objects": 1})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"agents": 0, "objects": 1, "weights": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(
                        R"({"agents": 2, "objects": 1, "weights": [[1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(
                        R"({"agents": 1, "objects": 2, "weights": [[1, -2]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(
                        R"({"agents": 1, "objects": 1, "weights": [["1/0"]]})"),
                    ParseError);
    try {
        parse_instance(R"({"agents": 2, "objects": 2, "weights": [[1, 2], [3, "x"]]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
        CHECK(std::string(e.what()).find("column 2") != std::string::npos);
    }
}

TEST_CASE("allocation documents shift between 1-based and 0-based") {
    Instance inst = inst_2x3_ties();
    Allocation a = parse_allocation(R"({"shares": [[1, 3], [2]]})", inst);
    CHECK(a == make_allocation(inst, {{1, 3}, {2}}));
    nlohmann::ordered_json doc = allocation_to_json(a);
    CHECK(doc.dump() == R"({"shares":[[1,3],[2]]})");

    CHECK_THROWS_AS(parse_allocation(R"({"shares": [[1, 2, 3]]})", inst), ParseError);
    CHECK_THROWS_AS(parse_allocation(R"({"shares": [[1, 2], [2, 3]]})", inst), ParseError);
    CHECK_THROWS_AS(parse_allocation(R"({"shares": [[1, 4], [2, 3]]})", inst), ParseError);
    CHECK_THROWS_AS(parse_allocation(R"({"shares": [[0, 1], [2, 3]]})", inst), ParseError);
    CHECK_THROWS_AS(parse_allocation(R"({"shares": [[1], [2]]})", inst), ParseError);
}

TEST_CASE("sequence documents validate length and range") {
    Instance inst = inst_2x3_ties();
    Sequence s = parse_sequence(R"({"picks": [2, 1, 2]})", inst);
    CHECK(s == make_sequence({2, 1, 2}));
    CHECK(sequence_to_json(s).dump() == R"({"picks":[2,1,2]})");

    CHECK_THROWS_AS(parse_sequence(R"({"picks": [1, 2]})", inst), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"picks": [1, 2, 3]})", inst), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"picks": [0, 1, 2]})", inst), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"nope": []})", inst), ParseError);
}
