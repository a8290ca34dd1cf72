#include "doctest.h"

#include "commalg/error.hpp"
#include "commalg/length.hpp"
#include "commalg/wire.hpp"

using namespace commalg;

namespace {

ErrorKind parse_kind(const std::string& text) {
    try {
        (void)generator_set_from_json(json::parse(text));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidParams;  // anything but ParseError
}

}  // namespace

TEST_CASE("construction round-trips through JSON") {
    for (Field f : {Field::rational(), Field::prime(7)}) {
        const auto s = build_bkml({9, 1, 5, 2}, f);
        const auto doc = generator_set_to_json(s);
        const auto back = generator_set_from_json(json::parse(dump(doc)));
        CHECK(back.field() == f);
        CHECK(back.admit_empty_word());
        REQUIRE(back.size() == s.size());
        for (const auto& g : s.members()) {
            REQUIRE(back.find(g.label) != nullptr);
            CHECK(*back.find(g.label) == g.matrix);
        }
        CHECK(dump(generator_set_to_json(back)) == dump(doc));
    }
}

TEST_CASE("serialized form is sorted and sparse") {
    const auto text = dump(generator_set_to_json(witness_system({8, 1, 5, 2})));
    CHECK(text.back() == '\n');
    CHECK(text.find("\"admit_empty_word\"") < text.find("\"field\""));
    CHECK(text.find("\"field\"") < text.find("\"generators\""));
    const auto doc = json::parse(text);
    std::vector<std::string> labels;
    for (const auto& g : doc["generators"]) labels.push_back(g["label"]);
    CHECK(labels == std::vector<std::string>{"B1", "B2", "E_1_8", "E_5_4"});
    CHECK(doc["generators"][0]["entries"] == json::parse(R"([[1,2,"1"],[2,3,"1"],[3,4,"1"]])"));
}

TEST_CASE("values accept integers and fractions") {
    const auto s = generator_set_from_json(json::parse(R"({"n": 2, "field": "rational", "admit_empty_word": false,
        "generators": [{"label": "X", "entries": [[1, 1, "-3/6"], [2, 1, 4]]}]})"));
    const auto& x = s.members()[0].matrix;
    CHECK(x.at(1, 1).to_string() == "-1/2");
    CHECK(x.at(2, 1).to_string() == "4");
    CHECK_FALSE(s.admit_empty_word());
}

TEST_CASE("malformed generator files") {
    const std::string head = R"({"n": 2, "field": "rational", "admit_empty_word": true, "generators": )";
    CHECK(parse_kind(R"({"field": "rational", "admit_empty_word": true, "generators": []})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"n": 0, "field": "rational", "admit_empty_word": true, "generators": []})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"n": 2, "field": "gf:6", "admit_empty_word": true, "generators": []})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + "[]}") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[3, 1, "1"]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[0, 1, "1"]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[1, 1, "1"], [1, 1, "2"]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": []}, {"label": "A", "entries": []}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[1, 1]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[1, 1, "x"]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[1, 1, "1/0"]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(head + R"([{"label": "A", "entries": [[1, 1, 1.5]]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind("[1, 2]") == ErrorKind::ParseError);
    CHECK_THROWS_AS(read_generator_file("/nonexistent/generators.json"), Error);
}

TEST_CASE("report serialization") {
    const auto w = witness_system({8, 1, 5, 2});
    const auto r = to_json(li_chain(w));
    CHECK(r["length"] == 3);
    CHECK(r["dims"] == json::parse("[1,5,7,9,9]"));
    CHECK(r["stabilization_step"] == 4);
    const auto b1 = GeneratingSystem({{"B1", shift_matrix(8, 1, 2)}}, true);
    CHECK(to_json(length_report(b1, algebra_closure(build_bkml({8, 1, 5, 2}))))["length"] == "not generating");
}
