#include "fixtures.hpp"

#include "prefdiag/dataset.hpp"
#include "prefdiag/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace prefdiag;

TEST_CASE("parse csv infers the catalog in order of appearance") {
    const auto d = parse_dataset("s0,a0;a1 \n s1,a0;a1;a2", InputFormat::csv);
    CHECK(d.num_subjects() == 2);
    CHECK(d.catalog_size() == 3);
    CHECK(d.item_labels().labels() == std::vector<std::string>{"a0", "a1", "a2"});
    CHECK(d.response(SubjectId{1}).selected == std::vector<ItemId>{ItemId{0}, ItemId{1}, ItemId{2}});
    for (std::size_t l = 0; l < d.num_subjects(); ++l) {
        CHECK(d.responses()[l].subject.index == l);
    }
}

TEST_CASE("parse csv errors") {
    CHECK_THROWS_AS(parse_dataset("s0,a0\ns0,a1\n", InputFormat::csv), DuplicateSubject);
    CHECK_THROWS_AS(parse_dataset("#catalog: a0;a1\ns0,a0;a9\n", InputFormat::csv), UnknownItem);

    try {
        parse_dataset("s0,a0\nbroken line\n", InputFormat::csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_dataset("s0,a0,a1\n", InputFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_dataset("s0,a0;a0\n", InputFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_dataset(",a0\n", InputFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_dataset("", InputFormat::csv), ParseError);
}

TEST_CASE("catalog header declares never-selected items") {
    const auto d = parse_dataset("# survey export\n#catalog: x;y;z\nalice,z\nbob,\n", InputFormat::csv);
    CHECK(d.catalog_size() == 3);
    CHECK(d.response(SubjectId{1}).selected.empty());
    CHECK(d.item_label(ItemId{2}) == "z");
}

TEST_CASE("parse json") {
    const auto d = parse_dataset(R"({"catalog": ["a", "b", "c"],
        "responses": [{"subject": "p1", "selected": ["b", "a"]}, {"subject": "p2", "selected": []}]})",
                                 InputFormat::json);
    CHECK(d.catalog_size() == 3);
    CHECK(d.response(SubjectId{0}).selected == std::vector<ItemId>{ItemId{0}, ItemId{1}});

    CHECK_THROWS_AS(parse_dataset(R"({"catalog": ["a"], "responses": [{"subject": "p", "selected": ["q"]}]})",
                                  InputFormat::json),
                    UnknownItem);
    CHECK_THROWS_AS(parse_dataset(R"({"responses": [{"subject": "p"}, {"subject": "p"}]})", InputFormat::json),
                    DuplicateSubject);
    try {
        parse_dataset("{\n  \"responses\": [\n  oops ]}", InputFormat::json);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("rmd round-trips through both formats") {
    const auto d = fixtures::rmd();
    CHECK(parse_dataset(serialize_csv(d), InputFormat::csv) == d);
    CHECK(parse_dataset(serialize_json(d), InputFormat::json) == d);

    std::istringstream in(serialize_csv(d));
    CHECK(parse_dataset(in, InputFormat::csv) == d);
}

TEST_CASE("round trip property on random datasets") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = fixtures::random_dataset(rng, 12, 10, 0.3);
        REQUIRE(parse_dataset(serialize_csv(d), InputFormat::csv) == d);
        REQUIRE(parse_dataset(serialize_json(d), InputFormat::json) == d);
    }
}

TEST_CASE("labels the CSV form cannot carry are refused, JSON keeps them") {
    LabelTable items;
    items.intern("a,b");
    LabelTable subjects;
    subjects.intern("x");
    const Dataset d(items, subjects, {ResponseDatum{SubjectId{0}, {ItemId{0}}}});
    CHECK_THROWS_AS(serialize_csv(d), InvalidArgument);
    CHECK(parse_dataset(serialize_json(d), InputFormat::json) == d);
}

TEST_CASE("label table is a bijection") {
    LabelTable t;
    CHECK(t.intern("x") == 0);
    CHECK(t.intern("y") == 1);
    CHECK(t.intern("x") == 0);
    CHECK_FALSE(t.insert("y"));
    for (std::uint32_t id = 0; id < t.size(); ++id) {
        CHECK(t.find(t.label(id)) == id);
    }
    CHECK(t.find("nope") == -1);
}

TEST_CASE("validate") {
    CHECK(validate(fixtures::rmd()).empty());

    const auto warnings = validate(fixtures::rmd(7));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].kind == Warning::Kind::NeverSelected);
    CHECK(warnings[0].index == 6);

    const auto d = Dataset::from_selections(2, {{0, 1}, {}});
    const auto w = validate(d);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == Warning::Kind::EmptySelection);
    CHECK(w[0].index == 1);
}

TEST_CASE("dataset constructor enforces invariants") {
    CHECK_THROWS_AS(Dataset::from_selections(2, {{0, 2}}), IndexError);
    CHECK_THROWS_AS(Dataset::from_selections(2, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Dataset::from_selections(0, {}), InvalidArgument);
    CHECK_THROWS_AS(fixtures::rmd().response(SubjectId{4}), IndexError);
}
