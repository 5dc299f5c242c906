#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hbk/batch.hpp"
#include "hbk/grammar.hpp"

using namespace hbk;

TEST_CASE("parse_spec on rational tangles") {
    const HbkSpec s = parse_spec("k:0;rational:x:2/5");
    CHECK(s.k == 0);
    REQUIRE(s.tangle.is_rational());
    CHECK(s.tangle.rational()->vertex() == VertexLabel::X);
    CHECK(s.tangle.rational()->fraction().rep() == Fraction(2, 5));
    CHECK(format_spec(s) == "k:0;rational:x:2/5");

    CHECK(parse_spec("k:-2;rational:y:7/5").k == -2);
    // Fractions normalize to their class representative.
    CHECK(format_spec(parse_spec("k:0;rational:x:7/5")) == "k:0;rational:x:2/5");
    CHECK(format_spec(parse_spec("k:0;rational:x:-1/3")) == "k:0;rational:x:2/3");
}

TEST_CASE("parse_spec on composite tangles") {
    const HbkSpec s = parse_spec("k:1;composite:z:trefoil+:z_rational_trefoil");
    CHECK(s.k == 1);
    REQUIRE(s.tangle.composite() != nullptr);
    CHECK(s.tangle.composite()->rational_vertex() == VertexLabel::Z);
    CHECK(s.tangle.composite()->knots() ==
          std::vector<KnotLabel>{{"trefoil", Handedness::Positive}});
    CHECK(s.tangle.composite()->atoroidal());
    CHECK(format_spec(s) == "k:1;composite:z:trefoil+:z_rational_trefoil");

    const HbkSpec multi = parse_spec("k:0;composite:-:fig8=,trefoil-:granny");
    CHECK_FALSE(multi.tangle.composite()->rational_vertex().has_value());
    CHECK(multi.tangle.composite()->knots().size() == 2);
    CHECK(format_spec(multi) == "k:0;composite:-:fig8=,trefoil-:granny");

    const HbkSpec empty_knots = parse_spec("k:0;composite:x::ikms_7_36");
    CHECK(empty_knots.tangle.composite()->knots().empty());

    // Recorded moves round-trip through the descriptor tags.
    const HbkSpec tagged = parse_spec("k:0;composite:z:trefoil-:z_rational_trefoil~m");
    CHECK(tagged.tangle.composite()->descriptor().mirrored);
    CHECK(format_spec(tagged) == "k:0;composite:z:trefoil-:z_rational_trefoil~m");
}

TEST_CASE("parse errors carry token and position") {
    CHECK_THROWS_AS(parse_spec("rational:x:2/5"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:a;rational:x:2/5"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:0;montesinos:x:2/5"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:0;rational:w:2/5"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:0;rational:x:2//5"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:0;composite:z:trefoil:d"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:0;composite:z:trefoil+:"), ParseError);
    CHECK_THROWS_AS(parse_spec("k:0;composite:z:trefoil+:d:extra"), ParseError);

    try {
        parse_spec("k:0;rational:w:2/5");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.token == "w");
        CHECK(e.position == 13);
    }

    // Validation failures keep their own types (distinct exit codes downstream).
    CHECK_THROWS_AS(parse_spec("k:0;rational:x:0/1"), TrivialTangleError);
    CHECK_THROWS_AS(parse_spec("k:0;rational:x:1/2"), InvalidConnectivityError);
}

TEST_CASE("knot labels") {
    CHECK(parse_knot("trefoil+") == KnotLabel{"trefoil", Handedness::Positive});
    CHECK(parse_knot("fig8=") == KnotLabel{"fig8", Handedness::Amphichiral});
    CHECK(parse_knot("trefoil+").mirror_partner().label() == "trefoil-");
    CHECK(parse_knot("fig8=").mirror_partner() == parse_knot("fig8="));
    CHECK_THROWS_AS(parse_knot("trefoil"), ParseError);
    CHECK_THROWS_AS(parse_knot("+"), ParseError);
}

TEST_CASE("batch processing") {
    std::istringstream csv(
        "spec_a,spec_b,mode\n"
        "k:0;rational:x:2/5,k:1;rational:x:2/5,equiv\n"
        "k:0;rational:x:2/5,k:1;rational:x:2/5,equiv-mirror\n"
        "k:0;rational:x:2/5,k:1;rational:x:2/5,exterior\n"
        "\"k:0;composite:z:trefoil+,fig8=:pair\",\"k:0;composite:z:trefoil+,fig8=:pair\",equiv\n"
        "k:0;rational:x:0/1,k:0;rational:x:2/5,equiv\n"
        "k:0;rational:x:2/5,k:0;rational:x:2/5,frobnicate\n");
    const std::vector<BatchRow> rows = run_batch(csv);
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].ok());
    CHECK(rows[0].status == "inequivalent");
    CHECK(rows[1].status == "inequivalent");
    CHECK(rows[2].status == "true");
    CHECK(rows[3].ok());
    CHECK(rows[3].status == "equivalent");  // quoted specs with commas parse
    CHECK_FALSE(rows[4].ok());              // trivial tangle: recorded, not fatal
    CHECK(rows[4].error.find("trivial") != std::string::npos);
    CHECK_FALSE(rows[5].ok());
    CHECK(rows[5].row == 7);
}

TEST_CASE("batch rejects a bad header") {
    std::istringstream csv("a,b,c\n");
    CHECK_THROWS_AS(run_batch(csv), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(run_batch(empty), ParseError);
}
