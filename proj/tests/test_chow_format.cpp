#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratachow/chow_format.hpp"
#include "stratachow/parse.hpp"

using namespace stratachow;

namespace {

const char* kToyDoc = R"(
# a toy document exercising every block kind
ring line
  var T : 1
ring point
  var t : 1
ring glued
  var T : 1
  var Z : 1

ideal line.rels in line
  rel T
ideal point.rels in point

map restrict.line from glued to line
  send T -> T
  send Z -> 0
map restrict.point from glued to point
  send T -> t
  send Z -> t
map stage.pullback from glued to point
  send T -> t
  send Z -> t

stratum open
  ring line
  ideal line.rels
  restrict restrict.line
stratum closed
  ring point
  ideal point.rels
  restrict restrict.point
  class Z
  ctop t

stratification toy
  ambient glued
  ideal line.rels
  stratum open
  stratum closed

glue stage
  open open
  closed closed
  class Z
  pullback stage.pullback
  ctop t
)";

}  // namespace

TEST_CASE("round trip through the toy document") {
  ChowDocument doc = parse_chow_text(kToyDoc);
  CHECK(doc.rings.size() == 3);
  CHECK(doc.ring("glued")->nvars() == 2);
  CHECK(doc.ideal("line.rels").generators().size() == 1);
  CHECK(doc.ideal("point.rels").generators().empty());
  CHECK(doc.map("restrict.point").apply(parse_polynomial("T - Z", doc.ring("glued"))).is_zero());
  CHECK(doc.stratum("closed").class_var == "Z");
  CHECK(doc.stratum("open").class_var == std::nullopt);

  GluingDatum d = doc.make_glue("stage");
  CHECK(check_gluing_condition(d));
  StratumPresentation glued = glue(d);
  Ideal expected(d.extended_ring, {parse_polynomial("T - Z", d.extended_ring)});
  CHECK(ideal_equal(glued.relations, expected));
}

TEST_CASE("a chained glue can take its open side from a prior result") {
  ChowDocument doc = parse_chow_text(kToyDoc);
  std::map<std::string, StratumPresentation> prior{
      {"open", StratumPresentation("prior", doc.ring("line"), doc.ideal("line.rels"))}};
  GluingDatum d = doc.make_glue("stage", prior);
  CHECK(d.open_side.name == "prior");
}

TEST_CASE("stratification resolution") {
  ChowDocument doc = parse_chow_text(kToyDoc);
  Stratification s = doc.make_stratification("toy");
  CHECK(s.strata.size() == 2);
  CHECK(same_ring(s.ambient, doc.ring("glued")));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_chow_text("bogus decl"), ChowParseError);
  try {
    parse_chow_text("ring r\n  var x : 1\n\nideal I in r\n  rel x + y\n");
    FAIL("expected a parse error");
  } catch (const ChowParseError& e) {
    CHECK(e.line == 5);
  }
  try {
    parse_chow_text("ring r\n  var x 1\n");
    FAIL("expected a parse error");
  } catch (const ChowParseError& e) {
    CHECK(e.line == 2);
  }
  // map missing a generator image
  CHECK_THROWS_AS(parse_chow_text("ring a\n  var x : 1\n  var y : 1\nring b\n  var u : 1\n"
                                  "map f from a to b\n  send x -> u\n"),
                  ChowParseError);
  // stratum with class but no ctop
  CHECK_THROWS_AS(parse_chow_text("ring r\n  var x : 1\nideal I in r\n"
                                  "map m from r to r\n  send x -> x\n"
                                  "stratum s\n  ring r\n  ideal I\n  restrict m\n  class Z\n"),
                  ChowParseError);
}

TEST_CASE("unknown references are rejected") {
  ChowDocument doc = parse_chow_text(kToyDoc);
  CHECK_THROWS_AS(doc.ring("nope"), UnknownEntry);
  CHECK_THROWS_AS(doc.ideal("nope"), UnknownEntry);
  CHECK_THROWS_AS(doc.make_glue("nope"), UnknownEntry);
  CHECK_THROWS_AS(parse_chow_text("ideal I in missing\n  rel 0\n"), UnknownEntry);
}
