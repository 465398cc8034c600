#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratachow/glue.hpp"
#include "stratachow/parse.hpp"

using namespace stratachow;

namespace {
Polynomial pp(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }
}

TEST_CASE("toy weight-one line glues to <T - Z>") {
  auto open_ring = GradedRing::make({{"T", 1}});
  auto closed_ring = GradedRing::make({{"t", 1}});
  StratumPresentation open_side("line-minus-point", open_ring,
                                Ideal(open_ring, {pp("T", open_ring)}));
  StratumPresentation closed_side("point", closed_ring, Ideal::zero(closed_ring));
  auto ext = extend_ring(open_ring, "Z", 1);
  RingMap pullback(ext, closed_ring, {pp("t", closed_ring), pp("t", closed_ring)});
  GluingDatum d(open_side, closed_side, "Z", pullback, pp("t", closed_ring));

  CHECK(check_gluing_condition(d));
  StratumPresentation glued = glue(d);
  CHECK(ideal_equal(glued.relations, Ideal(ext, {pp("T - Z", ext)})));
}

TEST_CASE("free sides with zero kernel glue to the zero ideal") {
  auto open_ring = GradedRing::make({{"x", 1}});
  auto closed_ring = GradedRing::make({{"y", 1}, {"z", 1}});
  StratumPresentation open_side("open", open_ring, Ideal::zero(open_ring));
  StratumPresentation closed_side("closed", closed_ring, Ideal::zero(closed_ring));
  auto ext = extend_ring(open_ring, "Z", 1);
  RingMap pullback(ext, closed_ring, {pp("y", closed_ring), pp("z", closed_ring)});
  GluingDatum d(open_side, closed_side, "Z", pullback, pp("z", closed_ring));

  CHECK(check_gluing_condition(d, 4));
  StratumPresentation glued = glue(d, 4);
  for (const auto& g : glued.relations.generators()) CHECK(g.is_zero());
}

TEST_CASE("non-equivariant point in the line fails the gluing condition") {
  // both strata have trivial Chow ring; the would-be c_top of the point is 0,
  // which is a zero divisor, so no presentation can be glued this way
  auto open_ring = GradedRing::make({{"T", 1}});
  auto closed_ring = GradedRing::make({{"u", 1}});
  StratumPresentation open_side("affine-line", open_ring, Ideal(open_ring, {pp("T", open_ring)}));
  StratumPresentation closed_side("point", closed_ring, Ideal(closed_ring, {pp("u", closed_ring)}));
  auto ext = extend_ring(open_ring, "Z", 1);
  RingMap pullback(ext, closed_ring,
                   {Polynomial::zero(closed_ring), Polynomial::zero(closed_ring)});
  GluingDatum d(open_side, closed_side, "Z", pullback, Polynomial::zero(closed_ring));

  CHECK_FALSE(check_gluing_condition(d));
  CHECK_THROWS_AS(glue(d), GluingConditionFailed);
}

TEST_CASE("nilpotent c_top is rejected: line at infinity inside the plane") {
  // CH(P1) = Q[t]/(t^2) with c_top = t: t is nilpotent, hence a zero divisor,
  // so this stratification does not satisfy the gluing condition
  auto open_ring = GradedRing::make({{"h", 1}});
  auto closed_ring = GradedRing::make({{"t", 1}});
  StratumPresentation open_side("affine-plane", open_ring, Ideal(open_ring, {pp("h", open_ring)}));
  StratumPresentation closed_side("line", closed_ring,
                                  Ideal(closed_ring, {pp("t^2", closed_ring)}));
  auto ext = extend_ring(open_ring, "Z", 1);
  RingMap pullback(ext, closed_ring, {pp("t", closed_ring), pp("t", closed_ring)});
  GluingDatum d(open_side, closed_side, "Z", pullback, pp("t", closed_ring));
  CHECK_FALSE(check_gluing_condition(d, 4));
}

TEST_CASE("gluing over a reducible closed stratum with nonzerodivisor c_top") {
  auto open_ring = GradedRing::make({{"x", 1}});
  auto closed_ring = GradedRing::make({{"t0", 1}, {"t1", 1}});
  StratumPresentation open_side("open", open_ring, Ideal(open_ring, {pp("x^2", open_ring)}));
  StratumPresentation closed_side("closed", closed_ring,
                                  Ideal(closed_ring, {pp("t0*t1", closed_ring)}));
  auto ext = extend_ring(open_ring, "Z", 1);
  RingMap pullback(ext, closed_ring, {pp("t0", closed_ring), pp("t0 + t1", closed_ring)});
  GluingDatum d(open_side, closed_side, "Z", pullback, pp("t0 + t1", closed_ring));

  REQUIRE(check_gluing_condition(d, 6));
  StratumPresentation glued = glue(d, 6);
  // expected families: (1) Z*x*(Z-x) from the lifted closed relation,
  // (3) x^2 - Z*x since pullback(x^2) = t0^2 = t0*c_top - t0*t1
  Ideal expected(ext, {pp("Z*x*(Z - x)", ext), pp("x^2 - Z*x", ext)});
  CHECK(ideal_equal(glued.relations, expected));

  // both-sides invariant: every output relation restricts into each stratum ideal
  RingMap to_open(ext, open_ring, {pp("x", open_ring), Polynomial::zero(open_ring)});
  for (const auto& r : glued.relations.generators()) {
    if (r.is_zero()) continue;
    CHECK(is_member(d.pullback.apply(r), closed_side.relations).member_over_Q);
    CHECK(is_member(to_open.apply(r), open_side.relations).member_over_Q);
  }
}

namespace {

Stratification plane_stratification() {
  auto ambient = GradedRing::make({{"h", 1}, {"Z", 1}});
  Ideal ambient_rels(ambient, {pp("h - Z", ambient), pp("Z^3", ambient)});
  auto open_ring = GradedRing::make({{"h", 1}});
  auto closed_ring = GradedRing::make({{"t", 1}});
  Stratum open_stratum(
      StratumPresentation("affine-plane", open_ring, Ideal(open_ring, {pp("h", open_ring)})),
      RingMap(ambient, open_ring, {pp("h", open_ring), Polynomial::zero(open_ring)}));
  Stratum closed_stratum(
      StratumPresentation("line", closed_ring, Ideal(closed_ring, {pp("t^2", closed_ring)})),
      RingMap(ambient, closed_ring, {pp("t", closed_ring), pp("t", closed_ring)}), "Z",
      pp("t", closed_ring));
  return Stratification(ambient, ambient_rels, {open_stratum, closed_stratum});
}

}  // namespace

TEST_CASE("stratum_vanishing reports per-stratum membership with witnesses") {
  Stratification strat = plane_stratification();
  for (const char* rel : {"h - Z", "Z^3"}) {
    auto report = stratum_vanishing(pp(rel, strat.ambient), strat);
    CHECK(report.all_pass());
  }
  // a non-relation fails on the closed stratum with a nonzero witness
  auto report = stratum_vanishing(pp("Z", strat.ambient), strat);
  REQUIRE(report.checks.size() == 2);
  CHECK(report.checks[0].pass);  // restricts to 0 on the open stratum
  CHECK_FALSE(report.checks[1].pass);
  CHECK_FALSE(report.checks[1].obstruction.is_zero());
}

TEST_CASE("reconstruct_class rebuilds classes from their restrictions") {
  Stratification strat = plane_stratification();
  auto open_ring = strat.strata[0].presentation.ring;
  auto closed_ring = strat.strata[1].presentation.ring;

  SUBCASE("all restrictions zero gives zero") {
    Polynomial X = reconstruct_class(
        strat, {Polynomial::zero(open_ring), Polynomial::zero(closed_ring)});
    CHECK(X.is_zero());
  }
  SUBCASE("hyperplane class from its restrictions") {
    Polynomial X = reconstruct_class(strat, {Polynomial::zero(open_ring), pp("t", closed_ring)});
    // X restricts to 0 on the open stratum and to t on the closed one
    CHECK(is_member(strat.strata[0].restriction.apply(X),
                    strat.strata[0].presentation.relations)
              .member_over_Q);
    CHECK(is_member(strat.strata[1].restriction.apply(X) - pp("t", closed_ring),
                    strat.strata[1].presentation.relations)
              .member_over_Q);
  }
  SUBCASE("nonzero open restriction is lifted first") {
    Polynomial X = reconstruct_class(strat, {pp("h", open_ring), pp("t", closed_ring)});
    CHECK(is_member(strat.strata[0].restriction.apply(X) - pp("h", open_ring),
                    strat.strata[0].presentation.relations)
              .member_over_Q);
    CHECK(is_member(strat.strata[1].restriction.apply(X) - pp("t", closed_ring),
                    strat.strata[1].presentation.relations)
              .member_over_Q);
  }
  SUBCASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(
        reconstruct_class(strat, {pp("h", open_ring), pp("t^2", closed_ring)}),
        DegreeMismatch);
  }
}

TEST_CASE("reconstruct_class detects indivisible restriction data") {
  auto ambient = GradedRing::make({{"x", 1}, {"Z", 2}});
  auto open_ring = GradedRing::make({{"x", 1}});
  auto closed_ring = GradedRing::make({{"u", 1}, {"v", 1}});
  Stratum open_stratum(
      StratumPresentation("open", open_ring, Ideal(open_ring, {pp("x", open_ring)})),
      RingMap(ambient, open_ring, {pp("x", open_ring), Polynomial::zero(open_ring)}));
  Stratum closed_stratum(
      StratumPresentation("closed", closed_ring, Ideal::zero(closed_ring)),
      RingMap(ambient, closed_ring, {pp("u", closed_ring), pp("u*v", closed_ring)}), "Z",
      pp("u*v", closed_ring));
  Stratification strat(ambient, Ideal::zero(ambient), {open_stratum, closed_stratum});
  CHECK_THROWS_AS(
      reconstruct_class(strat, {Polynomial::zero(open_ring), pp("u^2", closed_ring)}),
      NotDivisible);
}
