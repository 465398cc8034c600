#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stratachow/parse.hpp"
#include "stratachow/poly.hpp"

using namespace stratachow;

static RingPtr xy_ring() { return GradedRing::make({{"x", 1}, {"y", 1}}); }

static Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_deg, int nterms) {
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<long> cd(-9, 9);
  Polynomial p = Polynomial::zero(ring);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.e[i] = ed(rng);
    long c = cd(rng);
    p = p + Polynomial::monomial(ring, m, Rational(c));
  }
  return p;
}

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK((a - a).is_zero());
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational::from_string("247145/2916").str() == "247145/2916");
  CHECK(Rational(1, 24).denominator_smooth23());
  CHECK(Rational(7, 72).denominator_smooth23());
  CHECK_FALSE(Rational(1, 7).denominator_smooth23());
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("ring axioms on randomized inputs") {
  auto ring = xy_ring();
  std::mt19937 rng(42);
  for (int rep = 0; rep < 30; ++rep) {
    Polynomial a = random_poly(ring, rng, 4, 5);
    Polynomial b = random_poly(ring, rng, 4, 5);
    Polynomial c = random_poly(ring, rng, 4, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("degree additivity for homogeneous polynomials") {
  auto ring = GradedRing::make({{"lambda1", 1}, {"lambda2", 2}});
  Polynomial p = parse_polynomial("lambda1^2 + 3*lambda2", ring);
  Polynomial q = parse_polynomial("lambda1*lambda2", ring);
  REQUIRE(p.homogeneous_degree() == 2);
  REQUIRE(q.homogeneous_degree() == 3);
  CHECK((p * q).homogeneous_degree() == 5);
}

TEST_CASE("parser handles the grammar and reports errors") {
  auto ring = xy_ring();
  CHECK(parse_polynomial("0", ring).is_zero());
  CHECK(parse_polynomial("(x+y)^2 - x^2 - 2*x*y - y^2", ring).is_zero());
  CHECK(parse_polynomial("1/2*x + 1/2*x", ring) == parse_polynomial("x", ring));
  CHECK(parse_polynomial("-x + x", ring).is_zero());
  CHECK_THROWS_AS(parse_polynomial("z + 1", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x ) y", ring), ParseError);
}

TEST_CASE("canonical printing round-trips and is deterministic") {
  auto ring = GradedRing::make({{"lambda1", 1}, {"xi1", 1}});
  Polynomial d1 = parse_polynomial(
      "2/9*xi1*(lambda1+xi1)*(4*lambda1+xi1)", ring);
  std::string s = print_canonical(d1);
  CHECK(s == "8/9*lambda1^2*xi1 + 10/9*lambda1*xi1^2 + 2/9*xi1^3");
  CHECK(parse_polynomial(s, ring) == d1);

  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Polynomial p = random_poly(ring, rng, 6, 12);
    CHECK(parse_polynomial(print_canonical(p), ring) == p);
  }
  CHECK(print_canonical(Polynomial::zero(ring)) == "0");
}

TEST_CASE("canonical form is construction-order independent") {
  auto ring = xy_ring();
  Polynomial a = parse_polynomial("x^2 + x*y + y^2", ring);
  Polynomial b = parse_polynomial("y^2 + x^2 + x*y", ring);
  CHECK(a.terms() == b.terms());
}

TEST_CASE("substitute is a degree-preserving ring homomorphism") {
  auto src = GradedRing::make({{"lambda1", 1}, {"lambda2", 2}});
  auto tgt = GradedRing::make({{"t", 1}, {"t0", 1}, {"t1", 1}});
  RingMap f(src, tgt,
            {parse_polynomial("-t - t0 - t1", tgt),
             parse_polynomial("t0*t1 + t*(t0+t1)", tgt)});
  Polynomial l1sq = parse_polynomial("lambda1^2", src);
  CHECK(f.apply(l1sq) == parse_polynomial("(t+t0+t1)^2", tgt));
  Polynomial p = parse_polynomial("lambda1^2 - 2*lambda2", src);
  Polynomial q = parse_polynomial("lambda1*lambda2", src);
  CHECK(f.apply(p * q) == f.apply(p) * f.apply(q));
  CHECK(f.apply(p).homogeneous_degree() == 2);

  // degree mismatch rejected
  CHECK_THROWS(RingMap(src, tgt, {parse_polynomial("t^2", tgt), parse_polynomial("t0*t1", tgt)}));
  // non-homogeneous image rejected
  CHECK_THROWS(RingMap(src, tgt, {parse_polynomial("t + t^2", tgt), parse_polynomial("t0*t1", tgt)}));
}

TEST_CASE("substitute via factored identities") {
  // s -> -(xi1+lambda1)/3, c1 -> -xi1 turns 2*s*c1*(c1-4*s) into D1
  auto src = GradedRing::make({{"c1", 1}, {"s", 1}});
  auto tgt = GradedRing::make({{"lambda1", 1}, {"xi1", 1}});
  RingMap f(src, tgt,
            {parse_polynomial("-xi1", tgt), parse_polynomial("-1/3*(xi1+lambda1)", tgt)});
  Polynomial d1_sc = parse_polynomial("2*s*c1*(c1-4*s)", src);
  Polynomial d1 = parse_polynomial("2/9*xi1*(lambda1+xi1)*(4*lambda1+xi1)", tgt);
  CHECK(f.apply(d1_sc) == d1);
}

TEST_CASE("homogeneous_components partitions by weighted degree") {
  auto ring = GradedRing::make({{"x", 1}});
  Polynomial p = parse_polynomial("x + x^2", ring);
  auto comp = p.homogeneous_components();
  REQUIRE(comp.size() == 2);
  CHECK(comp.at(1) == parse_polynomial("x", ring));
  CHECK(comp.at(2) == parse_polynomial("x^2", ring));
  Polynomial sum = Polynomial::zero(ring);
  for (const auto& [d, c] : comp) sum = sum + c;
  CHECK(sum == p);
}
