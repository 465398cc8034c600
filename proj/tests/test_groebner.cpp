#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratachow/groebner.hpp"
#include "stratachow/linear_oracle.hpp"
#include "stratachow/parse.hpp"

using namespace stratachow;

namespace {

Polynomial pp(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

bool certificate_checks(const Certificate& cert, const Ideal& ideal) {
  Polynomial acc = cert.remainder;
  REQUIRE(cert.cofactors.size() == ideal.generators().size());
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
    acc = acc + cert.cofactors[i] * ideal.generators()[i];
  return acc == cert.target;
}

}  // namespace

TEST_CASE("groebner basis of a monomial-generated ideal") {
  auto ring = GradedRing::make({{"x", 1}, {"y", 1}});
  Ideal I(ring, {pp("x", ring), pp("y", ring)});
  auto gb = groebner_basis(I, MonomialOrder::grevlex(ring));
  REQUIRE(gb.basis().size() == 2);
  CHECK(gb.basis()[0] == pp("y", ring));
  CHECK(gb.basis()[1] == pp("x", ring));
  CHECK(is_member(pp("x^2 + x*y", ring), gb));
  CHECK_FALSE(is_member(pp("x + 1", ring), gb));
}

TEST_CASE("buchberger closes under S-pairs: twisted cubic style example") {
  // homogeneous under weights deg(a)=1, deg(b)=2, deg(c)=3
  auto ring = GradedRing::make({{"a", 1}, {"b", 2}, {"c", 3}});
  Ideal I(ring, {pp("b - a^2", ring), pp("c - a^3", ring)});
  auto gb = groebner_basis(I, MonomialOrder::grevlex(ring));
  // every S-polynomial reduces to zero against the final basis
  const std::vector<Polynomial> basis = gb.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      Monomial l = f.terms().front().first.lcm(g.terms().front().first);
      Polynomial s =
          f.times_term(l.quotient(f.terms().front().first), g.terms().front().second) -
          g.times_term(l.quotient(g.terms().front().first), f.terms().front().second);
      CHECK(normal_form(s, gb).remainder.is_zero());
    }
  }
  CHECK(is_member(pp("b^3 - c^2", ring), I));
  CHECK(is_member(pp("a*c - b^2", ring), I));
  CHECK_FALSE(is_member(pp("a^2*b", ring), I));
}

TEST_CASE("normal form certificate identity p = sum c_i g_i + r") {
  auto ring = GradedRing::make({{"lambda1", 1}, {"lambda2", 2}, {"lambda3", 3}});
  Ideal I(ring, {pp("24*lambda1^2 - 48*lambda2", ring),
                 pp("lambda1*lambda2 - 12*lambda3", ring)});
  auto gb = groebner_basis(I, MonomialOrder::grevlex(ring));
  for (const std::string& s :
       {"lambda1^4", "lambda2^2 + lambda1*lambda3", "lambda1^3*lambda2 - 7*lambda3*lambda1"}) {
    Certificate cert = normal_form(pp(s, ring), gb);
    CHECK(certificate_checks(cert, I));
  }
  // lambda2 - lambda1^2/2 reduces to zero with cofactor -1/48 * ... actually:
  Certificate cert = normal_form(pp("lambda2 - 1/2*lambda1^2", ring), gb);
  CHECK(cert.remainder.is_zero());
  CHECK(cert.cofactors[0] == pp("-1/48", ring));
  CHECK(cert.cofactors[1].is_zero());
  CHECK(cert.cofactors_smooth23());
}

TEST_CASE("degree cap decides membership below the cap and flags skipped pairs") {
  auto ring = GradedRing::make({{"x", 1}, {"y", 1}, {"z", 1}});
  Ideal I(ring, {pp("x^2 - y*z", ring), pp("x*y - z^2", ring), pp("y^2 - x*z", ring)});
  auto full = groebner_basis(I, MonomialOrder::grevlex(ring));
  auto capped = GroebnerBasis(I, MonomialOrder::grevlex(ring), 3);
  Polynomial p = pp("x^3 - x*y*z + y^3 - z^3 + x^2*z - y*z^2", ring);
  CHECK(normal_form(p, capped).remainder == normal_form(p, full).remainder);
}

TEST_CASE("membership agrees with the independent linear oracle") {
  auto ring = GradedRing::make({{"x", 1}, {"y", 1}, {"z", 1}});
  std::vector<Polynomial> gens = {pp("x^2 - y*z", ring), pp("x*y - z^2", ring)};
  Ideal I(ring, gens);
  auto gb = groebner_basis(I, MonomialOrder::grevlex(ring));
  std::vector<std::string> probes = {
      "x^3 - x*y*z", "x^2*y - y^2*z", "z^3 - x*y*z + x^2*y - y^2*z",
      "x^3", "y^3", "z^4", "x^2*z^2 - y*z^3", "x*y^3 - y^2*z^2",
      "x^2*y^2", "x^4 - 2*x^2*y*z + y^2*z^2"};
  for (const auto& s : probes) {
    Polynomial p = pp(s, ring);
    CHECK(is_member(p, gb).member_over_Q == member_linear_oracle(p, ring, gens));
  }
}

TEST_CASE("ideal equality is insensitive to generator presentation") {
  auto ring = GradedRing::make({{"x", 1}, {"y", 1}});
  Ideal A(ring, {pp("x + y", ring), pp("x - y", ring)});
  Ideal B(ring, {pp("x", ring), pp("y", ring)});
  Ideal C(ring, {pp("x", ring), pp("y^2", ring)});
  CHECK(ideal_equal(A, B));
  CHECK_FALSE(ideal_equal(B, C));
}

TEST_CASE("kernel of the hyperelliptic-shape map is principal") {
  // Q[l1,l2,l3,H] -> Q[l1,l2,x1]:
  //   l3 -> (x1+l1)*(9*l2 + (x1+l1)*(x1-2*l1))/27, H -> (2*x1-l1)/3
  auto src = GradedRing::make({{"lambda1", 1}, {"lambda2", 2}, {"lambda3", 3}, {"H", 1}});
  auto tgt = GradedRing::make({{"lambda1", 1}, {"lambda2", 2}, {"xi1", 1}});
  RingMap f(src, tgt,
            {pp("lambda1", tgt), pp("lambda2", tgt),
             pp("1/27*(xi1+lambda1)*(9*lambda2 + (xi1+lambda1)*(xi1-2*lambda1))", tgt),
             pp("1/3*(2*xi1 - lambda1)", tgt)});
  Ideal J = Ideal::zero(tgt);
  auto ker = kernel_of_map(f, J, 6);
  // substituting xi1 = (3H+lambda1)/2 into the l3 image must reproduce each
  // kernel generator as "image - l3"-style relation; at minimum: the kernel is
  // nonzero, every generator maps to 0, and the expected degree-3 relation
  // lambda3 - (H + lambda1)*(lambda2 + ... ) lies in it.
  REQUIRE_FALSE(ker.generators().empty());
  for (const auto& g : ker.generators()) CHECK(f.apply(g).is_zero());
  // independently constructed element of the kernel: replace xi1 by
  // (3H+lambda1)/2 in the lambda3 image and subtract lambda3.
  RingMap back(tgt, src,
               {pp("lambda1", src), pp("lambda2", src), pp("1/2*(3*H + lambda1)", src)});
  Polynomial rel =
      back.apply(pp("1/27*(xi1+lambda1)*(9*lambda2 + (xi1+lambda1)*(xi1-2*lambda1))", tgt)) -
      pp("lambda3", src);
  CHECK(is_member(rel, ker, 3));
  // the kernel of a map onto a 3-variable polynomial ring from 4 variables is
  // principal; check it equals the ideal generated by rel.
  CHECK(ideal_equal(ker, Ideal(src, {rel})));
}

TEST_CASE("map elimination produces canonical preimages") {
  auto src = GradedRing::make({{"t", 1}});
  auto tgt = GradedRing::make({{"u", 1}});
  RingMap f(src, tgt, {pp("2*u", tgt)});
  MapElimination elim(f, Ideal::zero(tgt), 4);
  auto pre = elim.preimage(pp("u^2", tgt));
  REQUIRE(pre.has_value());
  CHECK(f.apply(*pre) == pp("u^2", tgt));
  CHECK(*pre == pp("1/4*t^2", src));
  auto pre1 = elim.preimage(pp("u", tgt));
  REQUIRE(pre1.has_value());
  CHECK(f.apply(*pre1) == pp("u", tgt));
}

TEST_CASE("preimage respects the target-side ideal") {
  // f: Q[a] -> Q[u]/(u^2), a -> u. u^3 is 0 in the quotient, preimage exists.
  auto src = GradedRing::make({{"a", 1}});
  auto tgt = GradedRing::make({{"u", 1}});
  RingMap f(src, tgt, {pp("u", tgt)});
  MapElimination elim(f, Ideal(tgt, {pp("u^2", tgt)}), 5);
  auto pre = elim.preimage(pp("u^3", tgt));
  REQUIRE(pre.has_value());
  CHECK(is_member(f.apply(*pre) - pp("u^3", tgt), Ideal(tgt, {pp("u^2", tgt)}), 3));
}

TEST_CASE("nonzerodivisor detection") {
  auto ring = GradedRing::make({{"x", 1}, {"y", 1}});
  SUBCASE("any nonzero element is a nonzerodivisor modulo the zero ideal") {
    CHECK(is_nonzerodivisor(pp("x", ring), Ideal::zero(ring)));
    CHECK(is_nonzerodivisor(pp("x^2 + y^2", ring), Ideal::zero(ring)));
  }
  SUBCASE("x is a zerodivisor modulo (x*y)") {
    CHECK_FALSE(is_nonzerodivisor(pp("x", ring), Ideal(ring, {pp("x*y", ring)})));
  }
  SUBCASE("x + y is a nonzerodivisor modulo (x*y)") {
    CHECK(is_nonzerodivisor(pp("x + y", ring), Ideal(ring, {pp("x*y", ring)})));
  }
  SUBCASE("x is a nonzerodivisor modulo (y^2)") {
    CHECK(is_nonzerodivisor(pp("x", ring), Ideal(ring, {pp("y^2", ring)})));
  }
}

TEST_CASE("divide_in_quotient returns the cofactor of the divisor") {
  auto ring = GradedRing::make({{"x", 1}, {"y", 1}});
  // modulo I = (x^2), does y divide x*y + x^2? yes: x*y + x^2 = y*x mod I, w = x.
  Ideal I(ring, {pp("x^2", ring)});
  auto w = divide_in_quotient(pp("x*y + x^2", ring), pp("y", ring), I, 3);
  REQUIRE(w.has_value());
  CHECK(is_member(pp("x*y + x^2", ring) - *w * pp("y", ring), I, 3));
  // x is not divisible by y modulo (x^2)
  CHECK_FALSE(divide_in_quotient(pp("x", ring), pp("y", ring), I, 2).has_value());
}

TEST_CASE("elimination order blocks: first block eliminated") {
  auto ring = GradedRing::make({{"z", 1}, {"x", 1}, {"y", 1}});
  auto order = MonomialOrder::elimination(ring, {0});
  Ideal I(ring, {pp("z - x - y", ring), pp("z^2 - x*y", ring)}, false);
  auto gb = GroebnerBasis(I, order, -1, true);
  bool found = false;
  for (const auto& g : gb.basis()) {
    bool zfree = true;
    for (const auto& [m, c] : g.terms())
      if (m.e[0] != 0) zfree = false;
    if (zfree && !g.is_zero()) {
      found = true;
      CHECK(is_member(pp("(x+y)^2 - x*y", ring), I));
    }
  }
  CHECK(found);
}
