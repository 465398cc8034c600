#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratachow/chern.hpp"
#include "stratachow/parse.hpp"

using namespace stratachow;

namespace {
Polynomial pp(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

// the degree-9 class, expanded
const char* kC9 =
    "-16192/19683*lambda1^9 - 23200/6561*lambda1^8*xi1 - 31040/6561*lambda1^7*xi1^2"
    " + 1376/729*lambda1^7*lambda2 - 320/6561*lambda1^6*xi1^3 + 4576/243*lambda1^6*xi1*lambda2"
    " + 30784/6561*lambda1^5*xi1^4 + 10144/243*lambda1^5*xi1^2*lambda2 + 3968/81*lambda1^5*lambda2^2"
    " + 16256/6561*lambda1^4*xi1^5 + 15136/729*lambda1^4*xi1^3*lambda2 + 992/27*lambda1^4*xi1*lambda2^2"
    " - 320/243*lambda1^3*xi1^6 - 5792/243*lambda1^3*xi1^4*lambda2 - 11072/81*lambda1^3*xi1^2*lambda2^2"
    " - 7264/27*lambda1^3*lambda2^3 - 7360/6561*lambda1^2*xi1^7 - 5216/243*lambda1^2*xi1^5*lambda2"
    " - 11392/81*lambda1^2*xi1^3*lambda2^2 - 2848/9*lambda1^2*xi1*lambda2^3 + 640/6561*lambda1*xi1^8"
    " + 1952/729*lambda1*xi1^6*lambda2 + 832/27*lambda1*xi1^4*lambda2^2 + 1568/9*lambda1*xi1^2*lambda2^3"
    " + 384*lambda1*lambda2^4 + 2912/19683*xi1^9 + 352/81*xi1^7*lambda2 + 3808/81*xi1^5*lambda2^2"
    " + 5984/27*xi1^3*lambda2^3 + 384*xi1*lambda2^4";
}  // namespace

TEST_CASE("top chern of symmetric powers of a rank-2 bundle") {
  auto tgt = GradedRing::make({{"e1", 1}, {"e2", 2}});
  RootBundle B(2, {pp("e1", tgt), pp("e2", tgt)}, tgt);
  CHECK(sym_twist_top_chern(B, 1, {}) == pp("e2", tgt));
  CHECK(sym_twist_top_chern(B, 2, {}) == pp("4*e1*e2", tgt));
  // Sym^3 roots: 3a, 2a+b, a+2b, 3b -> product = 9*e2*(2*e1^2+e2)... check degree
  Polynomial s3 = sym_twist_top_chern(B, 3, {});
  CHECK(s3.homogeneous_degree() == 4);
  CHECK(s3 == pp("9*e2*(2*e1^2 + e2)", tgt));
}

TEST_CASE("whitney-style twist check on a rank-2 bundle") {
  auto tgt = GradedRing::make({{"e1", 1}, {"e2", 2}, {"u", 1}});
  RootBundle B(2, {pp("e1", tgt), pp("e2", tgt)}, tgt);
  // roots a+u, b+u: product = e2 + e1*u + u^2
  CHECK(sym_twist_top_chern(B, 1, {{pp("u", tgt), 1}}) == pp("e2 + e1*u + u^2", tgt));
  // twist by -2u: (a-2u)(b-2u) = e2 - 2*e1*u + 4*u^2
  CHECK(sym_twist_top_chern(B, 1, {{pp("u", tgt), -2}}) == pp("e2 - 2*e1*u + 4*u^2", tgt));
}

TEST_CASE("symmetric reduction rejects non-symmetric input") {
  auto R = cherndetail::root_ring(2, 0);
  Polynomial asym = Polynomial::variable(R, 0);  // just one root
  CHECK_THROWS_AS(cherndetail::symmetric_reduce(asym, 2, 0), SymmetryReductionFailed);
}

TEST_CASE("change of variables and its inverse compose to the identity") {
  RingMap fwd = change_vars_H3_map();
  RingMap inv = change_vars_H3_inverse_map();
  auto C = fwd.source();
  auto L = fwd.target();
  for (std::size_t i = 0; i < C->nvars(); ++i) {
    Polynomial v = Polynomial::variable(C, i);
    CHECK(inv.apply(fwd.apply(v)) == v);
  }
  for (std::size_t i = 0; i < L->nvars(); ++i) {
    Polynomial v = Polynomial::variable(L, i);
    CHECK(fwd.apply(inv.apply(v)) == v);
  }
}

TEST_CASE("change of variables sends the c-expressions to the D classes") {
  auto C = c_ring();
  auto L = lx_ring();
  CHECK(change_vars_H3(pp("c1", C)) == pp("-xi1", L));
  CHECK(change_vars_H3(pp("2*s*c1*(c1 - 4*s)", C)) ==
        pp("2/9*xi1*(lambda1+xi1)*(4*lambda1+xi1)", L));
  CHECK(change_vars_H3(pp("2*s*c1*(4*s^2 - 2*s*c1 + c2)", C)) ==
        pp("2/27*xi1*(xi1+lambda1)*(9*lambda2 + (xi1+lambda1)^2)", L));
}

TEST_CASE("exact division works and detects inexactness") {
  auto R = GradedRing::make({{"x", 1}, {"y", 1}});
  Polynomial n = pp("x^2 - y^2", R), d = pp("x + y", R);
  CHECK(exact_divide(n, d) == pp("x - y", R));
  CHECK_THROWS_AS(exact_divide(pp("x^2 + y^2", R), d), InexactDivision);
}

TEST_CASE("the degree-9 class matches its displayed expansion term for term") {
  Polynomial c9 = compute_c9();
  auto L = lx_ring();
  CHECK(c9.homogeneous_degree() == 9);
  Monomial xi9(3);
  xi9.e[2] = 9;
  CHECK(c9.coefficient_of(xi9) == Rational::from_string("2912/19683"));
  Monomial l1l24(3);
  l1l24.e[0] = 1;
  l1l24.e[1] = 4;
  CHECK(c9.coefficient_of(l1l24) == Rational(384));
  CHECK(c9 == pp(kC9, L));
  CHECK(c9.term_count() == 30);
}

TEST_CASE("the third chern class of the pushforward bundle is forced to zero") {
  Polynomial c3 = derive_c3_vanishing();
  CHECK(c3.is_zero());
  // linearity: perturbing c3 by any degree-3 monomial breaks the identity
  auto C = c_ring();
  CHECK_FALSE((c3 + pp("s^3", C)).is_zero());
}
