#pragma once
// Splitting-principle Chern-class calculus: top Chern classes of twisted
// symmetric powers via root expansion, symmetric reduction into elementary
// symmetric polynomials, and the specific degree-9 class computation with its
// change of variables.

#include <stdexcept>
#include <string>
#include <vector>

#include "stratachow/groebner.hpp"
#include "stratachow/poly.hpp"

namespace stratachow {

struct SymmetryReductionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vector bundle presented by Chern roots: rank in 1..3 and the values of the
// elementary symmetric polynomials e_1..e_rank in a target ring.
struct RootBundle {
  int rank;
  std::vector<Polynomial> e;  // e[i] = value of e_{i+1}, homogeneous of degree i+1 (or zero)
  RingPtr target;

  RootBundle(int rank_, std::vector<Polynomial> e_, RingPtr target_)
      : rank(rank_), e(std::move(e_)), target(std::move(target_)) {
    if (rank < 1 || rank > 3) throw std::invalid_argument("RootBundle: rank must be 1..3");
    if (e.size() != static_cast<std::size_t>(rank))
      throw std::invalid_argument("RootBundle: need one elementary symmetric value per rank");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!same_ring(e[i].ring(), target))
        throw std::invalid_argument("RootBundle: e-value ring mismatch");
      auto d = e[i].homogeneous_degree();
      if (!d || (!e[i].is_zero() && *d != static_cast<long>(i) + 1))
        throw std::invalid_argument("RootBundle: e_" + std::to_string(i + 1) +
                                    " must be homogeneous of degree " + std::to_string(i + 1));
    }
  }
};

// A tensor twist by line-bundle factors: each factor contributes
// multiplicity * symbol to every Chern root.
struct TwistFactor {
  Polynomial symbol;  // degree-1 polynomial in the bundle's target ring
  int multiplicity;
};
using TwistSpec = std::vector<TwistFactor>;

namespace cherndetail {

// Working ring for root expansion: root variables first, then one variable
// per twist symbol, all of degree 1.
inline RingPtr root_ring(int rank, std::size_t ntwist) {
  static const char* names[3] = {"RT__a", "RT__b", "RT__c"};
  std::vector<std::pair<std::string, int>> vars;
  for (int i = 0; i < rank; ++i) vars.emplace_back(names[i], 1);
  for (std::size_t j = 0; j < ntwist; ++j) vars.emplace_back("TW__" + std::to_string(j), 1);
  return GradedRing::make(vars);
}

// Product over all multisets of size n of the roots, each shifted by the
// twist contribution. Degree = binomial(n+rank-1, rank-1).
inline Polynomial expand_product(const RingPtr& R, int rank, int n, std::size_t ntwist,
                                 const std::vector<int>& multiplicities) {
  Polynomial twist_shift = Polynomial::zero(R);
  for (std::size_t j = 0; j < ntwist; ++j)
    twist_shift =
        twist_shift + Polynomial::variable(R, static_cast<std::size_t>(rank) + j) *
                          Rational(multiplicities[j]);

  Polynomial product = Polynomial::constant(R, Rational(1));
  // iterate over exponent vectors (i_1..i_rank) with sum n
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  auto emit = [&](const std::vector<int>& iv) {
    Polynomial factor = twist_shift;
    for (int v = 0; v < rank; ++v)
      factor = factor + Polynomial::variable(R, static_cast<std::size_t>(v)) * Rational(iv[v]);
    product = product * factor;
  };
  // recursive enumeration without recursion: rank is at most 3
  if (rank == 1) {
    emit({n});
  } else if (rank == 2) {
    for (int i = 0; i <= n; ++i) emit({i, n - i});
  } else {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j + i <= n; ++j) emit({i, j, n - i - j});
  }
  return product;
}

// Rewrite a polynomial symmetric in the first `rank` variables of R into the
// elementary symmetric polynomials. Output ring: [E__1..E__rank, twist vars].
// Throws SymmetryReductionFailed if the input is not symmetric.
inline Polynomial symmetric_reduce(const Polynomial& p, int rank, std::size_t ntwist) {
  const RingPtr& R = p.ring();
  std::vector<std::pair<std::string, int>> evars;
  for (int i = 1; i <= rank; ++i) evars.emplace_back("E__" + std::to_string(i), i);
  for (std::size_t j = 0; j < ntwist; ++j)
    evars.emplace_back(R->name(static_cast<std::size_t>(rank) + j), 1);
  RingPtr E = GradedRing::make(evars);

  // elementary symmetric polynomials of the roots, expanded in R
  std::vector<Polynomial> elem;  // elem[i] = e_{i+1}
  {
    // build via the product expansion prod (1 + x_i T) coefficientwise
    std::vector<Polynomial> coeff(static_cast<std::size_t>(rank) + 1, Polynomial::zero(R));
    coeff[0] = Polynomial::constant(R, Rational(1));
    for (int v = 0; v < rank; ++v) {
      Polynomial x = Polynomial::variable(R, static_cast<std::size_t>(v));
      for (int d = v + 1; d >= 1; --d) coeff[static_cast<std::size_t>(d)] =
          coeff[static_cast<std::size_t>(d)] + coeff[static_cast<std::size_t>(d - 1)] * x;
    }
    for (int i = 1; i <= rank; ++i) elem.push_back(coeff[static_cast<std::size_t>(i)]);
  }

  Polynomial rest = p;
  Polynomial out = Polynomial::zero(E);
  while (!rest.is_zero()) {
    // lex-leading term in the root variables (then twist exponents)
    const Polynomial::Term* lead = nullptr;
    for (const auto& t : rest.terms()) {
      if (!lead) { lead = &t; continue; }
      // lexicographic comparison over the full exponent vector
      if (t.first.e > lead->first.e) lead = &t;
    }
    const Monomial& m = lead->first;
    // exponents of the roots must be weakly decreasing for a symmetric poly
    for (int v = 0; v + 1 < rank; ++v)
      if (m.e[static_cast<std::size_t>(v)] < m.e[static_cast<std::size_t>(v + 1)])
        throw SymmetryReductionFailed("symmetric_reduce: input not symmetric in the roots");

    // subtract coeff * prod e_i^{alpha_i - alpha_{i+1}} * (twist part)
    Monomial em(E->nvars());
    Polynomial sub = Polynomial::constant(R, lead->second);
    for (int v = 0; v < rank; ++v) {
      int exp = m.e[static_cast<std::size_t>(v)] -
                (v + 1 < rank ? m.e[static_cast<std::size_t>(v + 1)] : 0);
      em.e[static_cast<std::size_t>(v)] = exp;
      if (exp > 0) sub = sub * elem[static_cast<std::size_t>(v)].pow(static_cast<unsigned>(exp));
    }
    Monomial tw(R->nvars());
    for (std::size_t j = 0; j < ntwist; ++j) {
      int exp = m.e[static_cast<std::size_t>(rank) + j];
      em.e[static_cast<std::size_t>(rank) + j] = exp;
      tw.e[static_cast<std::size_t>(rank) + j] = exp;
    }
    sub = sub.times_term(tw, Rational(1));
    out = out + Polynomial::monomial(E, em, lead->second);
    rest = rest - sub;
  }
  return out;
}

// Map the symmetric-reduced polynomial into the target ring by substituting
// the bundle's e-values and the twist symbols.
inline Polynomial into_target(const Polynomial& reduced, const RootBundle& B, const TwistSpec& T) {
  std::vector<Polynomial> images;
  for (int i = 0; i < B.rank; ++i) images.push_back(B.e[static_cast<std::size_t>(i)]);
  for (const auto& f : T) images.push_back(f.symbol);
  RingMap to_target(reduced.ring(), B.target, std::move(images));
  return to_target.apply(reduced);
}

}  // namespace cherndetail

// Top Chern class of Sym^n(B) twisted by the line factors of T, expressed in
// the bundle's target ring.
inline Polynomial sym_twist_top_chern(const RootBundle& B, int n, const TwistSpec& T) {
  if (n < 1) throw std::invalid_argument("sym_twist_top_chern: n must be >= 1");
  std::vector<int> mults;
  for (const auto& f : T) {
    mults.push_back(f.multiplicity);
    auto d = f.symbol.homogeneous_degree();
    if (!d || (!f.symbol.is_zero() && *d != 1))
      throw std::invalid_argument("sym_twist_top_chern: twist symbol must have degree 1");
  }
  RingPtr R = cherndetail::root_ring(B.rank, T.size());
  Polynomial product = cherndetail::expand_product(R, B.rank, n, T.size(), mults);
  Polynomial reduced = cherndetail::symmetric_reduce(product, B.rank, T.size());
  return cherndetail::into_target(reduced, B, T);
}

// The ring Q[c1, c2, s] used by the degree-9 class and its change of
// variables into Q[lambda1, lambda2, xi1].
inline RingPtr c_ring() { return GradedRing::make({{"c1", 1}, {"c2", 2}, {"s", 1}}); }
inline RingPtr lx_ring() {
  return GradedRing::make({{"lambda1", 1}, {"lambda2", 2}, {"xi1", 1}});
}

// c1 -> -xi1, c2 -> lambda2 - (lambda1^2 - xi1^2)/3, s -> -(xi1 + lambda1)/3.
inline RingMap change_vars_H3_map() {
  RingPtr C = c_ring(), L = lx_ring();
  Polynomial l1 = Polynomial::variable(L, 0), l2 = Polynomial::variable(L, 1),
             x1 = Polynomial::variable(L, 2);
  Polynomial c1 = -x1;
  Polynomial c2 = l2 - (l1 * l1 - x1 * x1) * Rational(1, 3);
  Polynomial s = -(x1 + l1) * Rational(1, 3);
  return RingMap(C, L, {c1, c2, s});
}

// lambda1 -> c1 - 3s, lambda2 -> c2 - 2*s*c1 + 3*s^2, xi1 -> -c1.
inline RingMap change_vars_H3_inverse_map() {
  RingPtr C = c_ring(), L = lx_ring();
  Polynomial c1 = Polynomial::variable(C, 0), c2 = Polynomial::variable(C, 1),
             s = Polynomial::variable(C, 2);
  Polynomial l1 = c1 - s * Rational(3);
  Polynomial l2 = c2 - s * c1 * Rational(2) + s * s * Rational(3);
  Polynomial x1 = -c1;
  return RingMap(L, C, {l1, l2, x1});
}

inline Polynomial change_vars_H3(const Polynomial& p) { return change_vars_H3_map().apply(p); }

// Exact quotient of two polynomials; throws InexactDivision when the division
// leaves a remainder.
inline Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (num.is_zero()) return Polynomial::zero(num.ring());
  Ideal principal(num.ring(), {den}, /*require_homogeneous=*/false);
  GroebnerBasis gb(principal, MonomialOrder::grevlex(num.ring()), -1, true);
  Certificate cert = gb.normal_form(num);
  if (!cert.remainder.is_zero()) throw InexactDivision("exact_divide: nonzero remainder");
  return cert.cofactors.at(0);
}

// The degree-9 class in Q[lambda1, lambda2, xi1]: top Chern of the twisted
// Sym^4 divided by the top Chern of the twisted determinant-Sym^2 product.
// Both products are expanded in root variables and symmetrized; the division
// is exact only after imposing e3 = 0, so it is performed in Q[c1, c2, s].
// The result is pushed through the change of variables.
inline Polynomial compute_c9() {
  const int rank = 3;
  RingPtr R = cherndetail::root_ring(rank, 1);  // roots a,b,c plus the twist symbol s
  Polynomial num = cherndetail::expand_product(R, rank, 4, 1, {-2});
  // denominator: roots of det(W) tensor Sym^2(W), twisted: each Sym^2 root
  // (i a + j b + k c, i+j+k = 2) shifted by (a+b+c) - 2s
  Polynomial a = Polynomial::variable(R, 0), b = Polynomial::variable(R, 1),
             c = Polynomial::variable(R, 2), s = Polynomial::variable(R, 3);
  Polynomial det_shift = a + b + c - s * Rational(2);
  Polynomial den = Polynomial::constant(R, Rational(1));
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j + i <= 2; ++j) {
      int k = 2 - i - j;
      den = den * (a * Rational(i) + b * Rational(j) + c * Rational(k) + det_shift);
    }
  Polynomial num_e = cherndetail::symmetric_reduce(num, rank, 1);
  Polynomial den_e = cherndetail::symmetric_reduce(den, rank, 1);

  // E__1 -> c1, E__2 -> c2, E__3 -> 0, TW__0 -> s
  RingPtr C = c_ring();
  RingMap to_c(num_e.ring(), C,
               {Polynomial::variable(C, 0), Polynomial::variable(C, 1), Polynomial::zero(C),
                Polynomial::variable(C, 2)});
  Polynomial quotient = exact_divide(to_c.apply(num_e), to_c.apply(den_e));
  return change_vars_H3(quotient);
}

// Solves lambda3 = c3 - s*c2 + s^2*c1 - s^3 against the displayed lambda3
// identity; returns the forced value of c3 (expected: zero).
inline Polynomial derive_c3_vanishing() {
  RingPtr L = lx_ring();
  Polynomial l1 = Polynomial::variable(L, 0), l2 = Polynomial::variable(L, 1),
             x1 = Polynomial::variable(L, 2);
  // lambda3 = (xi1+lambda1)*(9*lambda2 + (xi1+lambda1)*(xi1-2*lambda1))/27
  Polynomial lam3 =
      (x1 + l1) * (l2 * Rational(9) + (x1 + l1) * (x1 - l1 * Rational(2))) * Rational(1, 27);
  Polynomial lam3_c = change_vars_H3_inverse_map().apply(lam3);
  RingPtr C = c_ring();
  Polynomial c1 = Polynomial::variable(C, 0), c2 = Polynomial::variable(C, 1),
             s = Polynomial::variable(C, 2);
  // c3 = lambda3 + s*c2 - s^2*c1 + s^3
  return lam3_c + s * c2 - s * s * c1 + s * s * s;
}

}  // namespace stratachow
