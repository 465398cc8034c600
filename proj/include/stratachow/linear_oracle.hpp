#pragma once
// Independent brute-force membership oracle: p (homogeneous, degree d) lies in
// the ideal generated by homogeneous g_1..g_r iff p is in the rational span of
// { m * g_i : deg(m * g_i) = d }. Decided by dense exact Gaussian elimination.
//
// This file deliberately depends only on poly-core and implements its own
// linear algebra; it must stay independent of the Groebner engine.

#include <map>
#include <stdexcept>
#include <vector>

#include "stratachow/poly.hpp"

namespace stratachow {

namespace oracle_detail {

// All monomials of exact weighted degree d, in a fixed deterministic order.
inline void enumerate_monomials(const GradedRing& ring, long d, std::size_t var, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (var == ring.nvars()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  int w = ring.degree(var);
  for (long e = 0; e * w <= d; ++e) {
    cur.e[var] = static_cast<int>(e);
    enumerate_monomials(ring, d - e * w, var + 1, cur, out);
  }
  cur.e[var] = 0;
}

inline std::vector<Monomial> monomials_of_degree(const RingPtr& ring, long d) {
  std::vector<Monomial> out;
  Monomial cur(ring->nvars());
  enumerate_monomials(*ring, d, 0, cur, out);
  return out;
}

}  // namespace oracle_detail

// True iff the linear system (columns = shifted generators) has a solution
// whose combination equals p. Generators and p must be homogeneous.
inline bool member_linear_oracle(const Polynomial& p, const RingPtr& ring,
                                 const std::vector<Polynomial>& generators) {
  if (!same_ring(p.ring(), ring)) throw std::invalid_argument("member_linear_oracle: ring mismatch");
  if (p.is_zero()) return true;
  auto pd = p.homogeneous_degree();
  if (!pd) throw std::invalid_argument("member_linear_oracle: p not homogeneous");
  long d = *pd;

  // row index: monomials of degree d
  std::vector<Monomial> rows = oracle_detail::monomials_of_degree(ring, d);
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i].e] = i;

  // columns: m * g for every generator g and monomial m with matching degree
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto gd = g.homogeneous_degree();
    if (!gd) throw std::invalid_argument("member_linear_oracle: generator not homogeneous");
    if (*gd > d) continue;
    for (const auto& m : oracle_detail::monomials_of_degree(ring, d - *gd)) {
      std::vector<Rational> col(rows.size(), Rational(0));
      for (const auto& [gm, gc] : g.terms()) col[row_of.at((gm * m).e)] += gc;
      cols.push_back(std::move(col));
    }
  }

  std::vector<Rational> rhs(rows.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) rhs[row_of.at(m.e)] = c;

  // Gaussian elimination on the augmented matrix [cols | rhs], row-major.
  std::size_t nrows = rows.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> M(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < nrows; ++i) M[i][j] = cols[j][i];
  for (std::size_t i = 0; i < nrows; ++i) M[i][ncols] = rhs[i];

  std::size_t pivot_row = 0;
  for (std::size_t pc = 0; pc < ncols && pivot_row < nrows; ++pc) {
    std::size_t pr = pivot_row;
    while (pr < nrows && M[pr][pc].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(M[pivot_row], M[pr]);
    Rational inv = M[pivot_row][pc].inverse();
    for (std::size_t j = pc; j <= ncols; ++j) M[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == pivot_row || M[i][pc].is_zero()) continue;
      Rational f = M[i][pc];
      for (std::size_t j = pc; j <= ncols; ++j) M[i][j] -= f * M[pivot_row][j];
    }
    ++pivot_row;
  }
  // inconsistent iff some row is (0 ... 0 | nonzero)
  for (std::size_t i = 0; i < nrows; ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < ncols; ++j)
      if (!M[i][j].is_zero()) { all_zero = false; break; }
    if (all_zero && !M[i][ncols].is_zero()) return false;
  }
  return true;
}

}  // namespace stratachow
