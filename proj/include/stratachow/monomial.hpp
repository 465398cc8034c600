#pragma once
// Monomials (exponent vectors) and monomial orders: weighted graded-reverse-
// lexicographic by default, plus block elimination orders built per call.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "stratachow/ring.hpp"

namespace stratachow {

struct Monomial {
  std::vector<int> e;

  explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  int total_raw() const { return std::accumulate(e.begin(), e.end(), 0); }

  long weighted_degree(const GradedRing& ring) const {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * ring.degree(i);
    return d;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial quotient(const Monomial& by) const {
    Monomial q(*this);
    for (std::size_t i = 0; i < e.size(); ++i) {
      q.e[i] -= by.e[i];
      if (q.e[i] < 0) throw std::domain_error("Monomial: quotient not divisible");
    }
    return q;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// A monomial order over a fixed ring: an ordered list of variable blocks.
// Comparison proceeds block by block; within a block, weighted degree first,
// then reverse-lexicographic tie-break (last differing variable of the block,
// smaller exponent wins). A single block containing every variable gives the
// default weighted grevlex order.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(const RingPtr& ring) {
    std::vector<int> all(ring->nvars());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return MonomialOrder(ring, {all});
  }

  // Elimination order: variables in `eliminate` dominate the rest.
  static MonomialOrder elimination(const RingPtr& ring, const std::vector<int>& eliminate) {
    std::vector<bool> in_first(ring->nvars(), false);
    for (int i : eliminate) in_first.at(static_cast<std::size_t>(i)) = true;
    std::vector<int> rest;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (!in_first[i]) rest.push_back(static_cast<int>(i));
    return MonomialOrder(ring, {eliminate, rest});
  }

  MonomialOrder(RingPtr ring, std::vector<std::vector<int>> blocks)
      : ring_(std::move(ring)), blocks_(std::move(blocks)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // Returns negative / zero / positive when a < b / a == b / a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& block : blocks_) {
      long da = 0, db = 0;
      for (int i : block) {
        da += static_cast<long>(a.e[static_cast<std::size_t>(i)]) * ring_->degree(static_cast<std::size_t>(i));
        db += static_cast<long>(b.e[static_cast<std::size_t>(i)]) * ring_->degree(static_cast<std::size_t>(i));
      }
      if (da != db) return da < db ? -1 : 1;
      for (auto it = block.rbegin(); it != block.rend(); ++it) {
        int ea = a.e[static_cast<std::size_t>(*it)], eb = b.e[static_cast<std::size_t>(*it)];
        if (ea != eb) return ea > eb ? -1 : 1;  // reverse-lex: larger trailing exponent is smaller
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // True when the monomial uses only variables outside the first block
  // (i.e. survives elimination).
  bool free_of_first_block(const Monomial& m) const {
    for (int i : blocks_.front())
      if (m.e[static_cast<std::size_t>(i)] > 0) return false;
    return true;
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace stratachow
