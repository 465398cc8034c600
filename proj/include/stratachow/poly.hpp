#pragma once
// Sparse multivariate polynomials over exact rationals, attached to a graded
// ring. Terms are kept in strictly descending weighted-grevlex order; the
// empty term list is zero. All operations are pure.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stratachow/monomial.hpp"
#include "stratachow/rational.hpp"
#include "stratachow/ring.hpp"

namespace stratachow {

class Polynomial;
class RingMap;

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("Polynomial: null ring");
  }

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const Rational& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(ring->nvars()), c);
    return p;
  }
  static Polynomial variable(const RingPtr& ring, std::size_t i) {
    Polynomial p(ring);
    Monomial m(ring->nvars());
    m.e.at(i) = 1;
    p.terms_.emplace_back(std::move(m), Rational(1));
    return p;
  }
  static Polynomial monomial(const RingPtr& ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Weighted degree of the highest-degree term; throws on zero.
  long degree() const {
    if (is_zero()) throw std::domain_error("Polynomial: degree of zero");
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(*ring_));
    return d;
  }

  // All terms share one weighted degree (vacuously true for zero).
  std::optional<long> homogeneous_degree() const {
    if (is_zero()) return 0;
    long d = terms_.front().first.weighted_degree(*ring_);
    for (const auto& [m, c] : terms_)
      if (m.weighted_degree(*ring_) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  std::map<long, Polynomial> homogeneous_components() const {
    std::map<long, Polynomial> out;
    for (const auto& [m, c] : terms_) {
      long d = m.weighted_degree(*ring_);
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, Polynomial(ring_)).first;
      it->second.terms_.emplace_back(m, c);
    }
    // each component inherits the global descending order
    return out;
  }

  Rational coefficient_of(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return Rational(0);
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    MonomialOrder ord = MonomialOrder::grevlex(a.ring_);
    Polynomial r(a.ring_);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = ord.compare(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        Rational c = a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i; ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    Polynomial r(a.ring_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    struct Cmp {
      MonomialOrder ord;
      bool operator()(const Monomial& x, const Monomial& y) const { return ord.compare(x, y) > 0; }
    };
    Cmp cmp{MonomialOrder::grevlex(a.ring_)};
    std::map<Monomial, Rational, Cmp> acc(cmp);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        auto [it, fresh] = acc.try_emplace(std::move(m), Rational(0));
        it->second += ca * cb;
      }
    Polynomial r(a.ring_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(m, c);
    return r;
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (n) {
      if (n & 1u) r = r * base;
      base = n > 1 ? base * base : base;
      n >>= 1u;
    }
    return r;
  }

  // Multiply by a single term without building a Polynomial for it.
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
    return r;  // multiplying every monomial by m preserves the ordering
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Construction hook for internal modules: terms must already be sorted
  // strictly descending under weighted grevlex with nonzero coefficients.
  static Polynomial from_sorted_terms(const RingPtr& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  void check_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("Polynomial: ring mismatch");
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

// A degree-preserving substitution between presented rings: every source
// variable is assigned a homogeneous target polynomial of matching weighted
// degree.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->nvars())
      throw std::invalid_argument("RingMap: need one image per source variable");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!same_ring(images_[i].ring(), target_))
        throw std::invalid_argument("RingMap: image ring mismatch for " + source_->name(i));
      auto d = images_[i].homogeneous_degree();
      if (!d) throw std::invalid_argument("RingMap: non-homogeneous image for " + source_->name(i));
      if (!images_[i].is_zero() && *d != source_->degree(i))
        throw std::invalid_argument("RingMap: degree mismatch for " + source_->name(i));
    }
  }

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const {
    if (!same_ring(p.ring(), source_)) throw std::invalid_argument("RingMap: polynomial not in source ring");
    Polynomial acc = Polynomial::zero(target_);
    for (const auto& [m, c] : p.terms()) {
      Polynomial t = Polynomial::constant(target_, c);
      for (std::size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i] > 0) t = t * images_[i].pow(static_cast<unsigned>(m.e[i]));
      acc = acc + t;
    }
    return acc;
  }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

inline Polynomial substitute(const Polynomial& p, const RingMap& map) { return map.apply(p); }

}  // namespace stratachow
