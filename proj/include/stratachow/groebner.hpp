#pragma once
// Ideal arithmetic: reduced Groebner bases (Buchberger with cofactor
// tracking), certified normal forms, membership, ideal equality, map kernels
// via graph-ideal elimination, nonzerodivisor tests, and exact division in
// quotient rings.
//
// All public ideal operations require homogeneous generators, which makes
// degree-capped computation sound: for a homogeneous ideal, every S-polynomial
// is homogeneous and reduction preserves degree, so a basis built from all
// S-pairs of degree <= D decides membership and normal forms exactly for
// polynomials of degree <= D, under any monomial order.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "stratachow/poly.hpp"

namespace stratachow {

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators, bool require_homogeneous = true)
      : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("Ideal: generator ring mismatch");
      if (g.is_zero()) continue;
      if (require_homogeneous && !g.is_homogeneous())
        throw std::invalid_argument("Ideal: non-homogeneous generator");
      gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// target = sum(cofactor_i * generator_i) + remainder, exactly.
struct Certificate {
  Polynomial target;
  std::vector<Polynomial> cofactors;
  Polynomial remainder;

  bool cofactors_smooth23() const {
    for (const auto& c : cofactors)
      for (const auto& [m, q] : c.terms())
        if (!q.denominator_smooth23()) return false;
    return true;
  }
};

struct MembershipReport {
  bool member_over_Q;
  Certificate certificate;
  bool smooth_over_Z16;  // meaningful when member_over_Q

  explicit MembershipReport(Certificate cert)
      : member_over_Q(cert.remainder.is_zero()),
        certificate(std::move(cert)),
        smooth_over_Z16(member_over_Q && certificate.cofactors_smooth23()) {}

  explicit operator bool() const { return member_over_Q; }
};

namespace gbdetail {

using Term = Polynomial::Term;

// Terms sorted strictly descending under the active order, plus the cofactor
// expression of this element over the original generators.
struct Tracked {
  std::vector<Term> terms;
  std::vector<Polynomial> cof;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

inline std::vector<Term> sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
  std::vector<Term> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.first, b.first) > 0;
  });
  return t;
}

inline Polynomial to_polynomial(const RingPtr& ring, const std::vector<Term>& terms) {
  Polynomial acc = Polynomial::zero(ring);
  for (const auto& [m, c] : terms) acc = acc + Polynomial::monomial(ring, m, c);
  return acc;
}

// dst := dst - c * mono * src   (merge of sorted term lists)
inline std::vector<Term> sub_mult(const std::vector<Term>& dst, const std::vector<Term>& src,
                                  const Monomial& mono, const Rational& c,
                                  const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() && j < src.size()) {
    Monomial mj = src[j].first * mono;
    int cmp = ord.compare(dst[i].first, mj);
    if (cmp > 0) {
      out.push_back(dst[i++]);
    } else if (cmp < 0) {
      out.emplace_back(std::move(mj), -(c * src[j].second));
      ++j;
    } else {
      Rational cc = dst[i].second - c * src[j].second;
      if (!cc.is_zero()) out.emplace_back(dst[i].first, cc);
      ++i; ++j;
    }
  }
  for (; i < dst.size(); ++i) out.push_back(dst[i]);
  for (; j < src.size(); ++j) out.emplace_back(src[j].first * mono, -(c * src[j].second));
  return out;
}

}  // namespace gbdetail

class GroebnerBasis {
 public:
  // cap < 0 means uncapped. Homogeneity of all generators is required when a
  // cap is set; `allow_inhomogeneous` is for internal (uncapped) use only.
  GroebnerBasis(const Ideal& ideal, MonomialOrder order, long cap = -1,
                bool allow_inhomogeneous = false, bool track_cofactors = true)
      : ideal_(ideal), order_(std::move(order)), cap_(cap), track_(track_cofactors) {
    if (!same_ring(ideal.ring(), order_.ring()))
      throw std::invalid_argument("GroebnerBasis: order/ideal ring mismatch");
    if (cap_ >= 0 || !allow_inhomogeneous) {
      for (const auto& g : ideal.generators())
        if (!g.is_homogeneous())
          throw std::invalid_argument("GroebnerBasis: non-homogeneous generator");
    }
    compute();
  }

  const Ideal& ideal() const { return ideal_; }
  const MonomialOrder& order() const { return order_; }
  long cap() const { return cap_; }
  bool capped_pairs_skipped() const { return skipped_; }

  // Reduced basis elements, ascending by leading monomial.
  std::vector<Polynomial> basis() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (const auto& t : basis_) out.push_back(gbdetail::to_polynomial(ideal_.ring(), t.terms));
    return out;
  }
  std::size_t size() const { return basis_.size(); }

  // Cofactor expression of basis element i over the original generators.
  const std::vector<Polynomial>& basis_cofactors(std::size_t i) const {
    if (!track_) throw std::logic_error("GroebnerBasis: cofactors not tracked");
    return basis_.at(i).cof;
  }
  const std::vector<gbdetail::Term>& basis_terms(std::size_t i) const { return basis_.at(i).terms; }

  // Full normal form of p with an exact cofactor certificate over the
  // ORIGINAL generators.
  Certificate normal_form(const Polynomial& p) const {
    if (!same_ring(p.ring(), ideal_.ring()))
      throw std::invalid_argument("normal_form: ring mismatch");
    gbdetail::Tracked f;
    f.terms = gbdetail::sorted_terms(p, order_);
    std::size_t n = ideal_.generators().size();
    f.cof.assign(n, Polynomial::zero(ideal_.ring()));
    std::vector<gbdetail::Term> remainder;
    reduce_full(f, &remainder);
    Certificate cert{p, {}, gbdetail::to_polynomial(ideal_.ring(), remainder)};
    cert.cofactors.reserve(n);
    for (auto& c : f.cof) cert.cofactors.push_back(std::move(c));
    return cert;
  }

 private:
  void reduce_full(gbdetail::Tracked& f, std::vector<gbdetail::Term>* remainder) const {
    // Invariant maintained: original = (sum over i of -f.cof[i] * gen_i)
    //                                  + current f + extracted remainder.
    while (!f.terms.empty()) {
      bool reduced = false;
      const Monomial& lm = f.terms.front().first;
      for (const auto& g : basis_) {
        if (!g.lead().first.divides(lm)) continue;
        Monomial q = lm.quotient(g.lead().first);
        Rational c = f.terms.front().second / g.lead().second;
        f.terms = gbdetail::sub_mult(f.terms, g.terms, q, c, order_);
        if (track_)
          for (std::size_t k = 0; k < f.cof.size(); ++k)
            if (!g.cof[k].is_zero()) f.cof[k] = f.cof[k] + g.cof[k].times_term(q, c);
        reduced = true;
        break;
      }
      if (!reduced) {
        if (remainder) remainder->push_back(f.terms.front());
        f.terms.erase(f.terms.begin());
      }
    }
    if (remainder) {
      // terms were extracted head-first, so the remainder is already sorted
    }
  }

  void compute() {
    using gbdetail::Tracked;
    const auto& gens = ideal_.generators();
    std::size_t n = gens.size();
    std::vector<Tracked> work;
    for (std::size_t i = 0; i < n; ++i) {
      if (gens[i].is_zero()) continue;
      Tracked t;
      t.terms = gbdetail::sorted_terms(gens[i], order_);
      if (track_) {
        t.cof.assign(n, Polynomial::zero(ideal_.ring()));
        t.cof[i] = Polynomial::constant(ideal_.ring(), Rational(1));
      } else {
        t.cof.assign(n, Polynomial::zero(ideal_.ring()));
      }
      work.push_back(std::move(t));
    }

    struct Pair {
      long deg;
      Monomial lcm;
      std::size_t i, j;
    };
    auto pair_less = [this](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      int c = order_.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };

    std::vector<Pair> queue;
    auto push_pairs_with = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (work[i].is_zero()) continue;
        const Monomial& a = work[i].lead().first;
        const Monomial& b = work[j].lead().first;
        if (a.coprime(b)) continue;  // Buchberger's first criterion
        Monomial l = a.lcm(b);
        queue.push_back(Pair{l.weighted_degree(*ideal_.ring()), std::move(l), i, j});
      }
    };
    for (std::size_t j = 0; j < work.size(); ++j) push_pairs_with(j);

    while (!queue.empty()) {
      auto it = std::min_element(queue.begin(), queue.end(), pair_less);
      Pair p = std::move(*it);
      queue.erase(it);
      if (cap_ >= 0 && p.deg > cap_) { skipped_ = true; continue; }
      // chain criterion: an element whose lead divides the lcm strictly,
      // with both mixed pairs already handled, lets us skip this pair
      const Tracked& gi = work[p.i];
      const Tracked& gj = work[p.j];
      if (gi.is_zero() || gj.is_zero()) continue;
      Monomial l = gi.lead().first.lcm(gj.lead().first);
      if (l != p.lcm) continue;  // a participant was replaced meanwhile

      // S-polynomial with cofactor tracking
      Tracked s;
      s.terms = gbdetail::sub_mult(
          std::vector<gbdetail::Term>{}, gi.terms, l.quotient(gi.lead().first),
          -(Rational(1) / gi.lead().second), order_);
      s.terms = gbdetail::sub_mult(s.terms, gj.terms, l.quotient(gj.lead().first),
                                   Rational(1) / gj.lead().second, order_);
      s.cof.assign(n, Polynomial::zero(ideal_.ring()));
      if (track_) {
        Monomial qi = l.quotient(gi.lead().first);
        Monomial qj = l.quotient(gj.lead().first);
        Rational ci = Rational(1) / gi.lead().second;
        Rational cj = Rational(1) / gj.lead().second;
        for (std::size_t k = 0; k < n; ++k) {
          Polynomial acc = Polynomial::zero(ideal_.ring());
          if (!gi.cof[k].is_zero()) acc = acc + gi.cof[k].times_term(qi, ci);
          if (!gj.cof[k].is_zero()) acc = acc - gj.cof[k].times_term(qj, cj);
          s.cof[k] = std::move(acc);
        }
      }

      reduce_against(work, s);
      if (!s.terms.empty()) {
        work.push_back(std::move(s));
        push_pairs_with(work.size() - 1);
      }
    }

    // Interreduce into the unique reduced basis.
    basis_ = interreduce(std::move(work), n);
  }

  void reduce_against(const std::vector<gbdetail::Tracked>& set, gbdetail::Tracked& f) const {
    bool progress = true;
    while (progress && !f.terms.empty()) {
      progress = false;
      const Monomial& lm = f.terms.front().first;
      for (const auto& g : set) {
        if (g.is_zero() || !g.lead().first.divides(lm)) continue;
        Monomial q = lm.quotient(g.lead().first);
        Rational c = f.terms.front().second / g.lead().second;
        f.terms = gbdetail::sub_mult(f.terms, g.terms, q, c, order_);
        if (track_)
          for (std::size_t k = 0; k < f.cof.size(); ++k)
            if (!g.cof[k].is_zero()) f.cof[k] = f.cof[k] - g.cof[k].times_term(q, c);
        progress = true;
        break;
      }
    }
  }

  std::vector<gbdetail::Tracked> interreduce(std::vector<gbdetail::Tracked> set, std::size_t n) {
    // drop zero elements and elements with redundant leads (decide all
    // redundancies before moving anything out of `set`)
    std::vector<bool> keep(set.size(), false);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].is_zero()) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (i == j || set[j].is_zero()) continue;
        if (set[j].lead().first.divides(set[i].lead().first) &&
            (set[j].lead().first != set[i].lead().first || j < i)) {
          redundant = true;
          break;
        }
      }
      keep[i] = !redundant;
    }
    std::vector<gbdetail::Tracked> kept;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (keep[i]) kept.push_back(std::move(set[i]));
    // fully tail-reduce each element against the others and make monic
    std::vector<gbdetail::Tracked> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      gbdetail::Tracked f = kept[i];
      std::vector<gbdetail::Tracked> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      gbdetail::Tracked red;
      red.terms.swap(f.terms);
      red.cof.swap(f.cof);
      // head term is irreducible by construction; reduce tail terms
      std::vector<gbdetail::Term> result;
      while (!red.terms.empty()) {
        const Monomial& lm = red.terms.front().first;
        bool reduced = false;
        for (const auto& g : others) {
          if (!g.lead().first.divides(lm)) continue;
          Monomial q = lm.quotient(g.lead().first);
          Rational c = red.terms.front().second / g.lead().second;
          red.terms = gbdetail::sub_mult(red.terms, g.terms, q, c, order_);
          if (track_)
            for (std::size_t k = 0; k < red.cof.size(); ++k)
              if (!g.cof[k].is_zero()) red.cof[k] = red.cof[k] - g.cof[k].times_term(q, c);
          reduced = true;
          break;
        }
        if (!reduced) {
          result.push_back(red.terms.front());
          red.terms.erase(red.terms.begin());
        }
      }
      red.terms = std::move(result);
      if (red.terms.empty()) continue;
      Rational lc = red.terms.front().second;
      for (auto& [m, c] : red.terms) c /= lc;
      if (track_)
        for (auto& c : red.cof) c = c * lc.inverse();
      out.push_back(std::move(red));
    }
    std::sort(out.begin(), out.end(), [this](const gbdetail::Tracked& a, const gbdetail::Tracked& b) {
      return order_.compare(a.lead().first, b.lead().first) < 0;
    });
    (void)n;
    return out;
  }

  Ideal ideal_;
  MonomialOrder order_;
  long cap_;
  bool track_;
  bool skipped_ = false;
  std::vector<gbdetail::Tracked> basis_;
};

inline GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order, long cap = -1) {
  return GroebnerBasis(ideal, order, cap);
}

inline Certificate normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return gb.normal_form(p);
}

inline MembershipReport is_member(const Polynomial& p, const Ideal& I, long cap = -1) {
  if (!same_ring(p.ring(), I.ring())) throw std::invalid_argument("is_member: ring mismatch");
  if (!p.is_homogeneous()) throw std::invalid_argument("is_member: polynomial not homogeneous");
  long use_cap = cap >= 0 ? cap : (p.is_zero() ? 0 : p.degree());
  GroebnerBasis gb(I, MonomialOrder::grevlex(I.ring()), use_cap);
  return MembershipReport(gb.normal_form(p));
}

inline MembershipReport is_member(const Polynomial& p, const GroebnerBasis& gb) {
  return MembershipReport(gb.normal_form(p));
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ideal_equal: ring mismatch");
  long capI = 0, capJ = 0;
  for (const auto& g : J.generators()) capI = std::max(capI, g.degree());
  for (const auto& g : I.generators()) capJ = std::max(capJ, g.degree());
  GroebnerBasis gbI(I, MonomialOrder::grevlex(I.ring()), capI, false, false);
  for (const auto& g : J.generators())
    if (!gbI.normal_form(g).remainder.is_zero()) return false;
  GroebnerBasis gbJ(J, MonomialOrder::grevlex(J.ring()), capJ, false, false);
  for (const auto& g : I.generators())
    if (!gbJ.normal_form(g).remainder.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Graph-ideal elimination: kernels, preimages, subalgebra membership.
// ---------------------------------------------------------------------------

// Shared machinery for a ring map R -> S/J. Builds the combined ring
// [S-vars (renamed, eliminated block) | R-vars], the graph ideal
// < X_i - f_i(Y) > + J, and an elimination Groebner basis.
class MapElimination {
 public:
  MapElimination(const RingMap& map, const Ideal& J, long cap = -1)
      : map_(map), source_(map.source()), target_(map.target()) {
    if (!same_ring(J.ring(), target_))
      throw std::invalid_argument("MapElimination: J must live in the target ring");
    std::vector<std::pair<std::string, int>> vars;
    for (std::size_t i = 0; i < target_->nvars(); ++i)
      vars.emplace_back("E__" + target_->name(i), target_->degree(i));
    for (std::size_t i = 0; i < source_->nvars(); ++i) {
      if (source_->name(i).rfind("E__", 0) == 0)
        throw std::invalid_argument("MapElimination: reserved variable prefix E__ in source");
      vars.emplace_back(source_->name(i), source_->degree(i));
    }
    combined_ = GradedRing::make(std::move(vars));
    ntarget_ = target_->nvars();

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < source_->nvars(); ++i) {
      Polynomial xi = Polynomial::variable(combined_, ntarget_ + i);
      gens.push_back(xi - lift_target(map_.image(i)));
    }
    for (const auto& g : J.generators()) gens.push_back(lift_target(g));

    std::vector<int> elim;
    for (std::size_t i = 0; i < ntarget_; ++i) elim.push_back(static_cast<int>(i));
    Ideal graph(combined_, std::move(gens));
    gb_.emplace(graph, MonomialOrder::elimination(combined_, elim), cap, false, false);
  }

  // Kernel generators { p in R : f(p) in J }, from eliminated basis elements.
  std::vector<Polynomial> kernel_generators() const {
    std::vector<Polynomial> out;
    for (const auto& b : gb_->basis())
      if (free_of_target(b)) out.push_back(project_to_source(b));
    return out;
  }

  // Normal form of a target-ring polynomial against the elimination basis;
  // when the result uses only source variables, it is a canonical preimage.
  std::optional<Polynomial> preimage(const Polynomial& p) const {
    if (!same_ring(p.ring(), target_)) throw std::invalid_argument("preimage: ring mismatch");
    Polynomial nf = gb_->normal_form(lift_target(p)).remainder;
    if (!free_of_target(nf)) return std::nullopt;
    return project_to_source(nf);
  }

  const RingPtr& combined_ring() const { return combined_; }

 private:
  Polynomial lift_target(const Polynomial& p) const {
    Polynomial acc = Polynomial::zero(combined_);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm(combined_->nvars());
      for (std::size_t i = 0; i < m.e.size(); ++i) mm.e[i] = m.e[i];
      acc = acc + Polynomial::monomial(combined_, std::move(mm), c);
    }
    return acc;
  }
  bool free_of_target(const Polynomial& p) const {
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i < ntarget_; ++i)
        if (m.e[i] > 0) return false;
    return true;
  }
  Polynomial project_to_source(const Polynomial& p) const {
    Polynomial acc = Polynomial::zero(source_);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm(source_->nvars());
      for (std::size_t i = 0; i < source_->nvars(); ++i) mm.e[i] = m.e[ntarget_ + i];
      acc = acc + Polynomial::monomial(source_, std::move(mm), c);
    }
    return acc;
  }

  RingMap map_;
  RingPtr source_;
  RingPtr target_;
  RingPtr combined_;
  std::size_t ntarget_ = 0;
  std::optional<GroebnerBasis> gb_;
};

// Kernel of R -> S/J. J may be the zero ideal (map into a free ring).
inline Ideal kernel_of_map(const RingMap& f, const Ideal& J, long cap = -1) {
  MapElimination elim(f, J, cap);
  std::vector<Polynomial> gens = elim.kernel_generators();
  // soundness check: every generator maps into J
  for (const auto& g : gens) {
    Polynomial img = f.apply(g);
    if (img.is_zero()) continue;
    if (!is_member(img, J).member_over_Q)
      throw std::logic_error("kernel_of_map: internal soundness check failed");
  }
  return Ideal(f.source(), std::move(gens));
}

inline Ideal kernel_of_map(const RingMap& f, long cap = -1) {
  return kernel_of_map(f, Ideal(f.target(), {}), cap);
}

// ---------------------------------------------------------------------------
// Nonzerodivisor test via ideal quotient: (I : f) == I.
// ---------------------------------------------------------------------------

inline bool is_nonzerodivisor(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return false;
  if (!f.is_homogeneous()) throw std::invalid_argument("is_nonzerodivisor: f not homogeneous");
  if (I.is_zero_ideal()) return true;  // polynomial ring over a field is a domain

  // Intersection I cap (f) by the auxiliary-variable trick: eliminate T from
  // T*I + (1-T)*(f) in R[T]. The internal computation is intentionally
  // non-homogeneous; the elimination ideal itself is homogeneous.
  const RingPtr& R = I.ring();
  std::vector<std::pair<std::string, int>> vars;
  vars.emplace_back("T__aux", 1);
  for (std::size_t i = 0; i < R->nvars(); ++i) vars.emplace_back(R->name(i), R->degree(i));
  RingPtr ext = GradedRing::make(std::move(vars));

  auto lift = [&](const Polynomial& p) {
    Polynomial acc = Polynomial::zero(ext);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm(ext->nvars());
      for (std::size_t i = 0; i < m.e.size(); ++i) mm.e[i + 1] = m.e[i];
      acc = acc + Polynomial::monomial(ext, std::move(mm), c);
    }
    return acc;
  };
  Polynomial T = Polynomial::variable(ext, 0);
  Polynomial one = Polynomial::constant(ext, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(T * lift(g));
  gens.push_back((one - T) * lift(f));

  Ideal K(ext, std::move(gens), /*require_homogeneous=*/false);
  GroebnerBasis gb(K, MonomialOrder::elimination(ext, {0}), -1, /*allow_inhomogeneous=*/true,
                   /*track_cofactors=*/false);

  auto drop_T = [&](const Polynomial& p) {
    Polynomial acc = Polynomial::zero(R);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm(R->nvars());
      for (std::size_t i = 0; i < R->nvars(); ++i) mm.e[i] = m.e[i + 1];
      acc = acc + Polynomial::monomial(R, std::move(mm), c);
    }
    return acc;
  };

  // Single-generator basis for exact division by f.
  Ideal principal(R, {f});
  GroebnerBasis fgb(principal, MonomialOrder::grevlex(R), -1, false, true);

  for (const auto& b : gb.basis()) {
    bool t_free = true;
    for (const auto& [m, c] : b.terms())
      if (m.e[0] > 0) { t_free = false; break; }
    if (!t_free) continue;
    Polynomial h = drop_T(b);
    // h in I cap (f); homogeneous components individually belong there
    for (const auto& [d, comp] : h.homogeneous_components()) {
      if (comp.is_zero()) continue;
      Certificate c = fgb.normal_form(comp);
      if (!c.remainder.is_zero())
        throw std::logic_error("is_nonzerodivisor: intersection element not divisible by f");
      const Polynomial& w = c.cofactors.at(0);  // comp = w * f
      if (w.is_zero()) continue;
      if (!is_member(w, I).member_over_Q) return false;  // w in (I:f) \ I
    }
  }
  return true;
}

// Exact division in the quotient ring: find w with u = f*w (mod I).
// Computed from a membership certificate of u against <gens(I), f> with f
// appended last; w is the f-cofactor.
inline std::optional<Polynomial> divide_in_quotient(const Polynomial& u, const Polynomial& f,
                                                    const Ideal& I, long cap = -1) {
  if (u.is_zero()) return Polynomial::zero(u.ring());
  std::vector<Polynomial> gens = I.generators();
  gens.push_back(f);
  Ideal extended(I.ring(), std::move(gens));
  long use_cap = cap >= 0 ? cap : u.degree();
  GroebnerBasis gb(extended, MonomialOrder::grevlex(I.ring()), use_cap);
  Certificate cert = gb.normal_form(u);
  if (!cert.remainder.is_zero()) return std::nullopt;
  return cert.cofactors.back();
}

}  // namespace stratachow
