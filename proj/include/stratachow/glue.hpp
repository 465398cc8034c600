#pragma once
// Stratified gluing: given an open stratum presentation, a closed stratum
// presentation, and pullback data for the closed stratum's fundamental class,
// produce a presentation of the glued space. Also: class reconstruction from
// per-stratum restrictions, and per-stratum vanishing reports.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stratachow/groebner.hpp"
#include "stratachow/parse.hpp"
#include "stratachow/poly.hpp"

namespace stratachow {

struct GluingConditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LiftingFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StratumPresentation {
  std::string name;
  RingPtr ring;
  Ideal relations;

  StratumPresentation(std::string name_, RingPtr ring_, Ideal relations_)
      : name(std::move(name_)), ring(std::move(ring_)), relations(std::move(relations_)) {
    if (!same_ring(ring, relations.ring()))
      throw std::invalid_argument("StratumPresentation: relations not in presentation ring");
  }
};

// Append the fundamental-class variable to an open-side ring.
inline RingPtr extend_ring(const RingPtr& ring, const std::string& class_var, int degree) {
  std::vector<std::pair<std::string, int>> vars;
  vars.reserve(ring->nvars() + 1);
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.emplace_back(ring->name(i), ring->degree(i));
  vars.emplace_back(class_var, degree);
  return GradedRing::make(vars);
}

// Inclusion of the open ring into its extension by the class variable.
inline RingMap inclusion_map(const RingPtr& open_ring, const RingPtr& extended) {
  std::vector<Polynomial> images;
  images.reserve(open_ring->nvars());
  for (std::size_t i = 0; i < open_ring->nvars(); ++i) {
    auto idx = extended->index_of(open_ring->name(i));
    if (!idx) throw std::invalid_argument("inclusion_map: missing variable " + open_ring->name(i));
    images.push_back(Polynomial::variable(extended, *idx));
  }
  return RingMap(open_ring, extended, images);
}

struct GluingDatum {
  StratumPresentation open_side;
  StratumPresentation closed_side;
  std::string class_var;
  RingPtr extended_ring;  // open ring + class_var
  RingMap pullback;       // extended_ring -> closed ring
  Polynomial c_top;       // in closed ring, degree = deg(class_var)

  GluingDatum(StratumPresentation open_, StratumPresentation closed_, std::string class_var_,
              RingMap pullback_, Polynomial c_top_)
      : open_side(std::move(open_)),
        closed_side(std::move(closed_)),
        class_var(std::move(class_var_)),
        extended_ring(pullback_.source()),
        pullback(std::move(pullback_)),
        c_top(std::move(c_top_)) {
    if (!same_ring(pullback.target(), closed_side.ring))
      throw std::invalid_argument("GluingDatum: pullback target is not the closed-side ring");
    auto zi = extended_ring->index_of(class_var);
    if (!zi) throw std::invalid_argument("GluingDatum: class variable missing from pullback source");
    for (std::size_t i = 0; i < open_side.ring->nvars(); ++i)
      if (!extended_ring->index_of(open_side.ring->name(i)))
        throw std::invalid_argument("GluingDatum: open-side variable missing from pullback source");
    if (pullback.image(*zi) != c_top)
      throw std::invalid_argument("GluingDatum: pullback must send the class variable to c_top");
    if (!c_top.is_zero() && c_top.homogeneous_degree() != std::optional<long>(class_degree()))
      throw std::invalid_argument("GluingDatum: c_top degree mismatch");
  }

  long class_degree() const {
    return extended_ring->degree(static_cast<std::size_t>(*extended_ring->index_of(class_var)));
  }
};

namespace gluedetail {

// A polynomial section of the pullback: for every closed-side variable, the
// canonical (normal-form-minimal) preimage modulo the closed relations.
inline std::optional<RingMap> section_of_pullback(const GluingDatum& d, long cap) {
  MapElimination elim(d.pullback, d.closed_side.relations, cap);
  std::vector<Polynomial> images;
  images.reserve(d.closed_side.ring->nvars());
  for (std::size_t j = 0; j < d.closed_side.ring->nvars(); ++j) {
    auto pre = elim.preimage(Polynomial::variable(d.closed_side.ring, j));
    if (!pre) return std::nullopt;
    images.push_back(std::move(*pre));
  }
  return RingMap(d.closed_side.ring, d.extended_ring, std::move(images));
}

}  // namespace gluedetail

// The gluing condition: c_top is a non-zero divisor modulo the closed
// relations, and the pullback is surjective modulo the closed relations.
inline bool check_gluing_condition(const GluingDatum& d, long cap = -1) {
  if (!is_nonzerodivisor(d.c_top, d.closed_side.relations)) return false;
  return gluedetail::section_of_pullback(d, cap).has_value();
}

// Glued presentation on the extended ring, with relations generated by the
// three families:
//   (1) Z * q_h  with q_h a lift of each closed-side relation generator,
//   (2) Z * v_h  with v_h generating the kernel of the pullback into the
//       free closed-side ring,
//   (3) p_h - Z * g_h  for each open-side relation generator p_h, where w is
//       chosen with pullback(p_h) - w*c_top in the closed relations and g_h
//       lifts w through the section.
inline StratumPresentation glue(const GluingDatum& d, long cap = -1,
                                std::string glued_name = "") {
  if (!is_nonzerodivisor(d.c_top, d.closed_side.relations))
    throw GluingConditionFailed("glue: c_top is a zero divisor modulo the closed relations");
  auto section = gluedetail::section_of_pullback(d, cap);
  if (!section)
    throw GluingConditionFailed("glue: pullback is not surjective modulo the closed relations");

  const RingPtr& R = d.extended_ring;
  Polynomial Z = Polynomial::variable(R, static_cast<std::size_t>(*R->index_of(d.class_var)));
  RingMap inc = inclusion_map(d.open_side.ring, R);

  std::vector<Polynomial> rels;

  // (1) lifts of the closed-side relation generators via the section
  for (const auto& r : d.closed_side.relations.generators()) {
    if (r.is_zero()) continue;
    rels.push_back(Z * section->apply(r));
  }

  // (2) kernel of the pullback into the FREE closed-side ring
  long ker_cap = cap;
  Ideal ker = kernel_of_map(d.pullback, Ideal::zero(d.closed_side.ring), ker_cap);
  for (const auto& v : ker.generators()) {
    if (v.is_zero()) continue;
    rels.push_back(Z * v);
  }

  // (3) open-side relations corrected by a multiple of Z: for each open
  // relation p_h find w with pullback(p_h) = (closed relations) + w*c_top;
  // then p_h - Z*lift(w) restricts to the closed ideal on both sides.
  for (const auto& p : d.open_side.relations.generators()) {
    if (p.is_zero()) continue;
    Polynomial pulled = d.pullback.apply(inc.apply(p));
    auto w = divide_in_quotient(pulled, d.c_top, d.closed_side.relations);
    if (!w)
      throw LiftingFailed("glue: pullback of open relation '" + print_canonical(p) +
                          "' is not in <closed relations, c_top>");
    rels.push_back(inc.apply(p) - Z * section->apply(*w));
  }

  for (const auto& r : rels)
    if (!r.is_homogeneous())
      throw std::logic_error("glue: produced a non-homogeneous relation");

  if (glued_name.empty()) glued_name = d.open_side.name + "+" + d.closed_side.name;
  return StratumPresentation(std::move(glued_name), R, Ideal(R, std::move(rels)));
}

// -- Stratification -----------------------------------------------------------

// One stratum of an ambient stratification: its own presentation, the
// restriction map from the ambient ring, and (for closed strata) the ambient
// fundamental-class variable together with its self-intersection class.
struct Stratum {
  StratumPresentation presentation;
  RingMap restriction;  // ambient ring -> stratum ring
  std::optional<std::string> class_var;  // ambient variable (absent for the open stratum)
  std::optional<Polynomial> c_top;       // in the stratum ring

  Stratum(StratumPresentation pres, RingMap restr, std::optional<std::string> cv = std::nullopt,
          std::optional<Polynomial> ct = std::nullopt)
      : presentation(std::move(pres)),
        restriction(std::move(restr)),
        class_var(std::move(cv)),
        c_top(std::move(ct)) {
    if (!same_ring(restriction.target(), presentation.ring))
      throw std::invalid_argument("Stratum: restriction target mismatch");
    if (class_var.has_value() != c_top.has_value())
      throw std::invalid_argument("Stratum: class_var and c_top must come together");
  }
};

struct Stratification {
  RingPtr ambient;
  Ideal ambient_relations;
  std::vector<Stratum> strata;  // shallowest (open) first, deepest last

  Stratification(RingPtr ambient_, Ideal ambient_relations_, std::vector<Stratum> strata_)
      : ambient(std::move(ambient_)),
        ambient_relations(std::move(ambient_relations_)),
        strata(std::move(strata_)) {
    for (const auto& s : strata)
      if (!same_ring(s.restriction.source(), ambient))
        throw std::invalid_argument("Stratification: restriction source is not the ambient ring");
  }
};

struct StratumCheck {
  std::string stratum;
  bool pass;
  Polynomial obstruction;  // nonzero normal form on failure, zero on pass
};

struct VanishingReport {
  Polynomial relation;
  std::vector<StratumCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Restrict `relation` to every stratum and test membership in the stratum
// ideal; failures carry the obstructing normal form as a witness.
inline VanishingReport stratum_vanishing(const Polynomial& relation, const Stratification& strat,
                                         long cap = -1) {
  if (!same_ring(relation.ring(), strat.ambient))
    throw std::invalid_argument("stratum_vanishing: relation not in the ambient ring");
  if (!relation.is_homogeneous())
    throw std::invalid_argument("stratum_vanishing: relation not homogeneous");
  VanishingReport report{relation, {}};
  for (const auto& s : strat.strata) {
    Polynomial restricted = s.restriction.apply(relation);
    long use_cap = cap;
    if (use_cap < 0 && !restricted.is_zero()) use_cap = restricted.degree();
    if (restricted.is_zero()) {
      report.checks.push_back({s.presentation.name, true, restricted});
      continue;
    }
    Certificate cert =
        GroebnerBasis(s.presentation.relations, MonomialOrder::grevlex(s.presentation.ring),
                      use_cap, false, false)
            .normal_form(restricted);
    report.checks.push_back(
        {s.presentation.name, cert.remainder.is_zero(), cert.remainder});
  }
  return report;
}

// Build a global class from prescribed per-stratum restrictions, outside-in:
// lift the open-stratum value, then for every deeper stratum divide the
// restriction defect by that stratum's c_top and add the lifted correction
// times the stratum's fundamental class.
inline Polynomial reconstruct_class(const Stratification& strat,
                                    const std::vector<Polynomial>& restrictions, long cap = -1) {
  if (restrictions.size() != strat.strata.size())
    throw std::invalid_argument("reconstruct_class: need one restriction per stratum");

  std::optional<long> common_degree;
  for (std::size_t i = 0; i < restrictions.size(); ++i) {
    const auto& r = restrictions[i];
    if (!same_ring(r.ring(), strat.strata[i].presentation.ring))
      throw std::invalid_argument("reconstruct_class: restriction ring mismatch at stratum " +
                                  strat.strata[i].presentation.name);
    auto d = r.homogeneous_degree();
    if (!d) throw DegreeMismatch("reconstruct_class: non-homogeneous restriction");
    if (!r.is_zero()) {
      if (common_degree && *common_degree != *d)
        throw DegreeMismatch("reconstruct_class: restrictions of differing degrees");
      common_degree = *d;
    }
  }
  if (!common_degree) return Polynomial::zero(strat.ambient);

  Polynomial X = Polynomial::zero(strat.ambient);
  for (std::size_t i = 0; i < strat.strata.size(); ++i) {
    const Stratum& s = strat.strata[i];
    Polynomial defect = restrictions[i] - s.restriction.apply(X);
    if (defect.is_zero()) continue;
    long local_cap = cap >= 0 ? cap : defect.degree();
    if (!s.class_var) {
      // open stratum: lift the value directly through the restriction map
      MapElimination lift(s.restriction, s.presentation.relations, local_cap);
      auto pre = lift.preimage(defect);
      if (!pre)
        throw NotDivisible("reconstruct_class: open-stratum value is not in the image at stratum " +
                           s.presentation.name);
      X = X + *pre;
      continue;
    }
    auto w = divide_in_quotient(defect, *s.c_top, s.presentation.relations, local_cap);
    if (!w)
      throw NotDivisible("reconstruct_class: restriction defect not divisible by c_top at stratum " +
                         s.presentation.name);
    MapElimination lift(s.restriction, s.presentation.relations, local_cap);
    auto g = lift.preimage(*w);
    if (!g)
      throw NotDivisible("reconstruct_class: correction is not in the image at stratum " +
                         s.presentation.name);
    Polynomial Z = Polynomial::variable(
        strat.ambient, static_cast<std::size_t>(*strat.ambient->index_of(*s.class_var)));
    X = X + Z * *g;
  }
  return X;
}

}  // namespace stratachow
