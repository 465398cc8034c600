#pragma once
// The named verification scenarios over the embedded dataset. Each scenario is
// deterministic and re-runnable; failing steps always carry a nonzero witness
// polynomial.

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stratachow/catalog.hpp"
#include "stratachow/chern.hpp"
#include "stratachow/equivariant.hpp"
#include "stratachow/glue.hpp"
#include "stratachow/report.hpp"

namespace stratachow {

struct UnknownScenario : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Record of every ideal membership a scenario decides, for replay against the
// independent linear-algebra oracle.
struct MembershipLog {
  std::vector<std::pair<Polynomial, Ideal>> entries;
  void note(const Polynomial& p, const Ideal& I) { entries.emplace_back(p, I); }
};

struct VerifyOptions {
  long cap = -1;              // global degree cap override (unset: per-target)
  MembershipLog* log = nullptr;
};

namespace verifydetail {

inline long cap_for(const VerifyOptions& opt, long natural) {
  return opt.cap >= 0 ? opt.cap : natural;
}

inline MembershipReport logged_member(const Polynomial& p, const Ideal& I, long cap,
                                      const VerifyOptions& opt) {
  if (opt.log) opt.log->note(p, I);
  return is_member(p, I, cap);
}

inline Step membership_step(const std::string& name, const Polynomial& p, const Ideal& I,
                            long cap, const VerifyOptions& opt) {
  MembershipReport rep = logged_member(p, I, cap, opt);
  Step s{name, rep.member_over_Q, rep.member_over_Q ? "member" : "not a member",
         rep.certificate.remainder, std::nullopt};
  if (rep.member_over_Q) s.smooth = rep.smooth_over_Z16;
  return s;
}

// ---------------------------------------------------------------- scenarios

inline void scenario_c9(ScenarioReport& r, const VerifyOptions&) {
  Polynomial derived = compute_c9();
  const Polynomial& housed = Catalog::instance().poly("hyperelliptic.c9");
  Polynomial diff = derived - housed;
  r.add({"derived degree-9 class matches the housed polynomial", diff.is_zero(),
         std::to_string(derived.term_count()) + " terms", diff, std::nullopt});
  Polynomial c3 = derive_c3_vanishing();
  r.add({"third chern class of the pushforward bundle vanishes", c3.is_zero(), "", c3,
         std::nullopt});
}

inline void scenario_relation_audit(ScenarioReport& r, const VerifyOptions&) {
  const Ideal& bar = Catalog::instance().ideal("m3bar.relations");
  std::map<long, int> multiset;
  for (const auto& g : bar.generators()) ++multiset[*g.homogeneous_degree()];
  std::map<long, int> expected{{2, 1}, {3, 5}, {4, 8}, {5, 1}};
  std::ostringstream d;
  d << "codimension multiset";
  for (auto [deg, cnt] : multiset) d << " " << cnt << "@" << deg;
  r.add({"15 homogeneous relations with multiset (1,5,8,1)",
         bar.generators().size() == 15 && multiset == expected, d.str(), std::nullopt,
         std::nullopt});
}

inline void scenario_z2(ScenarioReport& r, const VerifyOptions& opt) {
  const Catalog& cat = Catalog::instance();
  const Polynomial& z2 = cat.poly("open.z2");
  const Ideal& p012 = cat.ideal("open.p012");
  MembershipReport rep = logged_member(z2, p012, cap_for(opt, z2.degree()), opt);
  r.add({"z2 is not in the ideal of the other three relations", !rep.member_over_Q,
         "independence holds over Q, hence over Z[1/6]", rep.certificate.remainder,
         std::nullopt});
}

inline void scenario_faber(ScenarioReport& r, const VerifyOptions&) {
  auto [fwd, bwd] = Catalog::instance().faber_maps();
  for (std::size_t i = 0; i < fwd.source()->nvars(); ++i) {
    Polynomial v = Polynomial::variable(fwd.source(), i);
    Polynomial diff = bwd.apply(fwd.apply(v)) - v;
    r.add({"backward(forward(" + fwd.source()->name(i) + "))", diff.is_zero(), "", diff,
           std::nullopt});
  }
  for (std::size_t i = 0; i < bwd.source()->nvars(); ++i) {
    Polynomial v = Polynomial::variable(bwd.source(), i);
    Polynomial diff = fwd.apply(bwd.apply(v)) - v;
    r.add({"forward(backward(" + bwd.source()->name(i) + "))", diff.is_zero(), "", diff,
           std::nullopt});
  }
}

inline void scenario_generator_elimination(ScenarioReport& r, const VerifyOptions&) {
  const Catalog& cat = Catalog::instance();
  auto unit_16 = [](const Rational& c) {
    // invertible in Z[1/6]: +-2^a 3^b, i.e. both c and 1/c have 2,3-smooth denominators
    if (c.is_zero()) return false;
    return c.denominator_smooth23() && c.inverse().denominator_smooth23();
  };

  const RingPtr& R = cat.ring("m3tilde.ring");
  Monomial l2m(R->nvars());
  l2m.e[static_cast<std::size_t>(*R->index_of("lambda2"))] = 1;
  Rational c_l2 = cat.poly("m3bar.A2").coefficient_of(l2m);
  r.add({"lambda2 occurs with a Z[1/6]-invertible coefficient in [A2]", unit_16(c_l2),
         "coefficient " + c_l2.str() + " (the documented value 24 is the overall scale; "
         "the solvable occurrence is -48)", std::nullopt, std::nullopt});

  Monomial d111m(R->nvars());
  d111m.e[static_cast<std::size_t>(*R->index_of("delta111"))] = 1;
  Rational c_d = cat.poly("m3bar.d1c").coefficient_of(d111m);
  r.add({"delta111 occurs with a Z[1/6]-invertible coefficient in d1c",
         unit_16(c_d) && c_d == Rational(72), "coefficient " + c_d.str(), std::nullopt,
         std::nullopt});
}

inline void scenario_stratum_vanishing(ScenarioReport& r, const VerifyOptions& opt) {
  const Catalog& cat = Catalog::instance();
  Stratification strat = cat.doc().make_stratification("m3tilde.stratification");
  const auto& names = Catalog::m3tilde_relation_names();
  const auto& gens = cat.ideal("m3tilde.relations").generators();
  auto run_one = [&](const std::string& name, const Polynomial& rel) {
    VanishingReport v = stratum_vanishing(rel, strat, opt.cap);
    if (opt.log)
      for (std::size_t i = 0; i < strat.strata.size(); ++i) {
        Polynomial restricted = strat.strata[i].restriction.apply(rel);
        if (!restricted.is_zero())
          opt.log->note(restricted, strat.strata[i].presentation.relations);
      }
    for (const auto& c : v.checks)
      r.add({name + " vanishes on " + c.stratum, c.pass, "", c.obstruction, std::nullopt});
  };
  for (std::size_t i = 0; i < gens.size(); ++i) run_one(names[i], gens[i]);
  run_one("r", cat.poly("m3tilde.r"));
}

inline void scenario_m3bar_contains(ScenarioReport& r, const VerifyOptions& opt) {
  const Catalog& cat = Catalog::instance();
  const Ideal& bar = cat.ideal("m3bar.relations");
  const auto& names = Catalog::m3tilde_relation_names();
  const auto& gens = cat.ideal("m3tilde.relations").generators();
  std::vector<std::pair<std::string, Polynomial>> targets;
  for (std::size_t i = 0; i < gens.size(); ++i) targets.emplace_back(names[i], gens[i]);
  targets.emplace_back("r", cat.poly("m3tilde.r"));
  long maxdeg = 0;
  for (const auto& [n, p] : targets) maxdeg = std::max(maxdeg, p.degree());
  GroebnerBasis gb(bar, MonomialOrder::grevlex(bar.ring()), cap_for(opt, maxdeg));
  bool all_smooth = true;
  for (const auto& [n, p] : targets) {
    if (opt.log) opt.log->note(p, bar);
    MembershipReport rep = is_member(p, gb);
    Step s{n + " lies in the compactified relation ideal", rep.member_over_Q, "",
           rep.certificate.remainder, std::nullopt};
    if (rep.member_over_Q) s.smooth = rep.smooth_over_Z16;
    all_smooth = all_smooth && rep.member_over_Q && rep.smooth_over_Z16;
    r.add(std::move(s));
  }
  r.smoothness = all_smooth ? "all membership certificates have 2,3-smooth denominators"
                            : "some certificates leave Z[1/6]";
}

inline void scenario_pipeline(ScenarioReport& r, const VerifyOptions& opt) {
  const Catalog& cat = Catalog::instance();
  // the displayed relation list: the fourteen short relations together with
  // the degree-9 relation r lifted from the open stratum
  std::vector<Polynomial> displayed_gens = cat.ideal("m3tilde.relations").generators();
  displayed_gens.push_back(cat.poly("m3tilde.r"));
  std::vector<std::string> displayed_names = Catalog::m3tilde_relation_names();
  displayed_names.push_back("r");
  Ideal displayed(cat.ring("m3tilde.ring"), displayed_gens);
  std::map<std::string, StratumPresentation> prior;
  std::string last;
  for (const std::string stage : {"stage1", "stage2", "stage3", "stage4"}) {
    GluingDatum d = cat.doc().make_glue(stage, prior);
    bool ok = check_gluing_condition(d, cap_for(opt, 9));
    r.add({stage + ": gluing condition (ctop nonzerodivisor, pullback admits a section)", ok,
           "closed side " + d.closed_side.name, std::nullopt, std::nullopt});
    if (!ok) return;
    StratumPresentation glued = glue(d, cap_for(opt, 9), stage + ".result");
    std::size_t nonzero = 0;
    for (const auto& g : glued.relations.generators())
      if (!g.is_zero()) ++nonzero;
    r.add({stage + ": glued presentation computed", true,
           std::to_string(nonzero) + " relations in " +
               std::to_string(glued.ring->nvars()) + " variables",
           std::nullopt, std::nullopt});
    prior.emplace(stage, glued);
    last = stage;
  }

  const StratumPresentation& final_pres = prior.at(last);
  // the glue output ring is structurally the ambient ring; displayed relations
  // transfer term-by-term
  bool all_smooth = true;

  // every pipeline generator lies in the displayed ideal (this also covers the
  // redundancy of the undisplayed generators)
  long cap_fwd = 0;
  for (const auto& g : final_pres.relations.generators())
    if (!g.is_zero()) cap_fwd = std::max(cap_fwd, g.degree());
  GroebnerBasis gb_displayed(displayed, MonomialOrder::grevlex(displayed.ring()),
                             cap_for(opt, cap_fwd));
  for (std::size_t i = 0; i < final_pres.relations.generators().size(); ++i) {
    const Polynomial& g = final_pres.relations.generators()[i];
    if (g.is_zero()) continue;
    if (opt.log) opt.log->note(g, displayed);
    MembershipReport rep = is_member(g, gb_displayed);
    Step s{"pipeline relation " + std::to_string(i) + " lies in the displayed ideal",
           rep.member_over_Q, "degree " + std::to_string(g.degree()),
           rep.certificate.remainder, std::nullopt};
    if (rep.member_over_Q) s.smooth = rep.smooth_over_Z16;
    all_smooth = all_smooth && rep.member_over_Q && rep.smooth_over_Z16;
    r.add(std::move(s));
  }

  // every displayed relation lies in the pipeline ideal
  long cap_bwd = 0;
  for (const auto& g : displayed.generators()) cap_bwd = std::max(cap_bwd, g.degree());
  GroebnerBasis gb_pipeline(final_pres.relations,
                            MonomialOrder::grevlex(final_pres.relations.ring()),
                            cap_for(opt, cap_bwd));
  for (std::size_t i = 0; i < displayed.generators().size(); ++i) {
    const Polynomial& g = displayed.generators()[i];
    if (opt.log) opt.log->note(g, final_pres.relations);
    MembershipReport rep = is_member(g, gb_pipeline);
    Step s{"displayed relation " + displayed_names[i] + " lies in the pipeline ideal",
           rep.member_over_Q,
           "", rep.certificate.remainder, std::nullopt};
    if (rep.member_over_Q) s.smooth = rep.smooth_over_Z16;
    all_smooth = all_smooth && rep.member_over_Q && rep.smooth_over_Z16;
    r.add(std::move(s));
  }
  r.smoothness = all_smooth ? "all membership certificates have 2,3-smooth denominators"
                            : "some certificates leave Z[1/6]";
}

inline void scenario_appendix_c(ScenarioReport& r, const VerifyOptions&) {
  auto grid = [&](const std::string& label,
                  const std::vector<std::vector<long>>& cases,
                  const std::string& identity) {
    int count = 0;
    for (const auto& params : cases) {
      IdentityReport rep = verify_appendix_identity(identity, params);
      ++count;
      if (!rep.pass) {
        std::ostringstream d;
        d << "failed at (";
        for (std::size_t i = 0; i < params.size(); ++i) d << (i ? "," : "") << params[i];
        d << ")";
        r.add({label, false, d.str(), rep.witness, std::nullopt});
        return;
      }
    }
    r.add({label, true, std::to_string(count) + " instances", std::nullopt, std::nullopt});
  };

  std::vector<std::vector<long>> cases;
  for (long k = 2; k <= 8; ++k) cases.push_back({k});
  grid("diagonal class product form, k <= 8", cases, "C04");

  cases.clear();
  for (long n = 0; n <= 5; ++n)
    for (long m = n; m <= 5; ++m) cases.push_back({n, m});
  grid("squared-prefix expansion, 0 <= n <= m <= 5", cases, "C09");

  cases.clear();
  for (long k = 1; k <= 6; ++k)
    for (long m = 0; m <= 6; ++m)
      for (long N = m; N <= 12; ++N) cases.push_back({N, k, m});
  grid("alternating binomial sum, k <= 6, m <= 6, N <= 12", cases, "C10");

  cases.clear();
  for (long k = 1; k <= 5; ++k)
    for (long rr = 1; rr <= 4; ++rr)
      for (long l = 0; l <= k - 1; ++l) cases.push_back({k, rr, l});
  grid("composition counts below threshold, k <= 5, r <= 4", cases, "C14");

  std::vector<std::vector<long>> c08, c11, c12, c15;
  for (long N = 2; N <= 10; ++N)
    for (long k = 2; k <= 4 && k <= N; ++k) {
      for (long rr = 1; rr * k <= N; ++rr)
        for (long m = 0; m <= rr - 1; ++m) c08.push_back({N, k, rr, m});
      for (long rr = 2; rr * k <= N; ++rr) c15.push_back({N, k, rr});
      for (long tt = 0; tt <= k - 1 && N - k - tt >= 0; ++tt) {
        c11.push_back({N, k, tt});
        if (N - 2 * k + 1 >= 0) c12.push_back({N, k, tt});
      }
    }
  grid("pushforward membership, N <= 10, k <= 4, m >= 0", c08, "C08");
  grid("prefix-product membership identity", c11, "C11");
  grid("Gamma_t membership", c12, "C12");
  grid("higher pushforward membership, r >= 2", c15, "C15");

  int g0 = 0;
  bool g0_ok = true;
  for (long N = 2; N <= 10 && g0_ok; ++N)
    for (long k = 2; k <= 4 && g0_ok; ++k) {
      if (N - 2 * k + 1 < 0) continue;
      auto rep = gamma0_half_membership(N, k);
      ++g0;
      if (!rep.member_over_Q || !rep.smooth_over_Z16) {
        g0_ok = false;
        r.add({"factor-of-2 refinement for Gamma_0", false,
               "failed at N=" + std::to_string(N) + ", k=" + std::to_string(k),
               rep.certificate.remainder, rep.smooth_over_Z16});
      }
    }
  if (g0_ok)
    r.add({"factor-of-2 refinement for Gamma_0", true, std::to_string(g0) + " instances",
           std::nullopt, true});
}

inline void scenario_an_classes(ScenarioReport& r, const VerifyOptions&) {
  RingMap w = delta1_weight_convention();
  RingPtr T = t01_ring();
  auto pp = [&](const std::string& s) { return parse_polynomial(s, T); };
  struct Target {
    long k;
    const char* label;
    const char* expr;
  };
  for (const Target& tg : {Target{5, "quintuple-root class (tacnode target)",
                                  "40*(t0 + t1)^2*t0*t1"},
                           Target{4, "quadruple-root class",
                                  "-24*(t0 + t1)^3 + 48*(t0 + t1)*t0*t1"},
                           Target{6, "sextuple-root class",
                                  "72*(t0 + t1)^3*t0*t1 - 384*(t0 + t1)*(t0*t1)^2"}}) {
    Polynomial got = multiple_root_class(6, tg.k, w);
    Polynomial diff = got - pp(tg.expr);
    r.add({tg.label, diff.is_zero(), "k = " + std::to_string(tg.k), diff, std::nullopt});
  }
  // the singular-quartic ladder: each step multiplies by the documented linear factor
  RingPtr Q = quartic_ring();
  for (int n = 3; n <= 7; ++n) {
    Polynomial factor = Polynomial::variable(Q, 2) * Rational(-n) +
                        Polynomial::variable(Q, 0) * Rational(2 * n - 1, 2) +
                        Polynomial::variable(Q, 1) * Rational(4 - n);
    Polynomial expected = an_class_quartic(n - 1) * factor;
    Polynomial diff = an_class_quartic(n) - expected;
    r.add({"quartic singularity ladder step n = " + std::to_string(n), diff.is_zero(), "", diff,
           std::nullopt});
  }
}

inline void scenario_reconstruct(ScenarioReport& r, const VerifyOptions& opt) {
  const Catalog& cat = Catalog::instance();
  Stratification strat = cat.doc().make_stratification("m3tilde.stratification");
  const Ideal& displayed = cat.ideal("m3tilde.relations");
  const auto& order = cat.doc().stratification_decl("m3tilde.stratification").strata;

  auto run_one = [&](const std::string& label, const std::string& key) {
    std::vector<Polynomial> restrictions;
    for (const auto& s : order) restrictions.push_back(cat.poly(key + ".restr." + s));
    const Polynomial& global = cat.poly(key);
    try {
      Polynomial X = reconstruct_class(strat, restrictions, opt.cap);
      Polynomial diff = X - global;
      MembershipReport rep = diff.is_zero()
                                 ? is_member(Polynomial::zero(displayed.ring()), displayed, 0)
                                 : logged_member(diff, displayed, cap_for(opt, diff.degree()),
                                                 opt);
      r.add({label + ": reconstruction congruent to the displayed global formula",
             rep.member_over_Q, "", rep.certificate.remainder, std::nullopt});
    } catch (const NotDivisible& e) {
      r.add({label + ": reconstruction", false, e.what(),
             Polynomial::constant(strat.ambient, Rational(1)), std::nullopt});
    }
  };
  run_one("separating tacnode class", "m3bar.A31");
  run_one("pinched boundary class", "m3bar.d1c");

  // finding: two of the published restriction displays differ from the values
  // the displayed global formula (and the published derivation chain) force
  for (const auto& [stated, computed, where] :
       {std::tuple{"m3bar.d1c.stated.delta11", "m3bar.d1c.restr.delta11", "delta11"},
        std::tuple{"m3bar.d1c.stated.delta111", "m3bar.d1c.restr.delta111", "delta111"}}) {
    Polynomial diff = cat.poly(stated) - cat.poly(computed);
    r.add({std::string("finding: published restriction display on ") + where +
               " differs from the derived value",
           true,
           diff.is_zero() ? "displays agree"
                          : "reconstruction used the derived value; the published display is "
                            "inconsistent with the displayed global formula",
           diff, std::nullopt});
  }
}

}  // namespace verifydetail

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "pipeline-glue",         "stratum-vanishing", "z2-independence",
      "m3bar-contains-m3tilde", "generator-elimination", "relation-audit",
      "c9-derivation",         "faber-roundtrip",   "appendix-c-suite",
      "an-class-restrictions", "reconstruct-classes"};
  return names;
}

inline ScenarioReport run_scenario(const std::string& name, const VerifyOptions& opt = {}) {
  using Fn = std::function<void(ScenarioReport&, const VerifyOptions&)>;
  static const std::map<std::string, Fn> registry = {
      {"pipeline-glue", verifydetail::scenario_pipeline},
      {"stratum-vanishing", verifydetail::scenario_stratum_vanishing},
      {"z2-independence", verifydetail::scenario_z2},
      {"m3bar-contains-m3tilde", verifydetail::scenario_m3bar_contains},
      {"generator-elimination", verifydetail::scenario_generator_elimination},
      {"relation-audit", verifydetail::scenario_relation_audit},
      {"c9-derivation", verifydetail::scenario_c9},
      {"faber-roundtrip", verifydetail::scenario_faber},
      {"appendix-c-suite", verifydetail::scenario_appendix_c},
      {"an-class-restrictions", verifydetail::scenario_an_classes},
      {"reconstruct-classes", verifydetail::scenario_reconstruct},
  };
  auto it = registry.find(name);
  if (it == registry.end()) throw UnknownScenario("unknown scenario: " + name);
  ScenarioReport report;
  report.name = name;
  auto t0 = std::chrono::steady_clock::now();
  it->second(report, opt);
  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return report;
}

}  // namespace stratachow
