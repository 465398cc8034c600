// Acceptance gate: runs the eleven verification criteria and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails; a
// failing criterion's report (including nonzero witness polynomials) is
// printed in full.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stratachow/catalog.hpp"
#include "stratachow/linear_oracle.hpp"
#include "stratachow/report.hpp"
#include "stratachow/verify.hpp"

namespace {

using namespace stratachow;

struct Gate {
  int failures = 0;

  void line(int n, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << n << " (" << what << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
  }

  // run one or more scenarios; the criterion passes iff all of them pass
  void scenario(int n, const std::string& what, const std::vector<std::string>& names,
                const VerifyOptions& opt = {}) {
    bool pass = true;
    std::ostringstream failed;
    for (const auto& name : names) {
      ScenarioReport rep = run_scenario(name, opt);
      pass = pass && rep.pass;
      if (!rep.pass) failed << render_text(rep);
    }
    line(n, what, pass);
    if (!pass) std::cout << failed.str();
  }
};

// a random homogeneous polynomial of the given degree over small coefficients
Polynomial random_homogeneous(const RingPtr& ring, long degree, std::mt19937& rng) {
  auto monos = oracle_detail::monomials_of_degree(ring, degree);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial out = Polynomial::zero(ring);
  for (const auto& m : monos) {
    int c = coeff(rng);
    if (c != 0) out = out + Polynomial::monomial(ring, m, Rational(c));
  }
  return out;
}

// Criterion 10, part 1: randomized cross-validation of the basis-driven
// membership test against the independent dense linear-algebra oracle.
bool randomized_oracle_equivalence(int instances, std::string& detail) {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> nvars_d(1, 4), ngens_d(1, 3), gdeg_d(1, 4), pdeg_d(1, 6),
      mode_d(0, 1);
  const std::vector<std::string> pool = {"x", "y", "z", "w"};
  int mismatches = 0, members = 0;
  for (int i = 0; i < instances; ++i) {
    int nv = nvars_d(rng);
    std::vector<std::pair<std::string, int>> vars;
    for (int v = 0; v < nv; ++v) vars.emplace_back(pool[v], 1);
    RingPtr ring = GradedRing::make(vars);
    std::vector<Polynomial> gens;
    int ng = ngens_d(rng);
    for (int g = 0; g < ng; ++g) {
      Polynomial p = random_homogeneous(ring, gdeg_d(rng), rng);
      if (!p.is_zero()) gens.push_back(p);
    }
    long pdeg = pdeg_d(rng);
    Polynomial target = Polynomial::zero(ring);
    if (mode_d(rng) == 0 && !gens.empty()) {
      // a guaranteed member: random combination of the generators
      for (const auto& g : gens) {
        long mult = pdeg - *g.homogeneous_degree();
        if (mult >= 0) target = target + random_homogeneous(ring, mult, rng) * g;
      }
    } else {
      target = random_homogeneous(ring, pdeg, rng);
    }
    bool via_basis = is_member(target, Ideal(ring, gens)).member_over_Q;
    bool via_oracle = member_linear_oracle(target, ring, gens);
    if (via_basis != via_oracle) ++mismatches;
    if (via_basis) ++members;
  }
  std::ostringstream d;
  d << instances << " randomized instances (" << members << " members), " << mismatches
    << " mismatches";
  detail = d.str();
  return mismatches == 0;
}

// Criterion 10, part 2: replay every membership the pipeline, vanishing,
// independence, containment, and elimination runs invoked, against the oracle.
bool replay_oracle_equivalence(const MembershipLog& log, std::string& detail) {
  int mismatches = 0;
  for (const auto& [p, I] : log.entries) {
    bool via_basis = is_member(p, I).member_over_Q;
    bool via_oracle = member_linear_oracle(p, I.ring(), I.generators());
    if (via_basis != via_oracle) ++mismatches;
  }
  std::ostringstream d;
  d << log.entries.size() << " replayed memberships, " << mismatches << " mismatches";
  detail = d.str();
  return mismatches == 0;
}

}  // namespace

int main() {
  Gate gate;

  gate.scenario(1, "degree-9 hyperelliptic relation derivation", {"c9-derivation"});

  // criteria 2-5 run with a membership log so criterion 10 can replay them
  MembershipLog log;
  VerifyOptions logged;
  logged.log = &log;
  gate.scenario(2, "four-stage gluing pipeline", {"pipeline-glue"}, logged);
  gate.scenario(3, "stratum vanishing of the displayed relations", {"stratum-vanishing"}, logged);
  gate.scenario(4, "independence of the degree-9 open relation", {"z2-independence"}, logged);
  gate.scenario(5, "compactified consistency and generator elimination",
                {"m3bar-contains-m3tilde", "generator-elimination"}, logged);

  gate.scenario(6, "relation count audit", {"relation-audit"});
  gate.scenario(7, "equivariant pushforward identity suite", {"appendix-c-suite"});
  gate.scenario(8, "multiple-root class targets", {"an-class-restrictions"});
  gate.scenario(9, "class reconstruction from stratum restrictions", {"reconstruct-classes"});

  {
    std::string d1, d2;
    bool p1 = randomized_oracle_equivalence(500, d1);
    bool p2 = replay_oracle_equivalence(log, d2);
    gate.line(10, "basis membership vs linear-algebra oracle", p1 && p2, d1 + "; " + d2);
  }

  gate.scenario(11, "change-of-variables round trip", {"faber-roundtrip"});

  if (gate.failures == 0) {
    std::cout << "acceptance: all 11 criteria pass\n";
    return 0;
  }
  std::cout << "acceptance: " << gate.failures << " criteria FAILED\n";
  return 1;
}
