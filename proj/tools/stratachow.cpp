// Command-line front end: loads the embedded catalog (or a user document),
// dispatches algebra commands, and runs the verification scenarios.
//
// Exit codes: 0 success (including query results that are false),
//             1 semantic failure (a failed verification or assertion),
//             2 input error (bad arguments, unreadable or malformed files).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stratachow/catalog.hpp"
#include "stratachow/chow_format.hpp"
#include "stratachow/glue.hpp"
#include "stratachow/groebner.hpp"
#include "stratachow/parse.hpp"
#include "stratachow/report.hpp"
#include "stratachow/verify.hpp"

namespace {

using namespace stratachow;

constexpr const char* kUsage = R"(usage: stratachow COMMAND [options]

commands:
  gb          --ideal NAME [--in FILE] [--cap N]        print a Groebner basis
  reduce      --ideal NAME --class NAME [...]           normal form of a class
  member      --ideal NAME --class NAME [--assert]      ideal membership query
  ideal-eq    --left NAME --right NAME [--assert]       ideal equality query
  nzd         --ideal NAME --class NAME [--assert]      nonzerodivisor query
  kernel      --map NAME [--mod IDEAL] [--cap N]        kernel of a ring map
  glue        --name NAME [--in FILE] [--cap N]         run a gluing stage
  reconstruct --stratification NAME --prefix P [...]    glue a class from restrictions
  verify      --suite NAME|all [--json]                 run verification scenarios
  catalog     list                                      list embedded entries

common options:
  --in FILE   read declarations from FILE instead of the embedded catalog
  --cap N     degree cap for basis computations (default: STRATACHOW_GB_MAXDEG
              if set, otherwise uncapped)
  --json      machine-readable scenario reports (verify only)
)";

struct Args {
  std::map<std::string, std::string> opts;
  std::vector<std::string> positional;
  bool flag(const std::string& name) const { return opts.count(name) != 0; }
  std::optional<std::string> get(const std::string& name) const {
    auto it = opts.find(name);
    if (it == opts.end()) return std::nullopt;
    return it->second;
  }
  std::string require(const std::string& name) const {
    auto v = get(name);
    if (!v) throw std::invalid_argument("missing required option --" + name);
    return *v;
  }
};

Args parse_args(int argc, char** argv, int start,
                const std::vector<std::string>& value_opts,
                const std::vector<std::string>& flag_opts) {
  Args a;
  for (int i = start; i < argc; ++i) {
    std::string w = argv[i];
    if (w.rfind("--", 0) == 0) {
      std::string name = w.substr(2);
      bool is_value = false, is_flag = false;
      for (const auto& v : value_opts) is_value = is_value || v == name;
      for (const auto& f : flag_opts) is_flag = is_flag || f == name;
      if (is_flag) {
        a.opts[name] = "";
      } else if (is_value) {
        if (i + 1 >= argc) throw std::invalid_argument("option --" + name + " needs a value");
        a.opts[name] = argv[++i];
      } else {
        throw std::invalid_argument("unknown option --" + name);
      }
    } else {
      a.positional.push_back(w);
    }
  }
  return a;
}

// Resolve the document: a user file when --in is given, otherwise the catalog.
struct Source {
  std::optional<ChowDocument> owned;
  const ChowDocument* doc = nullptr;

  explicit Source(const Args& a) {
    if (auto file = a.get("in")) {
      std::ifstream in(*file);
      if (!in) throw std::invalid_argument("cannot read file: " + *file);
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        owned = parse_chow_text(buf.str());
      } catch (const ChowParseError& e) {
        throw std::invalid_argument(*file + ":" + std::to_string(e.line) + ": " + e.what());
      }
      doc = &*owned;
    } else {
      doc = &Catalog::instance().doc();
    }
  }
};

long resolve_cap(const Args& a) {
  if (auto c = a.get("cap")) return std::stol(*c);
  if (const char* env = std::getenv("STRATACHOW_GB_MAXDEG")) return std::stol(env);
  return -1;
}

int cmd_gb(const Args& a) {
  Source src(a);
  const Ideal& I = src.doc->ideal(a.require("ideal"));
  GroebnerBasis gb(I, MonomialOrder::grevlex(I.ring()), resolve_cap(a), false, false);
  std::cout << "basis_size: " << gb.basis().size() << "\n";
  for (const auto& g : gb.basis()) std::cout << print_canonical(g) << "\n";
  return 0;
}

int cmd_reduce(const Args& a) {
  Source src(a);
  const Ideal& I = src.doc->ideal(a.require("ideal"));
  const Polynomial& p = src.doc->poly(a.require("class"));
  GroebnerBasis gb(I, MonomialOrder::grevlex(I.ring()), resolve_cap(a));
  Certificate cert = gb.normal_form(p);
  std::cout << "normal_form: " << print_canonical(cert.remainder) << "\n";
  return 0;
}

int cmd_member(const Args& a) {
  Source src(a);
  const Ideal& I = src.doc->ideal(a.require("ideal"));
  const Polynomial& p = src.doc->poly(a.require("class"));
  MembershipReport rep = is_member(p, I, resolve_cap(a));
  std::cout << "member_over_Q: " << (rep.member_over_Q ? "true" : "false") << "\n";
  if (rep.member_over_Q) {
    std::cout << "certificate_smooth_over_Z16: " << (rep.smooth_over_Z16 ? "true" : "false")
              << "\n";
  } else {
    std::cout << "witness: " << print_canonical(rep.certificate.remainder) << "\n";
  }
  return (a.flag("assert") && !rep.member_over_Q) ? 1 : 0;
}

int cmd_ideal_eq(const Args& a) {
  Source src(a);
  const Ideal& L = src.doc->ideal(a.require("left"));
  const Ideal& R = src.doc->ideal(a.require("right"));
  bool eq = ideal_equal(L, R);
  std::cout << "ideal_equal: " << (eq ? "true" : "false") << "\n";
  return (a.flag("assert") && !eq) ? 1 : 0;
}

int cmd_nzd(const Args& a) {
  Source src(a);
  const Ideal& I = src.doc->ideal(a.require("ideal"));
  const Polynomial& f = src.doc->poly(a.require("class"));
  bool nzd = is_nonzerodivisor(f, I);
  std::cout << "nonzerodivisor: " << (nzd ? "true" : "false") << "\n";
  return (a.flag("assert") && !nzd) ? 1 : 0;
}

int cmd_kernel(const Args& a) {
  Source src(a);
  const RingMap& f = src.doc->map(a.require("map"));
  long cap = resolve_cap(a);
  auto mod = a.get("mod");
  Ideal ker = mod ? kernel_of_map(f, src.doc->ideal(*mod), cap) : kernel_of_map(f, cap);
  std::cout << "kernel_generators: " << ker.generators().size() << "\n";
  for (const auto& g : ker.generators()) std::cout << print_canonical(g) << "\n";
  return 0;
}

int cmd_glue(const Args& a) {
  Source src(a);
  const std::string target = a.require("name");
  long cap = resolve_cap(a);
  // run the document's gluing stages in declaration order so a stage whose
  // open side names an earlier stage's result resolves naturally
  std::map<std::string, StratumPresentation> prior;
  for (const auto& decl : src.doc->glues) {
    const std::string& name = decl.name;
    GluingDatum d = src.doc->make_glue(name, prior);
    bool ok = check_gluing_condition(d, cap);
    if (name == target) {
      std::cout << "gluing_condition: " << (ok ? "pass" : "fail") << "\n";
      if (!ok) return 1;
      StratumPresentation glued = glue(d, cap, name + ".result");
      std::cout << "relations: " << glued.relations.generators().size() << "\n";
      for (const auto& g : glued.relations.generators())
        std::cout << print_canonical(g) << "\n";
      return 0;
    }
    if (!ok) {
      std::cerr << "error: prerequisite stage " << name << " fails its gluing condition\n";
      return 1;
    }
    prior.emplace(name, glue(d, cap, name + ".result"));
  }
  throw UnknownEntry("glue " + target);
}

int cmd_reconstruct(const Args& a) {
  Source src(a);
  const std::string strat_name = a.require("stratification");
  const std::string prefix = a.require("prefix");
  Stratification strat = src.doc->make_stratification(strat_name);
  const auto& order = src.doc->stratification_decl(strat_name).strata;
  std::vector<Polynomial> restrictions;
  for (const auto& sname : order) restrictions.push_back(src.doc->poly(prefix + ".restr." + sname));
  try {
    Polynomial result = reconstruct_class(strat, restrictions, resolve_cap(a));
    std::cout << "reconstructed: " << print_canonical(result) << "\n";
    return 0;
  } catch (const NotDivisible& e) {
    std::cout << "reconstructed: none (" << e.what() << ")\n";
    return 1;
  } catch (const DegreeMismatch& e) {
    std::cout << "reconstructed: none (" << e.what() << ")\n";
    return 1;
  }
}

int cmd_verify(const Args& a) {
  const std::string suite = a.require("suite");
  const bool json = a.flag("json");
  VerifyOptions opt;
  opt.cap = resolve_cap(a);
  std::vector<std::string> names;
  if (suite == "all") {
    names = scenario_names();
  } else {
    bool known = false;
    for (const auto& n : scenario_names()) known = known || n == suite;
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    names = {suite};
  }
  bool all_pass = true;
  for (const auto& n : names) {
    ScenarioReport rep = run_scenario(n, opt);
    all_pass = all_pass && rep.pass;
    std::cout << (json ? render_json(rep) + "\n" : render_text(rep));
  }
  return all_pass ? 0 : 1;
}

int cmd_catalog(const Args& a) {
  if (a.positional.size() != 1 || a.positional[0] != "list")
    throw std::invalid_argument("usage: stratachow catalog list");
  for (const auto& line : Catalog::instance().list()) std::cout << line << "\n";
  return 0;
}

int dispatch(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  const std::string cmd = argv[1];
  const std::vector<std::string> vals = {"in",   "cap",  "ideal",          "class", "left",
                                         "right", "map",  "mod",            "name",  "prefix",
                                         "suite", "stratification"};
  const std::vector<std::string> flags = {"assert", "json"};
  Args a = parse_args(argc, argv, 2, vals, flags);

  if (cmd == "gb") return cmd_gb(a);
  if (cmd == "reduce") return cmd_reduce(a);
  if (cmd == "member") return cmd_member(a);
  if (cmd == "ideal-eq") return cmd_ideal_eq(a);
  if (cmd == "nzd") return cmd_nzd(a);
  if (cmd == "kernel") return cmd_kernel(a);
  if (cmd == "glue") return cmd_glue(a);
  if (cmd == "reconstruct") return cmd_reconstruct(a);
  if (cmd == "verify") return cmd_verify(a);
  if (cmd == "catalog") return cmd_catalog(a);
  if (cmd == "help" || cmd == "--help" || cmd == "-h") {
    std::cout << kUsage;
    return 0;
  }
  std::cerr << "error: unknown command '" << cmd << "'\n" << kUsage;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const stratachow::ChowParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const stratachow::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const stratachow::UnknownEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
