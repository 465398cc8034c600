#pragma once
// Parser for the line-oriented declarative text format: ring / ideal / map /
// poly / stratum / stratification / glue blocks, '#' comments. Every parsed
// object is degree-audited by construction (homogeneous relations, graded
// ring maps).

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stratachow/glue.hpp"
#include "stratachow/parse.hpp"
#include "stratachow/poly.hpp"

namespace stratachow {

struct ChowParseError : std::runtime_error {
  int line;
  ChowParseError(const std::string& msg, int line_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct UnknownEntry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GlueDecl {
  std::string name;
  std::string open;      // a stratum name or the name of an earlier glue block
  std::string closed;    // a stratum name
  std::string class_var;
  std::string pullback;  // a map name; source must be the extended open ring
  Polynomial ctop;       // in the closed stratum's ring
};

struct StratificationDecl {
  std::string name;
  std::string ambient_ring;
  std::string ambient_ideal;
  std::vector<std::string> strata;
};

class ChowDocument {
 public:
  std::vector<std::pair<std::string, RingPtr>> rings;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, RingMap>> maps;
  std::vector<std::pair<std::string, Polynomial>> polys;
  std::vector<std::pair<std::string, Stratum>> strata;
  std::vector<GlueDecl> glues;
  std::vector<StratificationDecl> stratifications;

  const RingPtr& ring(const std::string& name) const { return find(rings, name, "ring"); }
  const Ideal& ideal(const std::string& name) const { return find(ideals, name, "ideal"); }
  const RingMap& map(const std::string& name) const { return find(maps, name, "map"); }
  const Polynomial& poly(const std::string& name) const { return find(polys, name, "poly"); }
  const Stratum& stratum(const std::string& name) const { return find(strata, name, "stratum"); }

  bool has_ideal(const std::string& name) const { return has(ideals, name); }
  bool has_poly(const std::string& name) const { return has(polys, name); }

  const GlueDecl& glue_decl(const std::string& name) const {
    for (const auto& g : glues)
      if (g.name == name) return g;
    throw UnknownEntry("unknown glue block: " + name);
  }

  const StratificationDecl& stratification_decl(const std::string& name) const {
    for (const auto& s : stratifications)
      if (s.name == name) return s;
    throw UnknownEntry("unknown stratification: " + name);
  }

  // Build the gluing datum for a declared block. The open side is either a
  // declared stratum or the already-computed result of an earlier glue stage,
  // supplied through `prior`.
  GluingDatum make_glue(const std::string& name,
                        const std::map<std::string, StratumPresentation>& prior = {}) const {
    const GlueDecl& g = glue_decl(name);
    std::optional<StratumPresentation> open_side;
    if (auto it = prior.find(g.open); it != prior.end()) open_side = it->second;
    if (!open_side && has(strata, g.open)) open_side = stratum(g.open).presentation;
    if (!open_side) throw UnknownEntry("glue " + name + ": unresolved open side " + g.open);
    const Stratum& closed = stratum(g.closed);
    auto cdeg = g.ctop.homogeneous_degree();
    if (g.ctop.is_zero() || !cdeg)
      throw UnknownEntry("glue " + name + ": ctop must be nonzero and homogeneous");
    int deg = static_cast<int>(*cdeg);
    RingPtr ext = extend_ring(open_side->ring, g.class_var, deg);
    const RingMap& pb = map(g.pullback);
    if (!same_ring(pb.source(), ext) || !same_ring(pb.target(), closed.presentation.ring))
      throw UnknownEntry("glue " + name + ": pullback map " + g.pullback +
                         " does not match the extended open ring or the closed ring");
    return GluingDatum(*open_side, closed.presentation, g.class_var, pb, g.ctop);
  }

  Stratification make_stratification(const std::string& name) const {
    const StratificationDecl& d = stratification_decl(name);
    std::vector<Stratum> list;
    for (const auto& s : d.strata) list.push_back(stratum(s));
    return Stratification(ring(d.ambient_ring), ideal(d.ambient_ideal), std::move(list));
  }

 private:
  template <typename T>
  static const T& find(const std::vector<std::pair<std::string, T>>& v, const std::string& name,
                       const char* kind) {
    for (const auto& [k, val] : v)
      if (k == name) return val;
    throw UnknownEntry(std::string("unknown ") + kind + ": " + name);
  }
  template <typename T>
  static bool has(const std::vector<std::pair<std::string, T>>& v, const std::string& name) {
    for (const auto& [k, val] : v)
      if (k == name) return true;
    return false;
  }
};

namespace chowdetail {

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Line {
  int number;
  bool indented;
  std::string text;  // trimmed, comment-free, nonempty
};

inline std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string t = strip(raw);
    if (t.empty()) continue;
    out.push_back({n, raw[0] == ' ' || raw[0] == '\t', std::move(t)});
  }
  return out;
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(std::move(w));
  return out;
}

}  // namespace chowdetail

inline ChowDocument parse_chow_text(const std::string& text) {
  using chowdetail::words;
  ChowDocument doc;
  auto lines = chowdetail::logical_lines(text);

  auto parse_in = [&](const std::string& expr, const RingPtr& R, int lineno) {
    try {
      return parse_polynomial(expr, R);
    } catch (const ParseError& e) {
      throw ChowParseError(e.what(), lineno);
    }
  };

  std::size_t i = 0;
  while (i < lines.size()) {
    const auto& head = lines[i];
    if (head.indented) throw ChowParseError("unexpected indented line outside a block", head.number);
    auto hw = words(head.text);
    auto body_end = i + 1;
    while (body_end < lines.size() && lines[body_end].indented) ++body_end;

    if (hw.size() == 2 && hw[0] == "ring") {
      std::vector<std::pair<std::string, int>> vars;
      for (std::size_t j = i + 1; j < body_end; ++j) {
        auto w = words(lines[j].text);  // var IDENT : DEGREE
        if (w.size() != 4 || w[0] != "var" || w[2] != ":")
          throw ChowParseError("expected 'var IDENT : DEGREE'", lines[j].number);
        vars.emplace_back(w[1], std::stoi(w[3]));
      }
      doc.rings.emplace_back(hw[1], GradedRing::make(std::move(vars)));
    } else if (hw.size() == 4 && hw[0] == "ideal" && hw[2] == "in") {
      const RingPtr& R = doc.ring(hw[3]);
      std::vector<Polynomial> gens;
      for (std::size_t j = i + 1; j < body_end; ++j) {
        if (lines[j].text.rfind("rel ", 0) != 0)
          throw ChowParseError("expected 'rel EXPR'", lines[j].number);
        gens.push_back(parse_in(lines[j].text.substr(4), R, lines[j].number));
      }
      doc.ideals.emplace_back(hw[1], Ideal(R, std::move(gens)));
    } else if (hw.size() == 4 && hw[0] == "poly" && hw[2] == "in") {
      const RingPtr& R = doc.ring(hw[3]);
      if (body_end != i + 2 || lines[i + 1].text.rfind("expr ", 0) != 0)
        throw ChowParseError("poly block needs exactly one 'expr EXPR' line", head.number);
      doc.polys.emplace_back(hw[1], parse_in(lines[i + 1].text.substr(5), R, lines[i + 1].number));
    } else if (hw.size() >= 6 && hw[0] == "map" && hw[2] == "from" && hw[4] == "to") {
      if (hw.size() != 6 && !(hw.size() == 8 && hw[6] == "mod"))
        throw ChowParseError("expected 'map NAME from RING to RING [mod IDEAL]'", head.number);
      const RingPtr& S = doc.ring(hw[3]);
      const RingPtr& T = doc.ring(hw[5]);
      std::map<std::string, Polynomial> images;
      for (std::size_t j = i + 1; j < body_end; ++j) {
        auto w = words(lines[j].text);  // send IDENT -> EXPR
        if (w.size() < 4 || w[0] != "send" || w[2] != "->")
          throw ChowParseError("expected 'send IDENT -> EXPR'", lines[j].number);
        std::string expr;
        for (std::size_t k = 3; k < w.size(); ++k) expr += (k > 3 ? " " : "") + w[k];
        if (!S->index_of(w[1]))
          throw ChowParseError("send: unknown source variable " + w[1], lines[j].number);
        images.emplace(w[1], parse_in(expr, T, lines[j].number));
      }
      std::vector<Polynomial> ordered;
      for (std::size_t v = 0; v < S->nvars(); ++v) {
        auto it = images.find(S->name(v));
        if (it == images.end())
          throw ChowParseError("map " + hw[1] + ": no image for " + S->name(v), head.number);
        ordered.push_back(it->second);
      }
      if (hw.size() == 8) {
        // images of the quotient map must be taken modulo this ideal; audit it
        const Ideal& modI = doc.ideal(hw[7]);
        if (!same_ring(modI.ring(), T))
          throw ChowParseError("map " + hw[1] + ": mod ideal lives in the wrong ring",
                               head.number);
      }
      doc.maps.emplace_back(hw[1], RingMap(S, T, std::move(ordered)));
    } else if (hw.size() == 2 && hw[0] == "stratum") {
      std::optional<std::string> ring_name, ideal_name, restrict_name, class_var;
      std::optional<std::pair<std::string, int>> ctop_text;
      for (std::size_t j = i + 1; j < body_end; ++j) {
        auto w = words(lines[j].text);
        if (w.size() >= 2 && w[0] == "ring") ring_name = w[1];
        else if (w.size() >= 2 && w[0] == "ideal") ideal_name = w[1];
        else if (w.size() >= 2 && w[0] == "restrict") restrict_name = w[1];
        else if (w.size() >= 2 && w[0] == "class") class_var = w[1];
        else if (w[0] == "ctop")
          ctop_text = {chowdetail::strip(lines[j].text.substr(5)), lines[j].number};
        else throw ChowParseError("unknown stratum field " + w[0], lines[j].number);
      }
      if (!ring_name || !ideal_name || !restrict_name)
        throw ChowParseError("stratum needs ring, ideal, and restrict fields", head.number);
      if (class_var.has_value() != ctop_text.has_value())
        throw ChowParseError("stratum class and ctop must appear together", head.number);
      const RingPtr& R = doc.ring(*ring_name);
      std::optional<Polynomial> ctop;
      if (ctop_text) ctop = parse_in(ctop_text->first, R, ctop_text->second);
      doc.strata.emplace_back(
          hw[1], Stratum(StratumPresentation(hw[1], R, doc.ideal(*ideal_name)),
                         doc.map(*restrict_name), class_var, ctop));
    } else if (hw.size() == 2 && hw[0] == "stratification") {
      StratificationDecl d;
      d.name = hw[1];
      for (std::size_t j = i + 1; j < body_end; ++j) {
        auto w = words(lines[j].text);
        if (w.size() >= 2 && w[0] == "ambient") d.ambient_ring = w[1];
        else if (w.size() >= 2 && w[0] == "ideal") d.ambient_ideal = w[1];
        else if (w.size() >= 2 && w[0] == "stratum") d.strata.push_back(w[1]);
        else throw ChowParseError("unknown stratification field " + w[0], lines[j].number);
      }
      if (d.ambient_ring.empty() || d.ambient_ideal.empty() || d.strata.empty())
        throw ChowParseError("stratification needs ambient, ideal, and strata", head.number);
      doc.stratifications.push_back(std::move(d));
    } else if (hw.size() == 2 && hw[0] == "glue") {
      GlueDecl g{hw[1], "", "", "", "", Polynomial::zero(doc.rings.front().second)};
      std::optional<std::pair<std::string, int>> ctop_text;
      for (std::size_t j = i + 1; j < body_end; ++j) {
        auto w = words(lines[j].text);
        if (w.size() >= 2 && w[0] == "open") g.open = w[1];
        else if (w.size() >= 2 && w[0] == "closed") g.closed = w[1];
        else if (w.size() >= 2 && w[0] == "class") g.class_var = w[1];
        else if (w.size() >= 2 && w[0] == "pullback") g.pullback = w[1];
        else if (w[0] == "ctop")
          ctop_text = {chowdetail::strip(lines[j].text.substr(5)), lines[j].number};
        else throw ChowParseError("unknown glue field " + w[0], lines[j].number);
      }
      if (g.open.empty() || g.closed.empty() || g.class_var.empty() || g.pullback.empty() ||
          !ctop_text)
        throw ChowParseError("glue needs open, closed, class, pullback, ctop", head.number);
      g.ctop = parse_in(ctop_text->first, doc.stratum(g.closed).presentation.ring,
                        ctop_text->second);
      doc.glues.push_back(std::move(g));
    } else {
      throw ChowParseError("unknown declaration: " + head.text, head.number);
    }
    i = body_end;
  }
  return doc;
}

}  // namespace stratachow
