#pragma once
// The embedded dataset: presentations, restriction maps, relation ideals, and
// named classes, parsed from the shipped declarative text and audited at load
// (homogeneity plus a per-entry transcription checksum of degree and term
// count).

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stratachow/catalog_data.hpp"
#include "stratachow/chow_format.hpp"

namespace stratachow {

struct HomogeneityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace catalogdetail {

inline void audit_entry(const std::string& key, const Polynomial& p, int degree, int terms) {
  if (static_cast<int>(p.term_count()) != terms)
    throw HomogeneityViolation("catalog entry " + key + ": expected " + std::to_string(terms) +
                               " terms, found " + std::to_string(p.term_count()));
  if (p.is_zero()) return;
  auto d = p.homogeneous_degree();
  if (!d)
    throw HomogeneityViolation("catalog entry " + key + " is not homogeneous");
  if (static_cast<int>(*d) != degree)
    throw HomogeneityViolation("catalog entry " + key + ": expected degree " +
                               std::to_string(degree) + ", found " + std::to_string(*d));
}

}  // namespace catalogdetail

class Catalog {
 public:
  static const Catalog& instance() {
    static const Catalog c;
    return c;
  }

  const ChowDocument& doc() const { return doc_; }

  const Ideal& ideal(const std::string& key) const { return doc_.ideal(key); }
  const Polynomial& poly(const std::string& key) const { return doc_.poly(key); }
  const RingPtr& ring(const std::string& key) const { return doc_.ring(key); }
  const RingMap& map(const std::string& key) const { return doc_.map(key); }
  const Stratum& stratum(const std::string& key) const { return doc_.stratum(key); }

  // Display names of the 14 relations of the stratified presentation, aligned
  // with the generator order of "m3tilde.relations".
  static const std::vector<std::string>& m3tilde_relation_names() {
    static const std::vector<std::string> names = {
        "k_h",     "k1(1)",   "k1(2)",   "k11(1)",  "k11(2)", "k11(3)", "k111(1)",
        "k111(2)", "k111(3)", "k111(4)", "m(1)",    "m(2)",   "m(3)",   "h(1)"};
    return names;
  }

  // Display names of the 15 relations of the compactified presentation,
  // aligned with the generator order of "m3bar.relations".
  static const std::vector<std::string>& m3bar_relation_names() {
    static const std::vector<std::string> names = {
        "[A2]",  "[A3]",    "[A3^1]",  "d1c",     "k1(1)", "k11(2)", "[A4]", "d11c",
        "k11(1)", "k111(1)", "k111(4)", "m(1)",   "k_h",   "k1(2)",  "k11(3)"};
    return names;
  }

  std::pair<RingMap, RingMap> faber_maps() const {
    return {doc_.map("faber.forward"), doc_.map("faber.backward")};
  }

  // Stable listing of every catalog key, one "kind name" line each.
  std::vector<std::string> list() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : doc_.rings) out.push_back("ring " + k);
    for (const auto& [k, v] : doc_.ideals) out.push_back("ideal " + k);
    for (const auto& [k, v] : doc_.polys) out.push_back("poly " + k);
    for (const auto& [k, v] : doc_.maps) out.push_back("map " + k);
    for (const auto& [k, v] : doc_.strata) out.push_back("stratum " + k);
    for (const auto& s : doc_.stratifications) out.push_back("stratification " + s.name);
    for (const auto& g : doc_.glues) out.push_back("glue " + g.name);
    return out;
  }

 private:
  Catalog() : doc_(parse_chow_text(catalogdata::catalog_text())) {
    for (const auto& e : catalogdata::entry_checksums()) {
      if (std::string(e.kind) == "ideal") {
        const Ideal& I = doc_.ideal(e.key);
        if (I.generators().size() != e.degrees.size())
          throw HomogeneityViolation(std::string("catalog ideal ") + e.key +
                                     ": generator count mismatch");
        for (std::size_t i = 0; i < e.degrees.size(); ++i)
          catalogdetail::audit_entry(std::string(e.key) + "[" + std::to_string(i) + "]",
                                     I.generators()[i], e.degrees[i], e.term_counts[i]);
      } else {
        catalogdetail::audit_entry(e.key, doc_.poly(e.key), e.degrees.at(0),
                                   e.term_counts.at(0));
      }
    }
  }

  ChowDocument doc_;
};

}  // namespace stratachow
