#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "stratachow/catalog.hpp"
#include "stratachow/chern.hpp"
#include "stratachow/parse.hpp"

using namespace stratachow;

TEST_CASE("the embedded dataset loads and passes its transcription audit") {
  const Catalog& cat = Catalog::instance();
  CHECK(cat.list().size() > 30);
  CHECK_THROWS_AS(cat.poly("no.such.entry"), UnknownEntry);
}

TEST_CASE("relation ideals have the documented shapes") {
  const Catalog& cat = Catalog::instance();
  const Ideal& strat = cat.ideal("m3tilde.relations");
  CHECK(strat.generators().size() == 14);
  CHECK(Catalog::m3tilde_relation_names().size() == 14);

  const Ideal& bar = cat.ideal("m3bar.relations");
  REQUIRE(bar.generators().size() == 15);
  CHECK(Catalog::m3bar_relation_names().size() == 15);
  std::map<long, int> multiset;
  for (const auto& g : bar.generators()) ++multiset[*g.homogeneous_degree()];
  CHECK(multiset == std::map<long, int>{{2, 1}, {3, 5}, {4, 8}, {5, 1}});

  CHECK(cat.poly("m3tilde.r").homogeneous_degree() == 9);
  CHECK(cat.ideal("open.p012").generators().size() == 3);
  CHECK(cat.ideal("delta11.relations").generators().empty());
}

TEST_CASE("the catalog degree-9 hyperelliptic relation matches the derivation") {
  CHECK(Catalog::instance().poly("hyperelliptic.c9") == compute_c9());
}

TEST_CASE("catalog restriction maps agree with the stratum ctop data") {
  const Catalog& cat = Catalog::instance();
  for (const char* name : {"hyperelliptic", "delta1", "delta11", "delta111"}) {
    const Stratum& s = cat.stratum(name);
    REQUIRE(s.class_var.has_value());
    auto idx = cat.ring("m3tilde.ring")->index_of(*s.class_var);
    REQUIRE(idx.has_value());
    Polynomial v = Polynomial::variable(cat.ring("m3tilde.ring"), static_cast<std::size_t>(*idx));
    CHECK(s.restriction.apply(v) == *s.c_top);
  }
  // the class variable of each stratum restricts to zero on all shallower strata
  const auto& order = cat.doc().stratification_decl("m3tilde.stratification").strata;
  for (std::size_t deep = 1; deep < order.size(); ++deep) {
    const Stratum& s = cat.stratum(order[deep]);
    auto idx = cat.ring("m3tilde.ring")->index_of(*s.class_var);
    Polynomial v = Polynomial::variable(cat.ring("m3tilde.ring"), static_cast<std::size_t>(*idx));
    for (std::size_t shallow = 0; shallow < deep; ++shallow)
      CHECK(cat.stratum(order[shallow]).restriction.apply(v).is_zero());
  }
}

TEST_CASE("the two displayed forms of the pinched second boundary class coincide") {
  const Catalog& cat = Catalog::instance();
  CHECK(cat.poly("m3bar.d11c") == cat.poly("m3bar.d11c.alt"));
}

TEST_CASE("faber maps compose to the identity on the generators") {
  auto [fwd, bwd] = Catalog::instance().faber_maps();
  for (std::size_t i = 0; i < fwd.source()->nvars(); ++i) {
    Polynomial v = Polynomial::variable(fwd.source(), i);
    CHECK(bwd.apply(fwd.apply(v)) == v);
  }
  for (std::size_t i = 0; i < bwd.source()->nvars(); ++i) {
    Polynomial v = Polynomial::variable(bwd.source(), i);
    CHECK(fwd.apply(bwd.apply(v)) == v);
  }
}

TEST_CASE("glue stage declarations resolve against the strata") {
  const Catalog& cat = Catalog::instance();
  GluingDatum d = cat.doc().make_glue("stage1");
  CHECK(d.open_side.name == "open");
  CHECK(d.closed_side.name == "hyperelliptic");
  CHECK(d.extended_ring->nvars() == 4);
  CHECK(same_ring(d.extended_ring, cat.ring("stage1.ring")));
}
