#include <doctest.h>

#include "ncfact/errors.hpp"
#include "ncfact/nc_poset.hpp"
#include "oracles.hpp"

using namespace ncfact;

namespace {

std::shared_ptr<const Group> make(const char* name) { return build_group(parse_group(name)); }

}  // namespace

TEST_SUITE("ncp") {

TEST_CASE("NC size is the Catalan number") {
  const std::vector<std::pair<const char*, int>> cases = {
      {"A1", 2}, {"A2", 5}, {"A3", 14}, {"A4", 42}, {"B3", 20}, {"D4", 50}, {"I2(7)", 9},
      {"H3", 32}, {"F4", 105}, {"H4", 280}, {"G(3,3,3)", 18}, {"G(3,1,3)", 20}};
  for (const auto& [name, cat] : cases) {
    INFO(name);
    const auto g = make(name);
    CHECK(fuss_catalan(*g, 1) == cat);
    CHECK(build_nc(g).size() == static_cast<std::size_t>(cat));
  }
}

TEST_CASE("NC agrees with the definition over all of W") {
  const auto g = make("A3");
  const auto brute = oracle::noncrossing(*g, oracle::symmetric_length);
  const auto nc = build_nc(g);
  REQUIRE(nc.size() == brute.size());
  for (const auto& w : nc.elements()) CHECK(brute.contains(w));

  for (const char* name : {"B3", "G(3,3,3)", "G(4,1,2)"}) {
    INFO(name);
    const auto h = make(name);
    const auto set = oracle::noncrossing(*h, [&](const Element& w) { return h->reflection_length(w); });
    CHECK(build_nc(h).size() == set.size());
  }
}

TEST_CASE("multichains follow Fuss-Catalan numbers") {
  for (const char* name : {"A3", "B3", "D4", "H3", "I2(5)", "G(3,3,3)", "G(3,1,2)", "G(3,3,4)"}) {
    INFO(name);
    const auto g = make(name);
    const auto nc = build_nc(g);
    CHECK_THROWS(count_multichains(nc, 0));
    for (int p = 1; p <= 5; ++p) CHECK(count_multichains(nc, p) == fuss_catalan(*g, p));
  }
  // A3, p = 2: (2+8)(3+8)(4+8)/24
  CHECK(fuss_catalan(*make("A3"), 2) == 55);
}

TEST_CASE("Fuss-Catalan rejects non-integral data") {
  InvariantData bogus;
  bogus.rank = 2;
  bogus.order = 12;
  bogus.degrees = {3, 4};
  CHECK_THROWS_AS(fuss_catalan(bogus, 1), NonIntegerResult);
}

TEST_CASE("absolute order is a partial order with c on top") {
  for (const char* name : {"A3", "B3", "G(3,3,3)"}) {
    INFO(name);
    const auto g = make(name);
    const auto nc = build_nc(g);
    const std::size_t n = nc.size();
    for (std::size_t u = 0; u < n; ++u) {
      CHECK(nc.leq(u, u));
      CHECK(nc.leq(0, u));
      CHECK(nc.leq(u, nc.top()));
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v && nc.leq(u, v)) CHECK_FALSE(nc.leq(v, u));
        CHECK(nc.leq(u, v) == g->absolute_leq(nc.element(u), nc.element(v)));
        if (!nc.leq(u, v)) continue;
        for (std::size_t w = 0; w < n; ++w) {
          if (nc.leq(v, w)) CHECK(nc.leq(u, w));
        }
      }
    }
  }
}

TEST_CASE("Kreweras complement stays in NC and ranks are symmetric") {
  for (const char* name : {"A4", "B3", "D4", "H3", "G(4,4,3)", "G(3,1,3)"}) {
    INFO(name);
    const auto g = make(name);
    const auto nc = build_nc(g);
    const int n = g->rank();
    for (std::size_t i = 0; i < nc.size(); ++i) {
      const Element k = g->multiply(g->invert(nc.element(i)), g->coxeter());
      const auto j = nc.find(k);
      REQUIRE(j.has_value());
      CHECK(nc.rank_of(*j) == n - nc.rank_of(i));
    }
    for (int k = 0; k <= n; ++k) CHECK(nc.at_rank(k).size() == nc.at_rank(n - k).size());
  }
}

TEST_CASE("interval factors") {
  const auto g = make("B3");
  const auto nc = build_nc(g);
  for (std::size_t v = 0; v < nc.size(); ++v) {
    for (const auto& iv : nc.below(v)) {
      CHECK(g->multiply(nc.element(iv.lower), nc.element(iv.factor)) == nc.element(v));
      CHECK(nc.rank_of(iv.lower) + nc.rank_of(iv.factor) == nc.rank_of(v));
    }
  }
  CHECK_THROWS_AS(nc.index_of(g->multiply(g->coxeter(), g->coxeter())), NotInNC);
}

TEST_CASE("codimension-2 strata") {
  SUBCASE("counts of classes") {
    CHECK(strata_codim2(build_nc(make("A3"))).size() == 2);
    CHECK(strata_codim2(build_nc(make("D4"))).size() == 4);
    CHECK(strata_codim2(build_nc(make("G(3,3,3)"))).size() == 4);
    CHECK(strata_codim2(build_nc(make("I2(8)"))).size() == 1);
  }
  SUBCASE("sizes add up to the rank-2 layer") {
    for (const char* name : {"A4", "B4", "F4", "G(6,6,3)"}) {
      INFO(name);
      const auto nc = build_nc(make(name));
      std::uint64_t total = 0;
      for (const auto& cls : strata_codim2(nc)) {
        total += cls.size_in_nc;
        CHECK(cls.rank == 2);
        CHECK(nc.class_of(nc.index_of(cls.representative)) == cls.id);
      }
      CHECK(total == nc.at_rank(2).size());
    }
  }
}

}  // TEST_SUITE
