#include <catch_amalgamated.hpp>

#include "laxdesc/descent.hpp"
#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;
using delta3::Gen;

TEST_CASE("Eq(p) is a precategory with the kernel pair as its arrows", "[descent]") {
  for (int e = 0; e <= 3; ++e)
    for (int b = 1; b <= 2; ++b)
      for (const auto& p : oracles::maps_between(e, b)) {
        Precategory eq = eq_groupoid(p);
        INFO("p = " << show_vec(p.img));
        REQUIRE(validate_precategory(eq).ok());
        REQUIRE(eq.objs[1].at(0) == oracles::pullback_size(p, p));
        // The two projections equalize p.
        auto first = finset::as_map(eq.gens.at(Gen::d1)), second = finset::as_map(eq.gens.at(Gen::d0));
        REQUIRE(finset::compose(p, first) == finset::compose(p, second));
        auto diag = finset::as_map(eq.gens.at(Gen::s0));
        REQUIRE(finset::compose(first, diag) == finset::identity_map(e));
      }
}

TEST_CASE("internal actions of a discrete precategory are the fiber itself", "[descent]") {
  auto f = finset::basic_indexed_category(3);
  Precategory eq = eq_groupoid(finset::make_map(2, 1, {0, 0}));
  Precategory d = underlying_discrete(eq);
  REQUIRE(validate_precategory(d).ok());
  auto carriers = f.at(d.objs[0])->objects();
  InternalActions ia = internal_actions(f, d, carriers);
  REQUIRE(validate_trunc_cosimp(ia.cosimp).ok());
  // Over a discrete precategory the identity is the only datum.
  REQUIRE(ia.descent.objects.size() == carriers.size());
}

TEST_CASE("the canonical datum factors F(p) through descent data", "[descent]") {
  auto f = finset::basic_indexed_category(3);
  for (const auto& p : {finset::make_map(2, 1, {0, 0}), finset::make_map(1, 2, {1}), finset::make_map(3, 2, {0, 0, 1})}) {
    Mor pm = finset::as_mor(p);
    auto carriers = f.at(pm.dom)->objects();
    std::vector<Obj> base;
    for (const Obj& v : f.at(pm.cod)->objects())
      if (static_cast<int>(f.on_mor(pm).obj(v).size()) <= 3) base.push_back(v);
    DescentFactorization df = descent_factorization(f, pm, carriers, base);
    INFO(df.witness);
    REQUIRE(df.datum_ok);
    REQUIRE(df.composite_check);
    REQUIRE(validate_trunc_cosimp(df.fp).ok());
  }
}

TEST_CASE("effective descent in slices is surjectivity", "[descent]") {
  for (int e = 0; e <= 2; ++e)
    for (int b = 0; b <= 2; ++b)
      for (const auto& p : oracles::maps_between(e, b)) {
        INFO("p : " << e << " -> " << b << " = " << show_vec(p.img));
        auto rep = is_effective_descent_slices(p, 3);
        REQUIRE(rep.datum_ok);
        REQUIRE(rep.effective() == oracles::surjective(p));
      }
}

TEST_CASE("a point into a larger set is never effective", "[descent]") {
  for (int b = 1; b <= 3; ++b) {
    auto p = finset::make_map(1, b, {0});
    auto rep = is_effective_descent_slices(p, 3);
    REQUIRE(rep.effective() == (b == 1));
    auto f = finset::basic_indexed_category(3);
    Mor pm = finset::as_mor(p);
    auto eq = check_equivalence(f.on_mor(pm), f.at(pm.cod)->objects(), f.at(pm.dom)->objects());
    REQUIRE(eq.equivalence() == rep.effective());
  }
}

TEST_CASE("table indexed categories", "[descent]") {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    TableIndexed t = terminal_domain_instance(rng);
    REQUIRE(validate_table_indexed(t).ok());
    TableIndexed u = arrow_base_instance(rng);
    REQUIRE(validate_table_indexed(u).ok());
  }
}

TEST_CASE("effectiveness over the arrow category is equivalence of the reindexing", "[descent]") {
  IffSummary s = run_arrow_base_suite(29, 40);
  INFO(s.first_counterexample);
  REQUIRE(s.counterexamples == 0);
  REQUIRE(s.effective > 0);
  REQUIRE(s.effective < s.instances);
}

TEST_CASE("effectiveness with a terminal domain is equivalence of the reindexing", "[descent]") {
  IffSummary s = run_terminal_domain_suite(31, 40);
  INFO(s.first_counterexample);
  REQUIRE(s.counterexamples == 0);
  REQUIRE(s.effective > 0);
  REQUIRE(s.effective < s.instances);
}
