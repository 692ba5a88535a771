#include <catch_amalgamated.hpp>

#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;

namespace {

// X^{m(-)} for the one-object category of the idempotent monoid; every
// table stays small, unlike slices whose fibers double along each face.
TruncCosimp power_instance(const Monoid& m) {
  FinCatPtr x;
  for (const auto& nc : category_catalog())
    if (nc.name == "M2") x = nc.cat;
  return compose_indexed_with_precategory(power_indexed_category(x, 8), sigma_precategory(m));
}

}  // namespace

TEST_CASE("category builders", "[theorems]") {
  SECTION("catalog entries are categories") {
    for (const auto& nc : category_catalog()) {
      INFO(nc.name);
      REQUIRE(validate_category(*nc.cat).ok());
    }
    for (const auto& nc : shape_catalog()) {
      INFO(nc.name);
      REQUIRE(validate_category(*nc.cat).ok());
    }
  }
  SECTION("preorders are thin and transitive") {
    auto p = preorder_category(3, {{0, 1}, {1, 2}});
    REQUIRE(oracles::leq(*p, 0, 2));
    REQUIRE_FALSE(oracles::leq(*p, 2, 0));
    REQUIRE(p->morphism_count() == 6);
    REQUIRE(chain_category(4)->morphism_count() == 10);
  }
  SECTION("composable arrows are rejected by graph_category") {
    REQUIRE_THROWS(graph_category(3, {{0, 1}, {1, 2}}));
    REQUIRE(graph_category(3, {{0, 1}, {2, 1}})->morphism_count() == 5);
  }
  SECTION("coproduct injections") {
    auto c = coproduct_category(arrow_category(), parallel_pair_category());
    REQUIRE(c.cat->object_count() == 4);
    REQUIRE(c.cat->morphism_count() == 3 + 4);
    REQUIRE(check_functor(c.left).ok());
    REQUIRE(check_functor(c.right).ok());
  }
  SECTION("inflation projection is an equivalence with a section") {
    auto inf = inflate_category(arrow_category(), {0, 1, 1, 0});
    REQUIRE(validate_category(*inf.cat).ok());
    REQUIRE(oracles::is_equivalence(inf.proj));
    REQUIRE(compose(inf.proj, inf.section) == identity_functor(arrow_category()));
  }
}

TEST_CASE("random generators produce valid data", "[theorems]") {
  Rng rng(5);
  for (int i = 0; i < 8; ++i) {
    auto p = random_preorder(4, rng);
    REQUIRE(validate_category(*p).ok());
    auto f = random_functor(span_category(), p, rng);
    REQUIRE(f);
    REQUIRE(check_functor(*f).ok());
  }
  for (int i = 0; i < 6; ++i) {
    RandomCosimp rc = random_cosimp(rng);
    INFO(rc.description);
    REQUIRE(validate_trunc_cosimp(rc.a).ok());
  }
}

TEST_CASE("Kan extensions lift to the lax descent category", "[theorems]") {
  SECTION("right") {
    SuiteSummary s = run_main_theorem_suite(101, 40, KanDirection::right, 400);
    INFO(s.first_counterexample);
    REQUIRE(s.counterexamples == 0);
    REQUIRE(s.verified == 40);
  }
  SECTION("left") {
    SuiteSummary s = run_main_theorem_suite(103, 40, KanDirection::left, 400);
    INFO(s.first_counterexample);
    REQUIRE(s.counterexamples == 0);
    REQUIRE(s.verified == 40);
  }
}

TEST_CASE("a fixed power instance over the idempotent monoid", "[theorems]") {
  DescentTables t = tabulate_descent(power_instance(idempotent_monoid()));
  const int n = t.l.cat->object_count();
  REQUIRE(n > 1);
  // The whole lax descent category as a discrete diagram, extended to a point.
  auto shape = discrete_category(n);
  FinFunctor j{shape, t.l.cat, {}, {}};
  for (int x = 0; x < n; ++x) {
    j.obj.push_back(x);
    j.mor.push_back(t.l.cat->identity(x));
  }
  for (auto dir : {KanDirection::right, KanDirection::left}) {
    MainTheoremReport rep = verify_main_theorem(t, j, functor_to_terminal(shape), dir);
    INFO(rep.witness);
    REQUIRE_FALSE(rep.counterexample());
    if (rep.hypotheses()) REQUIRE(rep.created());
  }
}

TEST_CASE("a corrupted structure cell is caught", "[theorems]") {
  DescentTables t = tabulate_descent(power_instance(cyclic_group(2)));
  FinFunctor id = identity_functor(t.l.cat);
  MainTheoremReport clean = verify_main_theorem(t, id, id, KanDirection::right);
  REQUIRE(clean.hypotheses());
  REQUIRE(clean.created());

  // Replace one component of psi by a parallel morphism that is not a datum.
  const auto& a2 = *t.cats[1].cat;
  bool corrupted = false;
  for (size_t x = 0; x < t.psi.comp.size() && !corrupted; ++x) {
    int c = t.psi.comp[x];
    const Obj& w = t.cats[0].objs[t.forget.obj[x]];
    for (int m : oracles::hom_list(a2, a2.dom(c), a2.cod(c)))
      if (!is_descent_datum(t.a, t.cells, w, t.cats[1].mors[m])) {
        t.psi.comp[x] = m;
        corrupted = true;
        break;
      }
  }
  REQUIRE(corrupted);
  MainTheoremReport bad = verify_main_theorem(t, id, id, KanDirection::right);
  REQUIRE(bad.hypotheses());
  REQUIRE(bad.counterexample());
}

TEST_CASE("split forks are created by the forgetful functor", "[theorems]") {
  for (const Monoid& m : {idempotent_monoid(), cyclic_group(2)}) {
    DescentTables t = tabulate_descent(power_instance(m));
    AbsoluteReport r = verify_absolute_creation(t);
    INFO(r.witness);
    REQUIRE(r.split_pairs > 0);
    REQUIRE(r.ok());
  }
}

TEST_CASE("equivalences into the lax descent category compose to monadic functors", "[theorems]") {
  // Every catalog power instance whose forgetful functor has a left adjoint.
  int with_adjoint = 0;
  for (const auto& nc : category_catalog()) {
    if (nc.cat->morphism_count() > 4) continue;
    for (const Monoid& m : {idempotent_monoid(), cyclic_group(2)}) {
      DescentTables t =
          tabulate_descent(compose_indexed_with_precategory(power_indexed_category(nc.cat, 8), sigma_precategory(m)));
      MonadicityTheoremReport direct = verify_monadicity_theorem(t, identity_functor(t.l.cat));
      if (!direct.has_left_adjoint) continue;
      ++with_adjoint;
      INFO(nc.name << ": " << direct.report.witness);
      REQUIRE(direct.ok());
      std::vector<int> pi(t.l.cat->object_count());
      std::iota(pi.begin(), pi.end(), 0);
      pi.push_back(0);
      REQUIRE(verify_monadicity_theorem(t, inflate_category(t.l.cat, pi).proj).ok());
    }
  }
  REQUIRE(with_adjoint > 0);

  SuiteSummary s = run_monadicity_suite(107, 12, 60);
  INFO(s.first_counterexample);
  REQUIRE(s.counterexamples == 0);
  REQUIRE(s.verified == 12);
}
