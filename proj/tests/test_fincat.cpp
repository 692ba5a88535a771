#include <catch_amalgamated.hpp>

#include "laxdesc/fincat.hpp"
#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;

namespace {

std::vector<NamedCategory> small_categories() {
  auto all = category_catalog();
  std::vector<NamedCategory> out;
  for (auto& c : all)
    if (c.cat->morphism_count() <= 5) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("catalog categories satisfy the category laws", "[fincat]") {
  for (const auto& c : category_catalog()) {
    INFO(c.name);
    REQUIRE(validate_category(*c.cat).ok());
  }
}

TEST_CASE("a non-associative table is rejected", "[fincat]") {
  // Monoid {1, a, b} with a a = b, a b = a, b a = b, b b = b; (a a) a = b a = b but a (a a) = a b = a.
  std::vector<int> table = {0, 1, 2, 1, 2, 1, 2, 2, 2};
  auto c = monoid_category(3, table, 0);
  REQUIRE_FALSE(validate_category(*c).ok());
}

TEST_CASE("functor enumeration matches the brute-force count", "[fincat]") {
  auto cats = small_categories();
  for (const auto& a : cats)
    for (const auto& b : cats) {
      if (b.cat->morphism_count() > 4 || a.cat->morphism_count() > 4) continue;
      INFO(a.name << " -> " << b.name);
      auto fs = enumerate_functors(a.cat, b.cat);
      REQUIRE(fs.size() == oracles::count_functors(*a.cat, *b.cat));
      for (const auto& f : fs) REQUIRE(check_functor(f).ok());
    }
}

TEST_CASE("equivalence and adjoint detection agree with brute-force oracles", "[fincat]") {
  Rng rng(11);
  auto cats = small_categories();
  std::vector<FinCatPtr> pool;
  for (const auto& c : cats) pool.push_back(c.cat);
  pool.push_back(inflate_category(arrow_category(), {0, 1, 1}).cat);
  pool.push_back(preorder_category(2, {{0, 1}, {1, 0}}));
  int equivalences = 0, adjoints = 0, total = 0;
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& f : enumerate_functors(a, b, 40)) {
        ++total;
        bool eq = oracles::is_equivalence(f);
        REQUIRE(check_equivalence(f).equivalence() == eq);
        bool adj = oracles::has_left_adjoint(f);
        auto found = find_left_adjoint(f);
        REQUIRE(found.has_value() == adj);
        if (found) REQUIRE(check_adjunction(*found).ok());
        equivalences += eq;
        adjoints += adj;
      }
  REQUIRE(equivalences > 0);
  REQUIRE(adjoints > equivalences);
  REQUIRE(total > adjoints);
}

TEST_CASE("natural isomorphism search", "[fincat]") {
  auto iso = preorder_category(2, {{0, 1}, {1, 0}});
  auto t = terminal_category();
  FinFunctor at0 = constant_functor(t, iso, 0), at1 = constant_functor(t, iso, 1);
  auto n = find_natural_iso(at0, at1);
  REQUIRE(n);
  REQUIRE(is_invertible(*n));
  auto arrow = arrow_category();
  REQUIRE_FALSE(find_natural_iso(constant_functor(t, arrow, 0), constant_functor(t, arrow, 1)));
}

TEST_CASE("lazy equivalence agrees with the table version", "[fincat]") {
  auto inf = inflate_category(chain_category(3), {0, 1, 2, 2, 0});
  for (const FinFunctor& f : {inf.proj, inf.section, functor_to_terminal(inf.cat)}) {
    auto lazy_rep = check_equivalence(lazy(f), f.src->objects(), f.tgt->objects());
    REQUIRE(lazy_rep.equivalence() == check_equivalence(f).equivalence());
  }
}

TEST_CASE("opposites are involutive and dualize composition", "[fincat]") {
  for (const auto& c : category_catalog()) {
    auto op = opposite(*c.cat);
    auto opop = opposite(*op);
    REQUIRE(validate_category(*op).ok());
    REQUIRE(opop->morphism_count() == c.cat->morphism_count());
    for (int f = 0; f < c.cat->morphism_count(); ++f) {
      REQUIRE(op->dom(f) == c.cat->cod(f));
      REQUIRE(opop->dom(f) == c.cat->dom(f));
      for (int g : c.cat->out(c.cat->cod(f))) REQUIRE(op->comp(f, g) == c.cat->comp(g, f));
    }
  }
}

TEST_CASE("vertical composition and whiskering", "[fincat]") {
  auto c = chain_category(3);
  auto t = terminal_category();
  FinFunctor a = constant_functor(t, c, 0), b = constant_functor(t, c, 1), d = constant_functor(t, c, 2);
  NatTrans ab{a, b, {c->hom_ids(0, 1)[0]}}, bd{b, d, {c->hom_ids(1, 2)[0]}};
  NatTrans ad = compose2(bd, ab, Mode::vertical);
  REQUIRE(ad.comp[0] == c->hom_ids(0, 2)[0]);
  REQUIRE(check_natural(ad).ok());
  NatTrans w = whisker_left(identity_functor(c), ad);
  REQUIRE(w == ad);
  REQUIRE_FALSE(is_invertible(ad));
  REQUIRE(is_invertible(identity_nat(a)));
}
