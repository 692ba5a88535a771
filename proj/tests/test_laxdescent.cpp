#include <catch_amalgamated.hpp>

#include "laxdesc/laxdescent.hpp"
#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;

namespace {

struct Instance {
  TruncCosimp a;
  DerivedCells cells;
  LaxDescent ld;
  std::vector<Obj> carriers;
};

Instance sigma_instance(const Monoid& m, int bound) {
  Instance i;
  i.a = sigma_cosimp(m, bound);
  i.cells = derived_cells(i.a);
  i.carriers = i.a.cats[0]->objects();
  i.ld = build_lax_descent(i.a, i.carriers);
  return i;
}

}  // namespace

TEST_CASE("structured encodings round-trip", "[laxdescent]") {
  Structured s{{0, 0, 1}, Mor{{1}, {2}, {3, 4}}};
  Structured back = decode_structured(encode_structured(s));
  REQUIRE(back.carrier == s.carrier);
  REQUIRE(back.structure == s.structure);
}

TEST_CASE("lax descent objects of a monoid are its actions", "[laxdescent]") {
  for (const Monoid& m : {idempotent_monoid(), cyclic_group(2)}) {
    Instance i = sigma_instance(m, 2);
    size_t expected = 0;
    for (const Obj& w : i.carriers) expected += oracles::count_monoid_actions(m, static_cast<int>(w.size()));
    REQUIRE(i.ld.objects.size() == expected);
    for (const Obj& x : i.ld.objects) {
      Structured s = decode_structured(x);
      REQUIRE(is_descent_datum(i.a, i.cells, s.carrier, s.structure));
    }
  }
}

TEST_CASE("non-data are rejected with the failing equation", "[laxdescent]") {
  Instance i = sigma_instance(idempotent_monoid(), 2);
  Obj w{0, 0};
  const Fun& d1 = i.a.at("d1");
  const Fun& d0 = i.a.at("d0");
  int rejected = 0;
  for (const Mor& phi : i.a.cats[1]->hom(d1.obj(w), d0.obj(w))) {
    auto failure = descent_datum_failure(i.a, i.cells, w, phi);
    if (failure) {
      ++rejected;
      REQUIRE((*failure == "associativity" || *failure == "identity"));
    }
  }
  REQUIRE(rejected > 0);
}

TEST_CASE("the forgetful functor is faithful and conservative", "[laxdescent]") {
  Instance i = sigma_instance(idempotent_monoid(), 2);
  const auto& l = *i.ld.cat;
  for (const Obj& x : i.ld.objects)
    for (const Obj& y : i.ld.objects) {
      std::set<Mor> images;
      for (const Mor& m : l.hom(x, y)) {
        images.insert(i.ld.forget.mor(m));
        if (i.a.cats[0]->is_iso(i.ld.forget.mor(m))) REQUIRE(l.is_iso(m));
      }
      REQUIRE(images.size() == l.hom(x, y).size());
    }
  REQUIRE(is_conservative(i.ld.forget, i.ld.objects));
}

TEST_CASE("the universal pair satisfies associativity and identity", "[laxdescent]") {
  Instance i = sigma_instance(cyclic_group(2), 2);
  REQUIRE(check_universal_pair(i.a, i.ld.forget, i.ld.psi, i.ld.objects).ok());
  REQUIRE(check_natural(i.ld.psi, i.ld.objects).ok());
}

TEST_CASE("factoring the forgetful functor through itself gives the identity", "[laxdescent]") {
  Instance i = sigma_instance(idempotent_monoid(), 2);
  FactorResult r = factor_functor(i.a, i.ld, i.ld.forget, i.ld.psi, i.ld.objects);
  REQUIRE(r.value);
  for (const Obj& x : i.ld.objects) {
    REQUIRE(r.value->obj(x) == x);
    for (const Obj& y : i.ld.objects)
      for (const Mor& m : i.ld.cat->hom(x, y)) REQUIRE(r.value->mor(m) == m);
  }
}

TEST_CASE("factorization is unique among functors satisfying both equations", "[laxdescent]") {
  FinCatPtr x;
  for (const auto& nc : category_catalog())
    if (nc.name == "M2") x = nc.cat;
  DescentTables t =
      tabulate_descent(compose_indexed_with_precategory(power_indexed_category(x, 8), sigma_precategory(cyclic_group(2))));
  REQUIRE(t.l.cat->object_count() <= 40);
  // Endofunctors E of L with forget . E = forget and psi * E = psi.
  int solutions = 0;
  for (const auto& e : enumerate_functors(t.l.cat, t.l.cat)) {
    if (!(compose(t.forget, e) == t.forget)) continue;
    if (!(whisker_right(t.psi, e) == t.psi)) continue;
    ++solutions;
    REQUIRE(e == identity_functor(t.l.cat));
  }
  REQUIRE(solutions == 1);
}

TEST_CASE("a constant functor with a datum factors as the constant lift", "[laxdescent]") {
  Instance i = sigma_instance(cyclic_group(2), 2);
  Obj x = i.ld.objects.back();
  Structured s = decode_structured(x);
  CatPtr point = terminal_category();
  auto base = i.a.cats[0];
  Fun f{point, base, [s](const Obj&) { return s.carrier; }, [base, s](const Mor&) { return base->id(s.carrier); }};
  auto d1 = compose_fun(i.a.at("d1"), f);
  auto d0 = compose_fun(i.a.at("d0"), f);
  Nat beta{d1, d0, [s](const Obj&) { return s.structure; }};
  FactorResult r = factor_functor(i.a, i.ld, f, beta, point->objects());
  REQUIRE(r.value);
  REQUIRE(r.value->obj(point->objects()[0]) == x);
}

TEST_CASE("2-cells lift exactly when their components are descent morphisms", "[laxdescent]") {
  Instance i = sigma_instance(idempotent_monoid(), 2);
  auto point = terminal_category();
  const auto& l = i.ld.cat;
  // Pick two objects over the 2-element set with different actions.
  std::vector<Obj> over2;
  for (const Obj& x : i.ld.objects)
    if (decode_structured(x).carrier.size() == 2) over2.push_back(x);
  REQUIRE(over2.size() == 3);
  auto at = [&](const Obj& x) {
    return Fun{point, l, [x](const Obj&) { return x; }, [l, x](const Mor&) { return l->id(x); }};
  };
  int liftable = 0, rejected = 0;
  for (const Obj& x : over2)
    for (const Obj& y : over2) {
      Fun fx = at(x), fy = at(y);
      Fun dx = compose_fun(i.ld.forget, fx), dy = compose_fun(i.ld.forget, fy);
      Structured sx = decode_structured(x), sy = decode_structured(y);
      for (const Mor& m : i.a.cats[0]->hom(sx.carrier, sy.carrier)) {
        Nat xi{dx, dy, [m](const Obj&) { return m; }};
        Factor2Result r = factor_2cell(i.a, i.ld, fx, fy, xi, point->objects());
        REQUIRE(r.value.has_value() == is_descent_morphism(i.a, sx, sy, m));
        if (r.value) {
          ++liftable;
          REQUIRE(i.ld.forget.mor(r.value->at(point->objects()[0])) == m);
        } else {
          ++rejected;
          REQUIRE(r.witness);
        }
      }
    }
  REQUIRE(liftable > 0);
  REQUIRE(rejected > 0);
}
