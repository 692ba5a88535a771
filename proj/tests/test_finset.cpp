#include <catch_amalgamated.hpp>

#include "laxdesc/finset.hpp"
#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;
using finset::FinSetMap;

TEST_CASE("map enumeration and predicates", "[finset]") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      auto maps = finset::all_maps(a, b);
      REQUIRE(maps == oracles::maps_between(a, b));
      for (const auto& f : maps) REQUIRE(finset::is_surjective(f) == oracles::surjective(f));
    }
  REQUIRE_THROWS(finset::make_map(2, 1, {0, 1}));
  REQUIRE(finset::compose(finset::make_map(2, 1, {0, 0}), finset::make_map(1, 2, {1})) == finset::identity_map(1));
}

TEST_CASE("chosen pullbacks have the brute-force size and commute", "[finset]") {
  for (int b = 1; b <= 2; ++b)
    for (int a = 0; a <= 3; ++a)
      for (int c = 0; c <= 2; ++c)
        for (const auto& f : oracles::maps_between(a, b))
          for (const auto& g : oracles::maps_between(c, b)) {
            auto pb = finset::pullback(f, g);
            REQUIRE(pb.apex == oracles::pullback_size(f, g));
            REQUIRE(finset::compose(f, pb.projections[0]) == finset::compose(g, pb.projections[1]));
          }
}

TEST_CASE("limits and colimits of set diagrams", "[finset]") {
  Rng rng(3);
  std::vector<FinCatPtr> shapes = {parallel_pair_category(), span_category(), arrow_category(), discrete_category(2),
                                   preorder_category(3, {{0, 2}, {1, 2}})};
  for (const auto& shape : shapes)
    for (int trial = 0; trial < 12; ++trial) {
      finset::SetDiagram d{shape, {}, {}};
      std::uniform_int_distribution<int> size(0, 2);
      // Try random diagrams until one is functorial.
      for (int attempt = 0; attempt < 50; ++attempt) {
        d.sizes.clear();
        d.maps.clear();
        for (int x = 0; x < shape->object_count(); ++x) d.sizes.push_back(size(rng));
        bool ok = true;
        for (int f = 0; f < shape->morphism_count() && ok; ++f) {
          int s = d.sizes[shape->dom(f)], t = d.sizes[shape->cod(f)];
          std::vector<int> img;
          if (shape->is_identity(f)) {
            for (int v = 0; v < s; ++v) img.push_back(v);
          } else {
            if (s > 0 && t == 0) ok = false;
            for (int v = 0; v < s && ok; ++v) img.push_back(std::uniform_int_distribution<int>(0, t - 1)(rng));
          }
          d.maps.push_back(img);
        }
        if (ok && check_diagram(d).ok()) break;
      }
      if (!check_diagram(d).ok()) continue;
      auto l = finset::limit(d);
      auto c = finset::colimit(d);
      REQUIRE(l.apex == oracles::limit_size(d));
      REQUIRE(c.apex == oracles::colimit_size(d));
      REQUIRE(finset::limit_is_universal(d, l, 2));
      REQUIRE(finset::colimit_is_universal(d, c, 2));
    }
}

TEST_CASE("slice categories are skeletal with the expected number of objects", "[finset]") {
  for (int b = 0; b <= 3; ++b)
    for (int bound = 0; bound <= 3; ++bound) {
      auto s = finset::slice_category(b, bound);
      auto objs = s->objects();
      REQUIRE(static_cast<int>(objs.size()) == oracles::slice_objects(b, bound));
      for (size_t i = 0; i < objs.size(); ++i)
        for (size_t j = i + 1; j < objs.size(); ++j) {
          bool iso = false;
          for (const auto& m : s->hom(objs[i], objs[j])) iso |= s->is_iso(m);
          REQUIRE_FALSE(iso);
        }
    }
}

TEST_CASE("change of base is a functor with invertible coherence", "[finset]") {
  const int bound = 3;
  auto f = finset::make_map(2, 2, {0, 0});
  auto g = finset::make_map(2, 1, {0, 0});
  Fun pull = finset::change_of_base(f, bound);
  auto objs = finset::slice_category(2, bound)->objects();
  REQUIRE(check_functor(pull, objs).ok());
  Nat coh = finset::coherence_iso(f, g, bound);
  auto top = finset::slice_category(1, bound)->objects();
  REQUIRE(check_natural(coh, top).ok());
  REQUIRE(nat_invertible(coh, top));
  REQUIRE(nat_invertible(finset::identity_coherence(2, bound), objs));
}

TEST_CASE("dependent sum is left adjoint to change of base", "[finset]") {
  for (const auto& f : {finset::make_map(2, 1, {0, 0}), finset::make_map(1, 2, {1}), finset::make_map(3, 2, {0, 1, 1})}) {
    auto adj = finset::sigma_adjunction(f, 3);
    auto e = finset::slice_category(f.dom, 3)->objects();
    auto b = finset::slice_category(f.cod, 3)->objects();
    // Restrict to objects whose images stay within the bound.
    std::vector<Obj> left, right;
    for (const auto& x : e)
      if (static_cast<int>(adj.left.obj(x).size()) <= 3) left.push_back(x);
    for (const auto& y : b)
      if (static_cast<int>(adj.right.obj(y).size()) <= 3) right.push_back(y);
    REQUIRE(check_adjunction(adj, left, right).ok());
  }
}

TEST_CASE("the basic indexed category chooses pullbacks with mediating maps", "[finset]") {
  auto ic = finset::basic_indexed_category(4);
  auto u = finset::as_mor(finset::make_map(2, 1, {0, 0}));
  auto pb = ic.pullback(u, u);
  REQUIRE(pb.apex == Obj{4});
  auto id = ic.base->id(u.dom);
  Mor diag = ic.mediate(pb, id, id);
  REQUIRE(ic.base->compose(pb.p1, diag) == id);
  REQUIRE(ic.base->compose(pb.p2, diag) == id);
}
