#include <catch_amalgamated.hpp>

#include "laxdesc/kan.hpp"
#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;

namespace {

bool iso_in_preorder(const FinCategory& p, int x, int y) { return oracles::leq(p, x, y) && oracles::leq(p, y, x); }

// Objects s with b <= H s (right) or H s <= b (left).
std::vector<int> comma_family(const FinFunctor& j, const FinFunctor& h, int b, bool right) {
  std::vector<int> fam;
  for (int s = 0; s < h.src->object_count(); ++s)
    if (right ? !h.tgt->hom_ids(b, h.obj[s]).empty() : !h.tgt->hom_ids(h.obj[s], b).empty()) fam.push_back(j.obj[s]);
  return fam;
}

}  // namespace

TEST_CASE("Kan extensions into preorders are meets and joins over commas", "[kan]") {
  Rng rng(5);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto target = random_preorder(std::uniform_int_distribution<int>(2, 4)(rng), rng);
    auto shape = shape_catalog()[std::uniform_int_distribution<size_t>(0, 5)(rng)].cat;
    auto b = category_catalog()[std::uniform_int_distribution<size_t>(0, 2)(rng)].cat;
    auto j = random_functor(shape, target, rng);
    auto h = random_functor(shape, b, rng);
    if (!j || !h) continue;
    for (bool right : {true, false}) {
      KanExtension ke = right ? right_kan(*j, *h) : left_kan(*j, *h);
      bool all = true;
      for (int x = 0; x < b->object_count(); ++x) {
        auto fam = comma_family(*j, *h, x, right);
        auto expected = right ? oracles::greatest_lower_bound(*target, fam) : oracles::least_upper_bound(*target, fam);
        if (!expected) {
          all = false;
          continue;
        }
        if (ke.exists) REQUIRE(iso_in_preorder(*target, ke.value.obj[x], *expected));
      }
      REQUIRE(ke.exists == all);
      if (ke.exists) {
        REQUIRE(check_functor(ke.value).ok());
        REQUIRE(check_natural(ke.universal).ok());
        REQUIRE(check_kan_universal(ke, 200));
      }
      ++compared;
    }
  }
  REQUIRE(compared > 50);
}

TEST_CASE("limits found by cone search are limits", "[kan]") {
  auto c = preorder_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  FinFunctor d{discrete_category(2), c, {1, 2}, {}};
  d.mor = {c->identity(1), c->identity(2)};
  auto lim = find_limit(d);
  REQUIRE(lim);
  REQUIRE(lim->apex == 0);
  REQUIRE(is_limit_cone(d, *lim));
  auto colim = find_colimit(d);
  REQUIRE(colim);
  REQUIRE(colim->apex == 3);
  REQUIRE(is_colimit_cocone(d, *colim));
  FinFunctor pair{discrete_category(2), discrete_category(2), {0, 1}, {0, 1}};
  REQUIRE_FALSE(find_limit(pair));
}

TEST_CASE("factoring through a right Kan extension", "[kan]") {
  auto c = chain_category(3);
  auto shape = discrete_category(2);
  FinFunctor j{shape, c, {1, 2}, {c->identity(1), c->identity(2)}};
  auto h = functor_to_terminal(shape);
  KanExtension ke = right_kan(j, h);
  REQUIRE(ke.exists);
  REQUIRE(ke.value.obj[0] == 1);
  FinFunctor q = constant_functor(h.tgt, c, 0);
  NatTrans alpha{compose(q, h), j, {c->hom_ids(0, 1)[0], c->hom_ids(0, 2)[0]}};
  auto beta = factor_through_kan(ke, q, alpha);
  REQUIRE(beta);
  REQUIRE(beta->comp[0] == c->hom_ids(0, 1)[0]);
}

TEST_CASE("preservation and creation", "[kan]") {
  auto arrow = arrow_category();
  auto shape = discrete_category(2);
  FinFunctor j{shape, arrow, {0, 1}, {arrow->identity(0), arrow->identity(1)}};
  auto h = functor_to_terminal(shape);
  KanExtension ke = right_kan(j, h);
  REQUIRE(ke.exists);
  REQUIRE(preserves(identity_functor(arrow), ke));
  // Collapsing the arrow sends the product 0 to a point, still a product there.
  REQUIRE(preserves(functor_to_terminal(arrow), ke));
  auto cr = creates(identity_functor(arrow), j, h, KanDirection::right);
  REQUIRE(cr.creates());
}

TEST_CASE("set-valued left Kan extensions have the brute-force colimit sizes", "[kan]") {
  for (const auto& s : shape_catalog()) {
    for (int size = 0; size <= 2; ++size) {
      finset::SetDiagram d{s.cat, std::vector<int>(s.cat->object_count(), size), {}};
      for (int f = 0; f < s.cat->morphism_count(); ++f) {
        std::vector<int> img(size);
        std::iota(img.begin(), img.end(), 0);
        d.maps.push_back(img);
      }
      auto h = functor_to_terminal(s.cat);
      SetKan lan = set_left_kan(d, h);
      REQUIRE(lan.value.sizes[0] == oracles::colimit_size(d));
      SetKan ran = set_right_kan(d, h);
      REQUIRE(ran.value.sizes[0] == oracles::limit_size(d));
    }
  }
}

TEST_CASE("left Kan extensions along the projections of 1+1 over 1", "[kan]") {
  auto two = discrete_category(2);
  auto h = functor_to_terminal(two);
  auto pb = pullback_of_categories(h, h);
  finset::SetDiagram f{two, {0, 1}, {{}, {0}}};
  auto along = [&](const FinFunctor& p, const FinFunctor& q) {
    finset::SetDiagram fq{pb.apex, {}, {}};
    for (int x = 0; x < pb.apex->object_count(); ++x) fq.sizes.push_back(f.sizes[q.obj[x]]);
    for (int m = 0; m < pb.apex->morphism_count(); ++m) fq.maps.push_back(f.maps[q.mor[m]]);
    return set_left_kan(fq, p).value.sizes;
  };
  SECTION("along the projection it was pulled back by") {
    REQUIRE(along(pb.p1, pb.p1) == std::vector<int>{0, 2});
  }
  SECTION("along the other projection") {
    REQUIRE(along(pb.p1, pb.p2) == std::vector<int>{1, 1});
  }
  SECTION("extension along h followed by restriction") {
    auto lan = set_left_kan(f, h).value;
    REQUIRE(std::vector<int>{lan.sizes[0], lan.sizes[0]} == std::vector<int>{1, 1});
  }
}

TEST_CASE("split forks", "[kan]") {
  // Idempotent e on x splits through y: r : x -> y, i : y -> x, r i = id, i r = e.
  auto c = std::make_shared<FinCategory>(2, std::vector<int>{0, 1, 0, 0, 1}, std::vector<int>{0, 1, 0, 1, 0},
                                         std::vector<int>{0, 1});
  // 2 = e, 3 = r, 4 = i
  c->set_comp(2, 2, 2);
  c->set_comp(3, 2, 3);
  c->set_comp(2, 4, 4);
  c->set_comp(3, 4, 1);
  c->set_comp(4, 3, 2);
  c->fill_identity_laws();
  c->finalize();
  REQUIRE(validate_category(*c).ok());
  auto objs = c->objects();
  auto fork = find_split_coequalizer(*c, objs, c->as_mor(0), c->as_mor(2));
  REQUIRE(fork);
  REQUIRE(is_split_fork(*c, *fork));
  REQUIRE(fork->q == c->as_mor(3));
  REQUIRE(is_coequalizer(*c, objs, c->as_mor(0), c->as_mor(2), c->as_mor(3)));
  // The trivial fork f = f.
  REQUIRE(find_split_coequalizer(*c, objs, c->as_mor(3), c->as_mor(3)));
  REQUIRE_FALSE(enumerate_split_forks(*c, objs).empty());
}
