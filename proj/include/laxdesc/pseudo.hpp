#pragma once

// Pseudofunctors out of the truncated simplex category, precategories,
// composition with indexed categories, and a few indexed categories.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "laxdesc/cat.hpp"
#include "laxdesc/delta3.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/finset.hpp"
#include "laxdesc/indexed.hpp"

namespace laxdesc {

// A : Delta3 -> Cat with a(h, g) : A(h) A(g) => A(hg) and a_x : id => A(id_x).
struct TruncCosimp {
  std::string name;
  std::array<CatPtr, 3> cats;
  std::vector<Fun> on_mor;  // by Delta3 morphism id
  std::map<std::pair<int, int>, Nat> coh;
  std::array<Nat, 3> unit;
  // Objects at which laws are checked; defaults to the bounded enumerations.
  std::array<std::vector<Obj>, 3> test_objects;

  const Fun& at(const std::string& word) const;
  const Nat& cell(const std::string& h, const std::string& g) const;
};

LawReport validate_trunc_cosimp(const TruncCosimp& a);

struct DerivedCells {
  Nat s01;  // A(D1)A(d0) => A(D0)A(d0)
  Nat s02;  // A(D2)A(d0) => A(D0)A(d1)
  Nat s12;  // A(D2)A(d1) => A(D1)A(d1)
  Nat n0;   // A(s0)A(d0) => id
  Nat n1;   // A(s0)A(d1) => id
};
DerivedCells derived_cells(const TruncCosimp& a);

// Constant at one category with identity structure.
TruncCosimp constant_trunc_cosimp(CatPtr x);

struct Monoid {
  int size = 0;
  std::vector<int> table;  // table[x * size + y] = x y
  int unit = 0;
  std::vector<std::string> names;
  int mul(int x, int y) const { return table[x * size + y]; }
};
LawReport validate_monoid(const Monoid& m);
Monoid cyclic_group(int n);
Monoid idempotent_monoid();  // {1, e}, e e = e

// a : Delta3^op -> base. gens[g] : a(cod g) -> a(dom g).
struct Precategory {
  std::string name;
  CatPtr base;
  std::array<Obj, 3> objs;
  std::map<delta3::Gen, Mor> gens;
  Mor at(int delta_id) const;
  Mor at(const std::string& word) const { return at(delta3::delta3().id_of(word)); }
};
LawReport validate_precategory(const Precategory& a);

// Over FinSet: point, m, m x m; D0 (x, y) = x, D1 = x y, D2 = y, s0 the unit.
Precategory sigma_precategory(const Monoid& m);
// Constantly x in the given base.
Precategory discrete_precategory(CatPtr base, const Obj& x);
// Objects, arrows, composable pairs (f then g) of a finite category, in FinSet.
Precategory nerve_precategory(const FinCategory& c);

TruncCosimp compose_indexed_with_precategory(const IndexedCategory& f, const Precategory& a);

// Categories of finite categories: objects encode tables, morphisms encode functors.
Obj encode_category(const FinCategory& c);
FinCatPtr decode_category(const Obj& x);
Mor encode_functor(const FinFunctor& f);
FinFunctor decode_functor(const Mor& m);
class CatOfCats : public Cat {
 public:
  explicit CatOfCats(std::vector<Obj> listed) : listed_(std::move(listed)) {}
  std::vector<Obj> objects() const override { return listed_; }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::string show(const Obj& a) const override;

 private:
  std::vector<Obj> listed_;
};
// Pullback of functors P : A -> C <- B : Q, objects and arrows as matching pairs.
struct CatPullback {
  FinCatPtr apex;
  FinFunctor p1;
  FinFunctor p2;
};
CatPullback pullback_of_categories(const FinFunctor& p, const FinFunctor& q);

// Functors e -> FinSet with values of size <= bound. Objects encode sizes then
// image lists per morphism; morphisms concatenate their components.
class DiagramCat : public Cat {
 public:
  DiagramCat(FinCatPtr shape, int bound) : shape_(std::move(shape)), bound_(bound) {}
  const FinCatPtr& shape() const { return shape_; }
  std::vector<Obj> objects() const override;
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::optional<Mor> inverse(const Mor& f) const override;
  std::string show(const Obj& a) const override;

 private:
  FinCatPtr shape_;
  int bound_;
};
Obj encode_diagram(const finset::SetDiagram& d);
finset::SetDiagram decode_diagram(const FinCatPtr& shape, const Obj& x);
// Per-object components of a diagram morphism.
std::vector<finset::FinSetMap> diagram_components(const FinCatPtr& shape, const Mor& m);

Fun precomposition(const FinFunctor& p, int bound);
LazyAdjunction left_kan_adjunction(const FinFunctor& p, int bound);
IndexedCategory diagram_indexed_category(int bound, std::vector<Obj> listed = {});

// X^n with componentwise structure.
class PowerCat : public Cat {
 public:
  PowerCat(FinCatPtr x, int n) : x_(std::move(x)), n_(n) {}
  std::vector<Obj> objects() const override;
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::optional<Mor> inverse(const Mor& f) const override;
  std::string show(const Obj& a) const override;

 private:
  FinCatPtr x_;
  int n_;
};
// n |-> X^n, f |-> precomposition with f; strict.
IndexedCategory power_indexed_category(FinCatPtr x, int bound);

// Transport along chosen isomorphisms theta_g : A(g) => A'(g). choose(g, x)
// returns an isomorphism out of A(g)(x); A'(g)(x) is its codomain.
using IsoChoice = std::function<Mor(int delta_id, const Obj& x)>;
TruncCosimp twist(const TruncCosimp& a, IsoChoice choose);
// Random choices among isomorphisms, deterministic in (seed, g, x).
IsoChoice random_iso_choice(const TruncCosimp& a, std::uint64_t seed);

}  // namespace laxdesc
