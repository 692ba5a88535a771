#pragma once

// Finite sets [n] = {0,...,n-1}, chosen limits and colimits, bounded slices,
// change of base and the basic indexed category.

#include <vector>

#include "laxdesc/cat.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/indexed.hpp"

namespace laxdesc::finset {

struct FinSetMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> img;
  friend bool operator==(const FinSetMap&, const FinSetMap&) = default;
};

FinSetMap make_map(int dom, int cod, std::vector<int> img);  // validates
FinSetMap identity_map(int n);
FinSetMap compose(const FinSetMap& g, const FinSetMap& f);  // g . f
bool is_surjective(const FinSetMap& f);
bool is_injective(const FinSetMap& f);
std::vector<FinSetMap> all_maps(int dom, int cod);

struct ChosenLimit {
  int apex = 0;
  std::vector<FinSetMap> projections;
  std::vector<std::vector<int>> tuples;  // element k of the apex
};

struct ChosenColimit {
  int apex = 0;
  std::vector<FinSetMap> injections;
  std::vector<int> representatives;  // least representative of each class, in the disjoint union
};

// Pairs (x, y) with f(x) = g(y), ranked lexicographically.
ChosenLimit pullback(const FinSetMap& f, const FinSetMap& g);

// A diagram of finite sets indexed by a finite category: sizes per object and
// an image list per morphism.
struct SetDiagram {
  FinCatPtr shape;
  std::vector<int> sizes;
  std::vector<std::vector<int>> maps;
};
LawReport check_diagram(const SetDiagram& d);
ChosenLimit limit(const SetDiagram& d);
ChosenColimit colimit(const SetDiagram& d);
// Exhaustive universality over competing cones with apex size <= max_apex.
bool limit_is_universal(const SetDiagram& d, const ChosenLimit& l, int max_apex);
bool colimit_is_universal(const SetDiagram& d, const ChosenColimit& c, int max_apex);

// The base category FinSet, objects {n} for n <= bound; morphisms carry image lists.
class FinSetCat : public Cat {
 public:
  explicit FinSetCat(int bound) : bound_(bound) {}
  std::vector<Obj> objects() const override;
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::optional<Mor> inverse(const Mor& f) const override;
  std::string show(const Obj& a) const override;

 private:
  int bound_;
};
Mor as_mor(const FinSetMap& f);
FinSetMap as_map(const Mor& m);

// Set/b restricted to slice objects of total size <= bound. An object is its
// leg (image list into [b]); the enumeration lists sorted legs, one per
// isomorphism class. Operations accept arbitrary legs.
class SliceCat : public Cat {
 public:
  SliceCat(int base, int bound) : base_(base), bound_(bound) {}
  int base() const { return base_; }
  int bound() const { return bound_; }
  std::vector<Obj> objects() const override;
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::optional<Mor> inverse(const Mor& f) const override;
  std::string show(const Obj& a) const override;

 private:
  int base_;
  int bound_;
};

CatPtr slice_category(int b, int bound);
Materialized slice_fincategory(int b, int bound);
Fun change_of_base(const FinSetMap& f, int bound);
// f : x -> y, g : y -> z; the canonical f* g* => (g f)*.
Nat coherence_iso(const FinSetMap& f, const FinSetMap& g, int bound);
// id => (id_x)*
Nat identity_coherence(int x, int bound);
Fun postcompose(const FinSetMap& f, int bound);
LazyAdjunction sigma_adjunction(const FinSetMap& f, int bound);

IndexedCategory basic_indexed_category(int bound);

}  // namespace laxdesc::finset
