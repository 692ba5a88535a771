#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laxdesc/cat.hpp"

namespace laxdesc {

// A finite category given by tables. Morphism ids are dense; composition is
// stored only for composable pairs. As a Cat, objects are {i} and morphisms
// carry their id in data[0].
class FinCategory : public Cat {
 public:
  FinCategory() = default;
  FinCategory(int objects, std::vector<int> dom, std::vector<int> cod, std::vector<int> identity);

  void set_comp(int g, int f, int h);
  void fill_identity_laws();
  // Computes the inverse table; call once all composites are set.
  void finalize();

  int object_count() const { return n_; }
  int morphism_count() const { return static_cast<int>(dom_.size()); }
  int dom(int f) const { return dom_.at(f); }
  int cod(int f) const { return cod_.at(f); }
  int identity(int x) const { return id_.at(x); }
  bool is_identity(int f) const { return id_.at(dom_.at(f)) == f; }
  int comp(int g, int f) const;  // -1 when the entry is unset
  const std::vector<int>& hom_ids(int a, int b) const { return hom_.at(a * n_ + b); }
  const std::vector<int>& out(int a) const { return out_.at(a); }
  int inverse_id(int f) const { return inv_.at(f); }  // -1 when not invertible

  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::string obj_name(int x) const;
  std::string mor_name(int f) const;

  std::vector<Obj> objects() const override;
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::string show(const Obj& a) const override;
  std::string show(const Mor& m) const override;
  std::optional<Mor> inverse(const Mor& f) const override;

  Mor as_mor(int f) const { return Mor{{dom_[f]}, {cod_[f]}, {f}}; }

 private:
  int n_ = 0;
  std::vector<int> dom_, cod_, id_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_out_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> inv_;
};
using FinCatPtr = std::shared_ptr<const FinCategory>;

struct FinFunctor {
  FinCatPtr src;
  FinCatPtr tgt;
  std::vector<int> obj;
  std::vector<int> mor;
  friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
    return a.obj == b.obj && a.mor == b.mor;
  }
};

struct NatTrans {
  FinFunctor src;
  FinFunctor tgt;
  std::vector<int> comp;
  friend bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.src == b.src && a.tgt == b.tgt && a.comp == b.comp;
  }
};

struct Adjunction {
  FinFunctor left;
  FinFunctor right;
  NatTrans unit;    // id => right . left
  NatTrans counit;  // left . right => id
};

enum class Mode { vertical, horizontal };

struct EquivalenceReport {
  bool faithful = true;
  bool full = true;
  bool essentially_surjective = true;
  std::string witness;
  bool equivalence() const { return faithful && full && essentially_surjective; }
};

LawReport validate_category(const FinCategory& c);
LawReport check_functor(const FinFunctor& f);
LawReport check_natural(const NatTrans& a);
LawReport check_adjunction(const Adjunction& adj);

FinFunctor identity_functor(FinCatPtr c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);  // g . f
NatTrans identity_nat(const FinFunctor& f);
NatTrans compose2(const NatTrans& b, const NatTrans& a, Mode mode);
NatTrans whisker_left(const FinFunctor& g, const NatTrans& a);
NatTrans whisker_right(const NatTrans& a, const FinFunctor& f);
bool is_invertible(const NatTrans& a);
std::optional<NatTrans> inverse(const NatTrans& a);

std::optional<NatTrans> find_natural_iso(const FinFunctor& f, const FinFunctor& g);
EquivalenceReport check_equivalence(const FinFunctor& f);
std::optional<Adjunction> find_left_adjoint(const FinFunctor& g);
bool is_conservative(const FinFunctor& g);

// Exhaustive enumerations in lexicographic order of the tables.
std::vector<FinFunctor> enumerate_functors(FinCatPtr src, FinCatPtr tgt, size_t limit = SIZE_MAX);
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g, size_t limit = SIZE_MAX);

// Value-level versions restricted to listed objects.
EquivalenceReport check_equivalence(const Fun& f, const std::vector<Obj>& src_objs, const std::vector<Obj>& tgt_objs);
std::optional<Nat> find_natural_iso(const Fun& f, const Fun& g, const std::vector<Obj>& objs);
bool is_conservative(const Fun& g, const std::vector<Obj>& objs, std::string* witness = nullptr);

FinCatPtr opposite(const FinCategory& c);
FinFunctor opposite(const FinFunctor& f, FinCatPtr src_op, FinCatPtr tgt_op);

// Small builders used across modules.
FinCatPtr terminal_category();
FinCatPtr discrete_category(int n);
FinCatPtr arrow_category();  // two objects, one non-identity arrow 0 -> 1
FinCatPtr monoid_category(int size, const std::vector<int>& table, int unit);
FinFunctor constant_functor(FinCatPtr src, FinCatPtr tgt, int x);
FinFunctor functor_to_terminal(FinCatPtr src);

// Tables materialized from a value-level category.
struct Materialized {
  CatPtr source;
  FinCatPtr cat;
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  std::map<Obj, int> obj_index;
  std::map<Mor, int> mor_index;
  int index(const Obj& x) const;
  int index(const Mor& m) const;
  std::optional<int> find(const Obj& x) const;
};

Materialized materialize(CatPtr c);
Materialized materialize(CatPtr c, const std::vector<Obj>& objs);
FinFunctor materialize(const Fun& f, const Materialized& s, const Materialized& t);
NatTrans materialize(const Nat& a, const FinFunctor& f, const FinFunctor& g, const Materialized& s,
                     const Materialized& t);
Fun lazy(const FinFunctor& f);
Nat lazy(const NatTrans& a);
LazyAdjunction lazy(const Adjunction& adj);

}  // namespace laxdesc
