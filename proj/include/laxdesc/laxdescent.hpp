#pragma once

// Lax descent categories of truncated pseudocosimplicial categories, the
// forgetful functor with its universal 2-cell, and both factorizations.

#include <optional>
#include <string>
#include <vector>

#include "laxdesc/cat.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/pseudo.hpp"

namespace laxdesc {

// An object of a base category equipped with a structure morphism, encoded as
// one Obj: [|w|, w..., |dom|, dom..., |cod|, cod..., data...].
struct Structured {
  Obj carrier;
  Mor structure;
};
Obj encode_structured(const Structured& s);
Structured decode_structured(const Obj& x);

// Structured objects over a base category; morphisms are base morphisms
// between carriers accepted by the predicate. The listed objects are the
// enumeration; other encodings are accepted by the operations.
class StructCat : public Cat {
 public:
  using Pred = std::function<bool(const Structured&, const Structured&, const Mor&)>;
  StructCat(CatPtr base, CatPtr structure_cat, std::vector<Obj> objs, Pred pred)
      : base_(std::move(base)), structure_cat_(std::move(structure_cat)), objs_(std::move(objs)), pred_(std::move(pred)) {}
  const CatPtr& base() const { return base_; }
  bool accepts(const Obj& a, const Obj& b, const Mor& underlying) const;
  // The morphism a -> b over the given base morphism.
  Mor lift(const Obj& a, const Obj& b, const Mor& underlying) const { return Mor{a, b, underlying.data}; }
  Mor underlying(const Mor& m) const;

  std::vector<Obj> objects() const override { return objs_; }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const override;
  Mor id(const Obj& a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  std::optional<Mor> inverse(const Mor& f) const override;
  std::string show(const Obj& a) const override;

 private:
  CatPtr base_;
  CatPtr structure_cat_;
  std::vector<Obj> objs_;
  Pred pred_;
};

// Null when (w, phi) is a descent datum; otherwise the failing equation.
std::optional<std::string> descent_datum_failure(const TruncCosimp& a, const DerivedCells& cells, const Obj& w,
                                                 const Mor& phi);
bool is_descent_datum(const TruncCosimp& a, const DerivedCells& cells, const Obj& w, const Mor& phi);
bool is_descent_datum(const TruncCosimp& a, const Obj& w, const Mor& phi);
// A(d0)(m) . phi = phi' . A(d1)(m)
bool is_descent_morphism(const TruncCosimp& a, const Structured& x, const Structured& y, const Mor& m);

// Every phi : A(d1) w -> A(d0) w that is a descent datum, in hom order.
std::vector<Mor> descent_data(const TruncCosimp& a, const DerivedCells& cells, const Obj& w);

struct LaxDescent {
  std::shared_ptr<const StructCat> cat;
  std::vector<Obj> objects;
  Fun forget;  // d^A into A(1)
  Nat psi;     // A(d1) d^A => A(d0) d^A
  Structured object(const Obj& x) const { return decode_structured(x); }
};

// Objects are all descent data over the listed carriers in A(1).
LaxDescent build_lax_descent(const TruncCosimp& a, const std::vector<Obj>& carriers);

// Pointwise form of the descent associativity and identity for (d, psi).
LawReport check_universal_pair(const TruncCosimp& a, const Fun& d, const Nat& psi, const std::vector<Obj>& objs);

struct FactorResult {
  std::optional<Fun> value;
  std::optional<Obj> witness;
  std::string reason;
};
// F into A(1) with beta : A(d1) F => A(d0) F; the induced functor into the
// lax descent category.
FactorResult factor_functor(const TruncCosimp& a, const LaxDescent& ld, const Fun& f, const Nat& beta,
                            const std::vector<Obj>& objs);

struct Factor2Result {
  std::optional<Nat> value;
  std::optional<Obj> witness;
};
// xi : d^A F1 => d^A F0 lifted to F1 => F0.
Factor2Result factor_2cell(const TruncCosimp& a, const LaxDescent& ld, const Fun& f1, const Fun& f0, const Nat& xi,
                           const std::vector<Obj>& objs);

}  // namespace laxdesc
