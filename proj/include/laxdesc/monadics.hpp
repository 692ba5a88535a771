#pragma once

// Monads, Eilenberg-Moore categories, comparison functors, monadicity,
// Beck-Chevalley squares and the comparison with descent factorizations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laxdesc/cat.hpp"
#include "laxdesc/descent.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/finset.hpp"
#include "laxdesc/indexed.hpp"
#include "laxdesc/laxdescent.hpp"
#include "laxdesc/pseudo.hpp"

namespace laxdesc {

struct Monad {
  CatPtr base;
  Fun t;
  Nat eta;  // id => T
  Nat mu;   // T T => T
};
// T = R L, eta the unit, mu = R counit L.
Monad monad_from_adjunction(const LazyAdjunction& adj);
LawReport check_monad(const Monad& m, const std::vector<Obj>& objs);
// m x - on Set/1, pairs (i, x) ranked i * |m| + x, mu ((i, x), y) = (i, x y).
Monad product_monad(const Monoid& m, int bound);

struct EMCategory {
  std::shared_ptr<const StructCat> cat;
  std::vector<Obj> objects;
  Fun forget;
  Fun free;  // w |-> (T w, mu_w)
};
bool is_algebra(const Monad& m, const Obj& w, const Mor& rho);
std::vector<Mor> algebra_structures(const Monad& m, const Obj& w);
EMCategory em_category(const Monad& m, const std::vector<Obj>& carriers);
// y |-> (R y, R counit_y)
Fun comparison_functor(const LazyAdjunction& adj, const EMCategory& em);

struct MonadicityReport {
  bool has_left_adjoint = false;
  bool comparison_equivalence = false;  // oracle (a)
  bool conservative = false;
  bool split_pairs_ok = false;
  bool creates_split = false;  // oracle (b)
  size_t split_pairs = 0;
  std::string witness;
  bool agree() const { return comparison_equivalence == creates_split; }
  bool monadic() const { return has_left_adjoint && comparison_equivalence && creates_split; }
};
// g : A -> B with adjunction L -| g; src_objs list A, tgt_objs list B.
MonadicityReport is_monadic(const Fun& g, const LazyAdjunction& adj, const std::vector<Obj>& src_objs,
                            const std::vector<Obj>& tgt_objs);
// Finite categories: the left adjoint is searched for.
MonadicityReport is_monadic(const FinFunctor& g);

// Square u : A -> B <- C : v with chosen pullback (p1 to A, p2 to C). The
// mate F(p1)! F(p2) => F(u) F(v)! evaluated on objects of F(C).
struct BCReport {
  bool holds = true;
  bool adjoints_available = true;
  size_t checked = 0;
  std::optional<Obj> witness;
  std::string detail;
};
Nat beck_chevalley_mate(const IndexedCategory& f, const Mor& u, const Mor& v);
BCReport beck_chevalley(const IndexedCategory& f, const Mor& u, const Mor& v, const std::vector<Obj>& objs);
// The kernel-pair square of p.
BCReport beck_chevalley(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& objs);

// A bijection between listed objects of two structured categories over the
// same base preserving carriers and hom sets exactly; an isomorphism of the
// listed full subcategories.
std::optional<std::map<Obj, Obj>> find_carrier_isomorphism(const StructCat& a, const std::vector<Obj>& a_objs,
                                                           const StructCat& b, const std::vector<Obj>& b_objs);

struct BRReport {
  BCReport bc;
  size_t descent_objects = 0;
  size_t algebras = 0;
  bool found = false;               // isomorphism E from descent data to algebras over carriers
  bool forget_commutes = false;     // U^T E = d strictly
  bool comparison_commutes = false; // E K_p isomorphic to K^T
  std::string witness;
  bool ok() const { return found && forget_commutes && comparison_commutes; }
};
BRReport benabou_roubaud_compare(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers,
                                 const std::vector<Obj>& base_objs);

}  // namespace laxdesc
