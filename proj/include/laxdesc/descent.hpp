#pragma once

// Kernel-pair groupoids, internal actions, the descent factorization of F(p)
// and effective descent checks.

#include <optional>
#include <string>
#include <vector>

#include "laxdesc/fincat.hpp"
#include "laxdesc/finset.hpp"
#include "laxdesc/indexed.hpp"
#include "laxdesc/laxdescent.hpp"
#include "laxdesc/pseudo.hpp"

namespace laxdesc {

// Eq(p) from the chosen pullbacks of the indexed category's base.
// a(d1) = first projection, a(d0) = second, a(s0) the diagonal; on triples
// D2 = (x, y), D0 = (y, z), D1 = (x, z).
Precategory eq_groupoid(const IndexedCategory& f, const Mor& p);
Precategory eq_groupoid(const finset::FinSetMap& p);

// The precategory constantly a(1).
Precategory underlying_discrete(const Precategory& a);

struct InternalActions {
  TruncCosimp cosimp;
  LaxDescent descent;
};
InternalActions internal_actions(const IndexedCategory& f, const Precategory& a, const std::vector<Obj>& carriers);

struct DescentFactorization {
  Precategory eq;
  TruncCosimp fp;
  LaxDescent descent;
  Fun fp_functor;  // F(p)
  Nat datum;       // F^p(d1) F(p) => F^p(d0) F(p)
  bool datum_ok = false;
  std::optional<Fun> kp;
  bool composite_check = false;  // forget . K_p = F(p) on the listed objects
  std::string witness;
};
// carriers: objects of F(e) for the lax descent category; base_objs: objects of F(b).
DescentFactorization descent_factorization(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers,
                                           const std::vector<Obj>& base_objs);

struct EffectivenessReport {
  bool datum_ok = false;
  bool composite_ok = false;
  EquivalenceReport equivalence;
  size_t descent_objects = 0;
  bool effective() const { return datum_ok && composite_ok && equivalence.equivalence(); }
};
EffectivenessReport is_effective_descent(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers,
                                         const std::vector<Obj>& base_objs);
// Basic indexed category at bound: carriers are slices over e of size <= bound
// and the domain of K_p is {v : |v| <= bound, |p* v| <= bound}, which decides
// essential surjectivity exactly.
EffectivenessReport is_effective_descent_slices(const finset::FinSetMap& p, int bound);

// Indexed categories given by finite tables over a finite base, strictly functorial.
// reindex[u] : fibers[cod u] -> fibers[dom u]. Pullbacks are found by cone search.
struct TableIndexed {
  FinCatPtr base;
  std::vector<FinCatPtr> fibers;
  std::vector<FinFunctor> reindex;
};
LawReport validate_table_indexed(const TableIndexed& t);
IndexedCategory table_indexed_category(const TableIndexed& t);
// Effectiveness of p (a morphism id of the base) with exact finite enumerations.
EffectivenessReport is_effective_descent(const TableIndexed& t, int p);

}  // namespace laxdesc
