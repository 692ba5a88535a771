#pragma once

// Instance-level verification of the creation, monadicity and effective
// descent results, with random instance generators.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "laxdesc/descent.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/kan.hpp"
#include "laxdesc/laxdescent.hpp"
#include "laxdesc/monadics.hpp"
#include "laxdesc/pseudo.hpp"

namespace laxdesc {

using Rng = std::mt19937_64;

// Small categories.
FinCatPtr preorder_category(int n, const std::vector<std::pair<int, int>>& relations);  // reflexive transitive closure
FinCatPtr chain_category(int n);
// Non-identity arrows given as (dom, cod); no two of them may be composable.
FinCatPtr graph_category(int n, const std::vector<std::pair<int, int>>& arrows);
FinCatPtr parallel_pair_category();
FinCatPtr span_category();  // 2 -> 0, 2 -> 1

struct Coproduct {
  FinCatPtr cat;
  FinFunctor left;
  FinFunctor right;
};
Coproduct coproduct_category(const FinCatPtr& a, const FinCatPtr& b);

// Objects s with hom(s, t) = hom_Y(pi s, pi t); pi must be surjective.
struct Inflation {
  FinCatPtr cat;
  FinFunctor proj;     // to Y, an equivalence
  FinFunctor section;  // Y -> inflation, proj . section = id
};
Inflation inflate_category(const FinCatPtr& y, const std::vector<int>& pi);

struct NamedCategory {
  std::string name;
  FinCatPtr cat;
};
std::vector<NamedCategory> category_catalog();
std::vector<NamedCategory> shape_catalog();
std::optional<FinFunctor> random_functor(const FinCatPtr& src, const FinCatPtr& tgt, Rng& rng, size_t cap = 200);
FinCatPtr random_preorder(int n, Rng& rng);

// Tables of A(1), A(2), A(3), the lax descent category and its structure.
struct DescentTables {
  TruncCosimp a;
  DerivedCells cells;
  LaxDescent ld;
  std::array<Materialized, 3> cats;
  Materialized l;
  FinFunctor forget;  // L -> A(1)
  FinFunctor d0, d1;  // A(1) -> A(2)
  FinFunctor outer0;  // A(D0) A(d0) : A(1) -> A(3)
  FinFunctor outer1;  // A(D2) A(d1)
  NatTrans psi;       // d1 . forget => d0 . forget
};
DescentTables tabulate_descent(const TruncCosimp& a);

struct MainTheoremReport {
  KanDirection direction = KanDirection::right;
  bool ran_exists = false;
  bool preserved_first = false;   // by A(d0), or A(d1) on the left
  bool preserved_second = false;  // by A(D0)A(d0), or A(D2)A(d1) on the left
  bool phi_found = false;
  bool phi_is_datum = false;
  bool lifted = false;
  bool oracle_exists = false;
  bool oracle_agreement = false;
  bool preserved_by_forget = false;
  bool reflects = false;
  std::optional<NatTrans> phi;
  std::optional<FinFunctor> j_check;
  std::optional<NatTrans> nu_tilde;
  std::string witness;
  bool hypotheses() const { return ran_exists && preserved_first && preserved_second; }
  bool created() const {
    return phi_is_datum && lifted && oracle_agreement && preserved_by_forget && reflects;
  }
  bool counterexample() const { return hypotheses() && !created(); }
};
// j : S -> L (ids of t.l), h : S -> B.
MainTheoremReport verify_main_theorem(const DescentTables& t, const FinFunctor& j, const FinFunctor& h,
                                      KanDirection dir);
MainTheoremReport verify_main_theorem_right(const DescentTables& t, const FinFunctor& j, const FinFunctor& h);
MainTheoremReport verify_main_theorem_left(const DescentTables& t, const FinFunctor& j, const FinFunctor& h);

// Random truncated pseudocosimplicial categories X^{a(-)}, optionally twisted.
struct RandomCosimp {
  std::string description;
  TruncCosimp a;
};
RandomCosimp random_cosimp(Rng& rng);

struct SuiteSummary {
  size_t instances = 0;
  size_t vacuous = 0;
  size_t verified = 0;
  size_t counterexamples = 0;
  std::string first_counterexample;
};
// Draws instances until `target` non-vacuous ones or `max_instances` in total.
SuiteSummary run_main_theorem_suite(std::uint64_t seed, size_t target, KanDirection dir, size_t max_instances);

// Split forks downstairs whose legs come from L: coequalizer created.
struct AbsoluteReport {
  size_t split_pairs = 0;
  size_t created = 0;
  std::string witness;
  bool ok() const { return created == split_pairs; }
};
AbsoluteReport verify_absolute_creation(const DescentTables& t);

// G = forget . E for an equivalence E into L.
struct MonadicityTheoremReport {
  bool has_left_adjoint = false;
  MonadicityReport report;
  bool ok() const { return has_left_adjoint && report.monadic() && report.agree(); }
};
MonadicityTheoremReport verify_monadicity_theorem(const DescentTables& t, const FinFunctor& e);
SuiteSummary run_monadicity_suite(std::uint64_t seed, size_t target, size_t max_instances);

// Effectiveness against equivalence of the reindexing functor.
struct IffSummary {
  size_t instances = 0;
  size_t effective = 0;
  size_t counterexamples = 0;
  std::string first_counterexample;
};
// Base {t, b}, p : t -> b, q : b -> t, q p = id.
TableIndexed terminal_domain_instance(Rng& rng, std::string* description = nullptr);
// Base 2 = {0 -> 1}.
TableIndexed arrow_base_instance(Rng& rng, std::string* description = nullptr);
IffSummary run_terminal_domain_suite(std::uint64_t seed, size_t count);
IffSummary run_arrow_base_suite(std::uint64_t seed, size_t count);

// (Set/-) composed with the precategory of a monoid.
TruncCosimp sigma_cosimp(const Monoid& m, int bound);

}  // namespace laxdesc
