#pragma once

// Pointwise Kan extensions between finite categories, conical limits by
// terminal-cone search, set-valued Kan extensions, and split forks.

#include <optional>
#include <string>
#include <vector>

#include "laxdesc/cat.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/finset.hpp"

namespace laxdesc {

struct CommaCategory {
  FinCatPtr cat;
  std::vector<std::pair<int, int>> objs;  // (s, f)
  std::vector<int> arrows;                // underlying morphism of the source per comma morphism
  FinFunctor proj;
  int index(int s, int f) const;
};
CommaCategory under_comma(int b, const FinFunctor& h);  // objects (s, f : b -> H s)
CommaCategory over_comma(const FinFunctor& h, int b);   // objects (s, f : H s -> b)

struct Cone {
  int apex = -1;
  std::vector<int> legs;
};
std::vector<std::vector<int>> cones_at(const FinFunctor& d, int apex);
bool is_limit_cone(const FinFunctor& d, const Cone& c);
// Least apex, then least legs.
std::optional<Cone> find_limit(const FinFunctor& d);
// Legs run d(i) -> apex.
bool is_colimit_cocone(const FinFunctor& d, const Cone& c);
std::optional<Cone> find_colimit(const FinFunctor& d);

enum class KanDirection { right, left };

struct KanExtension {
  KanDirection direction = KanDirection::right;
  FinFunctor along;
  FinFunctor of;
  bool exists = false;
  std::optional<int> failure_witness;  // object of the target of along
  FinFunctor value;
  // right: value . along => of; left: of => value . along
  NatTrans universal;
};

KanExtension right_kan(const FinFunctor& j, const FinFunctor& h);
// Computed as the right Kan extension between opposite categories.
KanExtension left_kan(const FinFunctor& j, const FinFunctor& h);

// right: alpha : q . along => of, returns the unique beta : q => value with
// universal . (beta * along) = alpha. left: alpha : of => q . along, returns
// beta : value => q with (beta * along) . universal = alpha.
std::optional<NatTrans> factor_through_kan(const KanExtension& ke, const FinFunctor& q, const NatTrans& alpha);

// The bijection of 2-cells for every functor into the codomain, up to a cap.
bool check_kan_universal(const KanExtension& ke, size_t max_functors);

bool preserves(const FinFunctor& g, const KanExtension& ke);

struct CreationReport {
  bool exists = false;
  bool preserved = false;
  bool reflects = true;
  std::string witness;
  bool creates() const { return exists && preserved && reflects; }
};
// g : A -> C, j0 : S -> A, h : S -> B. Reflection is checked pointwise over
// every cone (cocone) upstairs whose image is universal.
CreationReport creates(const FinFunctor& g, const FinFunctor& j0, const FinFunctor& h, KanDirection dir);

// Split forks f, g : X -> Y, q : Y -> Z with q f = q g, q s = id, f t = id, g t = s q.
struct SplitFork {
  Mor f, g, q, s, t;
};
bool is_split_fork(const Cat& c, const SplitFork& k);
std::optional<SplitFork> find_split_coequalizer(const Cat& c, const std::vector<Obj>& objs, const Mor& f,
                                                const Mor& g);
std::vector<SplitFork> enumerate_split_forks(const Cat& c, const std::vector<Obj>& objs, size_t limit = SIZE_MAX);
// Coequalizer among the listed objects, universal with respect to them.
std::optional<Mor> find_coequalizer(const Cat& c, const std::vector<Obj>& objs, const Mor& f, const Mor& g);
bool is_coequalizer(const Cat& c, const std::vector<Obj>& objs, const Mor& f, const Mor& g, const Mor& q);

// Kan extensions of finite-set valued functors along h, by (co)limits over commas.
struct SetKan {
  finset::SetDiagram value;
  std::vector<CommaCategory> commas;
  // left: injections J(s) -> value(b) per comma object; right: projections value(b) -> J(s)
  std::vector<std::vector<finset::FinSetMap>> legs;
  // left: J(s) -> value(H s); right: value(H s) -> J(s)
  std::vector<finset::FinSetMap> universal;
};
SetKan set_left_kan(const finset::SetDiagram& j, const FinFunctor& h);
SetKan set_right_kan(const finset::SetDiagram& j, const FinFunctor& h);

}  // namespace laxdesc
