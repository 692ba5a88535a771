#pragma once

#include <functional>
#include <optional>
#include <string>

#include "laxdesc/cat.hpp"

namespace laxdesc {

// A chosen pullback in a base category: apex with projections p1 (to dom f)
// and p2 (to dom g).
struct BasePullback {
  Obj apex;
  Mor p1;
  Mor p2;
};

// A pseudofunctor F : C^op -> Cat given computably. For u : x -> y in C,
// on_mor(u) : F(y) -> F(x); coh(u, v) : F(u) F(v) => F(v u) for v : y -> z;
// unit(x) : id => F(id_x).
struct IndexedCategory {
  std::string name;
  CatPtr base;
  std::function<CatPtr(const Obj&)> at;
  std::function<Fun(const Mor&)> on_mor;
  std::function<Nat(const Mor&, const Mor&)> coh;
  std::function<Nat(const Obj&)> unit;
  // Left adjoint F(u)! -| F(u) where one is available.
  std::function<std::optional<LazyAdjunction>(const Mor&)> left_adjoint;
  std::function<BasePullback(const Mor&, const Mor&)> pullback;
  // The unique map into the apex of a chosen pullback with the given legs.
  std::function<Mor(const BasePullback&, const Mor&, const Mor&)> mediate;
};

}  // namespace laxdesc
