#pragma once

// Value-level categories: objects and morphisms are small integer vectors,
// functors and natural transformations are evaluated on demand. Bounded
// categories (slices of FinSet, functor categories) live here; FinCategory
// implements the same interface over its tables.

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxdesc {

using Obj = std::vector<int>;

struct Mor {
  Obj dom;
  Obj cod;
  std::vector<int> data;
  friend auto operator<=>(const Mor&, const Mor&) = default;
  friend bool operator==(const Mor&, const Mor&) = default;
};

struct LawReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const LawReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

class Cat {
 public:
  virtual ~Cat() = default;
  // Bounded enumeration; operations below also accept objects outside it.
  virtual std::vector<Obj> objects() const = 0;
  virtual std::vector<Mor> hom(const Obj& a, const Obj& b) const = 0;
  virtual Mor id(const Obj& a) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g . f
  virtual std::string show(const Obj& a) const;
  virtual std::string show(const Mor& m) const;
  virtual std::optional<Mor> inverse(const Mor& f) const;
  bool is_iso(const Mor& f) const { return inverse(f).has_value(); }
};
using CatPtr = std::shared_ptr<const Cat>;

struct Fun {
  CatPtr src;
  CatPtr tgt;
  std::function<Obj(const Obj&)> obj;
  std::function<Mor(const Mor&)> mor;
  Obj operator()(const Obj& x) const { return obj(x); }
  Mor operator()(const Mor& f) const { return mor(f); }
};

struct Nat {
  Fun src;
  Fun tgt;
  std::function<Mor(const Obj&)> at;
  Mor operator()(const Obj& x) const { return at(x); }
};

struct LazyAdjunction {
  Fun left;
  Fun right;
  Nat unit;    // id => right . left
  Nat counit;  // left . right => id
};

class CatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Fun identity_fun(CatPtr c);
Fun compose_fun(const Fun& g, const Fun& f);  // g . f
Nat identity_nat(const Fun& f);
Nat vcomp(const Nat& b, const Nat& a);         // b . a
Nat whisker_left(const Fun& g, const Nat& a);  // g * a
Nat whisker_right(const Nat& a, const Fun& f); // a * f
Nat hcomp(const Nat& b, const Nat& a);         // b * a
Nat invert(const Nat& a);                      // throws CatError on a non-invertible component

// Law checks restricted to the given objects of the source.
LawReport check_functor(const Fun& f, const std::vector<Obj>& objs);
LawReport check_natural(const Nat& a, const std::vector<Obj>& objs);
LawReport check_adjunction(const LazyAdjunction& adj, const std::vector<Obj>& left_objs,
                           const std::vector<Obj>& right_objs);
bool nat_equal(const Nat& a, const Nat& b, const std::vector<Obj>& objs);
bool nat_invertible(const Nat& a, const std::vector<Obj>& objs, Obj* witness = nullptr);

std::string show_vec(const std::vector<int>& v);

}  // namespace laxdesc
