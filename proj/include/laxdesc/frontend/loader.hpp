#pragma once

// Resolution of a parsed document into validated library values.

#include <map>
#include <stdexcept>
#include <string>

#include "laxdesc/fincat.hpp"
#include "laxdesc/finset.hpp"
#include "laxdesc/frontend/parser.hpp"
#include "laxdesc/indexed.hpp"
#include "laxdesc/pseudo.hpp"

namespace laxdesc::frontend {

// Unknown names, arity mismatches and validator failures.
class LoadError : public std::runtime_error {
 public:
  LoadError(Span span, const std::string& message);
  Span span;
};

struct IndexedSpec {
  std::string kind;  // slice, diagrams or power
  int bound = 0;
  FinCatPtr power_base;
  IndexedCategory make() const;
};

struct Environment {
  Document doc;
  std::map<std::string, FinCatPtr> categories;
  std::map<std::string, finset::FinSetMap> maps;
  std::map<std::string, Monoid> monoids;
  std::map<std::string, Precategory> precategories;
  std::map<std::string, IndexedSpec> indexed;
  std::map<std::string, TruncCosimp> pseudofunctors;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, NatTrans> nattrans;
  std::map<std::string, Adjunction> adjunctions;
};

FinCatPtr build_category(const CategoryDecl& c, const Name& name);
Monoid build_monoid(const MonoidDecl& m, const Name& name);
Environment load(const Document& doc);
Environment load_text(const std::string& text);
// Missing or unreadable files raise std::runtime_error.
Environment load_file(const std::string& path);

}  // namespace laxdesc::frontend
