#pragma once

// Syntax tree of .lcat documents and the recursive-descent parser.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "laxdesc/frontend/lexer.hpp"

namespace laxdesc::frontend {

// Equality ignores the span so that reparsed documents compare equal.
struct Name {
  std::string text;
  Span span;
  friend bool operator==(const Name& a, const Name& b) { return a.text == b.text; }
};

// Identities are implicit and named id_<object>.
struct CategoryDecl {
  struct Hom {
    Name src, tgt;
    std::vector<Name> arrows;
    friend bool operator==(const Hom&, const Hom&) = default;
  };
  struct Composite {
    Name g, f, h;  // g . f = h
    friend bool operator==(const Composite&, const Composite&) = default;
  };
  std::vector<Name> objects;
  std::vector<Hom> homs;
  std::vector<Composite> composites;
  friend bool operator==(const CategoryDecl&, const CategoryDecl&) = default;
};

struct MapDecl {
  int dom = 0;
  int cod = 0;
  std::vector<int> img;
  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

// The first element is the unit; products involving it are implied.
struct MonoidDecl {
  struct Product {
    Name x, y, z;  // x . y = z
    friend bool operator==(const Product&, const Product&) = default;
  };
  std::vector<Name> elements;
  std::vector<Product> products;
  friend bool operator==(const MonoidDecl&, const MonoidDecl&) = default;
};

// sigma(M) | nerve(C) | discrete(n) | eq(p)
struct PrecategoryDecl {
  std::string kind;
  std::optional<Name> ref;
  int count = 0;
  friend bool operator==(const PrecategoryDecl&, const PrecategoryDecl&) = default;
};

// slice(bound = N) | diagrams(bound = N) | power(C, bound = N)
struct IndexedDecl {
  std::string kind;
  std::optional<Name> ref;
  int bound = 0;
  friend bool operator==(const IndexedDecl&, const IndexedDecl&) = default;
};

// F . P | constant(C)
struct PseudofunctorDecl {
  std::string kind;
  Name first;
  std::optional<Name> second;
  friend bool operator==(const PseudofunctorDecl&, const PseudofunctorDecl&) = default;
};

// Assignments name objects and morphisms of the source; identities may be omitted.
struct FunctorDecl {
  struct Assign {
    Name from, to;
    friend bool operator==(const Assign&, const Assign&) = default;
  };
  Name src, tgt;
  std::vector<Assign> assigns;
  friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

struct NatTransDecl {
  struct Component {
    Name at, mor;
    friend bool operator==(const Component&, const Component&) = default;
  };
  Name src, tgt;
  std::vector<Component> components;
  friend bool operator==(const NatTransDecl&, const NatTransDecl&) = default;
};

struct AdjunctionDecl {
  Name left, right;
  friend bool operator==(const AdjunctionDecl&, const AdjunctionDecl&) = default;
};

using DeclBody = std::variant<CategoryDecl, MapDecl, MonoidDecl, PrecategoryDecl, IndexedDecl, PseudofunctorDecl,
                              FunctorDecl, NatTransDecl, AdjunctionDecl>;

struct Decl {
  Name name;
  DeclBody body;
  std::string kind() const;
  friend bool operator==(const Decl&, const Decl&) = default;
};

struct Document {
  std::vector<Decl> decls;
  const Decl* find(const std::string& name) const;
  friend bool operator==(const Document&, const Document&) = default;
};

Document parse(const std::string& text);

}  // namespace laxdesc::frontend
