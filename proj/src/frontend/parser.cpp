#include "laxdesc/frontend/parser.hpp"

#include <initializer_list>

namespace laxdesc::frontend {

std::string Decl::kind() const {
  static const char* names[] = {"category", "map", "monoid", "precategory", "indexed",
                                "pseudofunctor", "functor", "nattrans", "adjunction"};
  return names[body.index()];
}

const Decl* Document::find(const std::string& name) const {
  for (const auto& d : decls)
    if (d.name.text == name) return &d;
  return nullptr;
}

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::end) doc.decls.push_back(decl());
    return doc;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(const std::string& w) const { return at(Tok::ident) && peek().text == w; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::end ? token_name(Tok::end) : quoted(t.text);
    throw SyntaxError(t.span, found, std::move(expected));
  }
  Token expect(Tok k) {
    if (!at(k)) fail({token_name(k)});
    return toks_[pos_++];
  }
  void expect_word(const std::string& w) {
    if (!at_word(w)) fail({quoted(w)});
    ++pos_;
  }
  Name name() {
    Token t = expect(Tok::ident);
    return Name{t.text, t.span};
  }
  // Monoid elements may be written as numerals, as in 1 for the unit.
  Name element() {
    if (!at(Tok::ident) && !at(Tok::nat)) fail({token_name(Tok::ident), token_name(Tok::nat)});
    const Token& t = toks_[pos_++];
    return Name{t.text, t.span};
  }
  int nat() { return std::stoi(expect(Tok::nat).text); }
  std::vector<Name> name_list() {
    std::vector<Name> out{name()};
    while (at(Tok::comma)) {
      ++pos_;
      out.push_back(name());
    }
    return out;
  }

  Decl decl() {
    static const std::vector<std::string> keywords = {"'category'", "'map'", "'monoid'", "'precategory'",
                                                      "'indexed'", "'pseudofunctor'", "'functor'",
                                                      "'nattrans'", "'adjunction'"};
    if (!at(Tok::ident)) fail(keywords);
    std::string kw = peek().text;
    if (kw == "category") return category();
    if (kw == "map") return map();
    if (kw == "monoid") return monoid();
    if (kw == "precategory") return precategory();
    if (kw == "indexed") return indexed();
    if (kw == "pseudofunctor") return pseudofunctor();
    if (kw == "functor") return functor();
    if (kw == "nattrans") return nattrans();
    if (kw == "adjunction") return adjunction();
    fail(keywords);
  }

  Decl category() {
    ++pos_;
    Decl d{name(), CategoryDecl{}};
    auto& c = std::get<CategoryDecl>(d.body);
    expect(Tok::lbrace);
    expect_word("objects");
    expect(Tok::colon);
    c.objects = name_list();
    expect(Tok::semicolon);
    while (at_word("hom")) {
      ++pos_;
      CategoryDecl::Hom h;
      expect(Tok::lparen);
      h.src = name();
      expect(Tok::comma);
      h.tgt = name();
      expect(Tok::rparen);
      expect(Tok::colon);
      h.arrows = name_list();
      expect(Tok::semicolon);
      c.homs.push_back(std::move(h));
    }
    while (at_word("compose")) {
      ++pos_;
      expect(Tok::colon);
      CategoryDecl::Composite k;
      k.g = name();
      expect(Tok::dot);
      k.f = name();
      expect(Tok::equals);
      k.h = name();
      expect(Tok::semicolon);
      c.composites.push_back(std::move(k));
    }
    if (!at(Tok::rbrace)) {
      if (c.composites.empty()) fail({"'hom'", "'compose'", token_name(Tok::rbrace)});
      fail({"'compose'", token_name(Tok::rbrace)});
    }
    ++pos_;
    return d;
  }

  Decl map() {
    ++pos_;
    Decl d{name(), MapDecl{}};
    auto& m = std::get<MapDecl>(d.body);
    expect(Tok::colon);
    expect(Tok::lbracket);
    m.dom = nat();
    expect(Tok::rbracket);
    expect(Tok::arrow);
    expect(Tok::lbracket);
    m.cod = nat();
    expect(Tok::rbracket);
    expect(Tok::equals);
    expect(Tok::lbracket);
    if (!at(Tok::rbracket)) {
      m.img.push_back(nat());
      while (at(Tok::comma)) {
        ++pos_;
        m.img.push_back(nat());
      }
    }
    expect(Tok::rbracket);
    return d;
  }

  Decl monoid() {
    ++pos_;
    Decl d{name(), MonoidDecl{}};
    auto& m = std::get<MonoidDecl>(d.body);
    expect(Tok::lbrace);
    m.elements.push_back(element());
    while (at(Tok::comma)) {
      ++pos_;
      m.elements.push_back(element());
    }
    if (at(Tok::semicolon)) {
      ++pos_;
      auto product = [&] {
        MonoidDecl::Product p;
        p.x = element();
        expect(Tok::dot);
        p.y = element();
        expect(Tok::equals);
        p.z = element();
        m.products.push_back(std::move(p));
      };
      product();
      while (at(Tok::comma)) {
        ++pos_;
        product();
      }
    }
    if (!at(Tok::rbrace)) fail({token_name(Tok::comma), token_name(Tok::semicolon), token_name(Tok::rbrace)});
    ++pos_;
    return d;
  }

  Decl precategory() {
    ++pos_;
    Decl d{name(), PrecategoryDecl{}};
    auto& p = std::get<PrecategoryDecl>(d.body);
    expect(Tok::equals);
    if (!(at_word("sigma") || at_word("nerve") || at_word("discrete") || at_word("eq")))
      fail({"'sigma'", "'nerve'", "'discrete'", "'eq'"});
    p.kind = toks_[pos_++].text;
    expect(Tok::lparen);
    if (p.kind == "discrete")
      p.count = nat();
    else
      p.ref = name();
    expect(Tok::rparen);
    return d;
  }

  Decl indexed() {
    ++pos_;
    Decl d{name(), IndexedDecl{}};
    auto& x = std::get<IndexedDecl>(d.body);
    expect(Tok::equals);
    if (!(at_word("slice") || at_word("diagrams") || at_word("power"))) fail({"'slice'", "'diagrams'", "'power'"});
    x.kind = toks_[pos_++].text;
    expect(Tok::lparen);
    if (x.kind == "power") {
      x.ref = name();
      expect(Tok::comma);
    }
    expect_word("bound");
    expect(Tok::equals);
    x.bound = nat();
    expect(Tok::rparen);
    return d;
  }

  Decl pseudofunctor() {
    ++pos_;
    Decl d{name(), PseudofunctorDecl{}};
    auto& p = std::get<PseudofunctorDecl>(d.body);
    expect(Tok::equals);
    if (at_word("constant") && toks_[pos_ + 1].kind == Tok::lparen) {
      pos_ += 2;
      p.kind = "constant";
      p.first = name();
      expect(Tok::rparen);
      return d;
    }
    if (!at(Tok::ident)) fail({"'constant'", token_name(Tok::ident)});
    p.kind = "compose";
    p.first = name();
    expect(Tok::dot);
    p.second = name();
    return d;
  }

  Decl functor() {
    ++pos_;
    Decl d{name(), FunctorDecl{}};
    auto& f = std::get<FunctorDecl>(d.body);
    expect(Tok::colon);
    f.src = name();
    expect(Tok::arrow);
    f.tgt = name();
    expect(Tok::lbrace);
    while (at(Tok::ident)) {
      FunctorDecl::Assign a;
      a.from = name();
      expect(Tok::arrow);
      a.to = name();
      expect(Tok::semicolon);
      f.assigns.push_back(std::move(a));
    }
    if (!at(Tok::rbrace)) fail({token_name(Tok::ident), token_name(Tok::rbrace)});
    ++pos_;
    return d;
  }

  Decl nattrans() {
    ++pos_;
    Decl d{name(), NatTransDecl{}};
    auto& t = std::get<NatTransDecl>(d.body);
    expect(Tok::colon);
    t.src = name();
    expect(Tok::double_arrow);
    t.tgt = name();
    expect(Tok::lbrace);
    while (at(Tok::ident)) {
      NatTransDecl::Component c;
      c.at = name();
      expect(Tok::colon);
      c.mor = name();
      expect(Tok::semicolon);
      t.components.push_back(std::move(c));
    }
    if (!at(Tok::rbrace)) fail({token_name(Tok::ident), token_name(Tok::rbrace)});
    ++pos_;
    return d;
  }

  Decl adjunction() {
    ++pos_;
    Decl d{name(), AdjunctionDecl{}};
    auto& a = std::get<AdjunctionDecl>(d.body);
    expect(Tok::colon);
    a.left = name();
    expect(Tok::adjoint);
    a.right = name();
    return d;
  }
};

}  // namespace

Document parse(const std::string& text) { return Parser(lex(text)).document(); }

}  // namespace laxdesc::frontend
