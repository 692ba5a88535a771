#include "laxdesc/frontend/lexer.hpp"

#include <cctype>

namespace laxdesc::frontend {

std::string token_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::nat: return "number";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::colon: return "':'";
    case Tok::semicolon: return "';'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::equals: return "'='";
    case Tok::arrow: return "'->'";
    case Tok::double_arrow: return "'=>'";
    case Tok::adjoint: return "'-|'";
    case Tok::end: return "end of input";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<std::string>& expected) {
  std::string s;
  for (size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
  return s;
}

}  // namespace

SyntaxError::SyntaxError(Span sp, std::string f, std::vector<std::string> e)
    : std::runtime_error(std::to_string(sp.line) + ":" + std::to_string(sp.col) + ": unexpected " + f +
                         ", expected " + describe(e)),
      span(sp),
      found(std::move(f)),
      expected(std::move(e)) {}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  Span pos;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.span = pos;
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      t.kind = Tok::ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(c)) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j - i > 9) throw SyntaxError(pos, "number " + text.substr(i, j - i), {"a number below 10^9"});
      t.kind = Tok::nat;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "->" || two == "=>" || two == "-|") {
      t.kind = two == "->" ? Tok::arrow : two == "=>" ? Tok::double_arrow : Tok::adjoint;
      t.text = two;
      advance(2);
      out.push_back(t);
      continue;
    }
    switch (c) {
      case '{': t.kind = Tok::lbrace; break;
      case '}': t.kind = Tok::rbrace; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case '[': t.kind = Tok::lbracket; break;
      case ']': t.kind = Tok::rbracket; break;
      case ':': t.kind = Tok::colon; break;
      case ';': t.kind = Tok::semicolon; break;
      case ',': t.kind = Tok::comma; break;
      case '.': t.kind = Tok::dot; break;
      case '=': t.kind = Tok::equals; break;
      default:
        throw SyntaxError(pos, "character '" + std::string(1, static_cast<char>(c)) + "'", {"a token"});
    }
    t.text = std::string(1, static_cast<char>(c));
    advance(1);
    out.push_back(t);
  }
  Token e;
  e.kind = Tok::end;
  e.span = pos;
  out.push_back(e);
  return out;
}

}  // namespace laxdesc::frontend
