#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace laxdesc::frontend {

struct Span {
  int line = 1;
  int col = 1;
};

enum class Tok {
  ident,
  nat,
  lbrace,
  rbrace,
  lparen,
  rparen,
  lbracket,
  rbracket,
  colon,
  semicolon,
  comma,
  dot,
  equals,
  arrow,      // ->
  double_arrow,  // =>
  adjoint,    // -|
  end,
};
std::string token_name(Tok t);

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Span span;
};

// Lexical and syntax errors carry the position and the expected token set.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Span span, std::string found, std::vector<std::string> expected);
  Span span;
  std::string found;
  std::vector<std::string> expected;
};

// '#' starts a comment running to the end of the line.
std::vector<Token> lex(const std::string& text);

}  // namespace laxdesc::frontend
