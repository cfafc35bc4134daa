#pragma once

#include <string>
#include <vector>

#include "atomata/errors.hpp"

namespace atomata {

// Token stream over the project's text formats: parens, braces, arrows,
// commas, brackets, and bare symbols (identifiers, tags, @-constants,
// numbers). '#' starts a comment running to end of line.
struct Token {
  enum Kind { LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, Arrow, Symbol, End };
  Kind kind = End;
  std::string text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text);

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Token::End; }

  // Consumes a token of the given kind or fails with a positioned error.
  Token expect(Token::Kind kind, const std::string& what);
  Token expect_symbol(const std::string& text);
  bool accept_symbol(const std::string& text);

  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace atomata
