#include "atomata/lexer.hpp"

namespace atomata {

namespace {

bool is_symbol_char(char c) {
  switch (c) {
    case '(':
    case ')':
    case '{':
    case '}':
    case '[':
    case ']':
    case ',':
    case '#':
    case ' ':
    case '\t':
    case '\r':
    case '\n':
      return false;
    default:
      return true;
  }
}

const char* kind_name(Token::Kind k) {
  switch (k) {
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::LBrace: return "'{'";
    case Token::RBrace: return "'}'";
    case Token::LBracket: return "'['";
    case Token::RBracket: return "']'";
    case Token::Comma: return "','";
    case Token::Arrow: return "'->'";
    case Token::Symbol: return "symbol";
    case Token::End: return "end of input";
  }
  return "?";
}

}  // namespace

Lexer::Lexer(const std::string& text) {
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string s, int l, int c) {
    tokens_.push_back(Token{k, std::move(s), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    switch (c) {
      case '(': push(Token::LParen, "(", tl, tc); ++i; ++col; continue;
      case ')': push(Token::RParen, ")", tl, tc); ++i; ++col; continue;
      case '{': push(Token::LBrace, "{", tl, tc); ++i; ++col; continue;
      case '}': push(Token::RBrace, "}", tl, tc); ++i; ++col; continue;
      case '[': push(Token::LBracket, "[", tl, tc); ++i; ++col; continue;
      case ']': push(Token::RBracket, "]", tl, tc); ++i; ++col; continue;
      case ',': push(Token::Comma, ",", tl, tc); ++i; ++col; continue;
      default: break;
    }
    size_t start = i;
    while (i < text.size() && is_symbol_char(text[i])) {
      ++i;
      ++col;
    }
    std::string word = text.substr(start, i - start);
    if (word == "->") {
      push(Token::Arrow, word, tl, tc);
    } else {
      push(Token::Symbol, std::move(word), tl, tc);
    }
  }
  tokens_.push_back(Token{Token::End, "", line, col});
}

Token Lexer::expect(Token::Kind kind, const std::string& what) {
  if (peek().kind != kind)
    fail("expected " + what + ", found " +
         (peek().kind == Token::End ? "end of input" : "'" + peek().text + "'") +
         " (wanted " + kind_name(kind) + ")");
  return next();
}

Token Lexer::expect_symbol(const std::string& text) {
  if (peek().kind != Token::Symbol || peek().text != text)
    fail("expected '" + text + "', found " +
         (peek().kind == Token::End ? "end of input" : "'" + peek().text + "'"));
  return next();
}

bool Lexer::accept_symbol(const std::string& text) {
  if (peek().kind == Token::Symbol && peek().text == text) {
    next();
    return true;
  }
  return false;
}

void Lexer::fail(const std::string& msg) const {
  throw ParseError(msg, peek().line, peek().column);
}

}  // namespace atomata
