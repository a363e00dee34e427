// Tokenizer shared by the scalar and element grammars.
#pragma once

#include "qtwist/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qtwist::detail {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c >= '0' && c <= '9') {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      out.push_back({TokenKind::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      while (i < text.size() &&
             ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= 'A' && text[i] <= 'Z') ||
              (text[i] >= '0' && text[i] <= '9') || text[i] == '\'')) {
        ++i;
      }
      out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({TokenKind::End, "", text.size()});
  return out;
}

/// Cursor over a token stream with the exponent sub-grammar both parsers use:
/// `^k`, `^-k`, `^(p/q)`, `^(-p/q)`.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(TokenKind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(TokenKind k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    return next();
  }

  long long integer() {
    const Token& t = expect(TokenKind::Number, "integer");
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw ParseError("integer out of range", t.pos);
    }
  }

  Exponent exponent() {
    if (accept(TokenKind::LParen)) {
      bool neg = accept(TokenKind::Minus);
      long long p = integer();
      long long q = 1;
      if (accept(TokenKind::Slash)) q = integer();
      if (q == 0) throw ParseError("zero exponent denominator", peek().pos);
      expect(TokenKind::RParen, "')'");
      return Exponent(neg ? -p : p, q);
    }
    bool neg = accept(TokenKind::Minus);
    long long p = integer();
    return Exponent(neg ? -p : p);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace qtwist::detail
