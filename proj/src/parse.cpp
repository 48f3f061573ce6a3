// Recursive-descent parser for meadow terms.

#include <cctype>
#include <vector>

#include "meadow/error.hpp"
#include "meadow/term.hpp"

namespace meadow {

namespace {

enum class Tok { Nat, Ident, Bottom, Plus, Minus, Star, Slash, InvPostfix, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based, in code points
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Nat: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Bottom: return "bottom";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::InvPostfix: return "'^-1'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t bytes) {
    for (std::size_t k = 0; k < bytes; ++k) {
      // UTF-8 continuation bytes do not start a new code point.
      if ((static_cast<unsigned char>(src[i + k]) & 0xC0U) != 0x80U) ++column;
    }
    i += bytes;
  };
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t start = column;
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Nat, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({word == "bot" ? Tok::Bottom : Tok::Ident, word, start});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 3) == "_|_") {
      out.push_back({Tok::Bottom, "_|_", start});
      advance(3);
      continue;
    }
    if (c == '^') {
      if (src.substr(i, 3) != "^-1") throw ParseError("expected '^-1'", start);
      out.push_back({Tok::InvPostfix, "^-1", start});
      advance(3);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: {
        std::size_t len = 1;
        while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0U) == 0x80U) ++len;
        throw ParseError("unknown token '" + std::string(src.substr(i, len)) + "'", start);
      }
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, {}, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term parse_all() {
    Term t = expr();
    if (peek().kind != Tok::End) fail("unexpected " + std::string(describe(peek().kind)));
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().column); }

  void expect(Tok kind) {
    if (peek().kind != kind) fail(std::string("expected ") + describe(kind) + ", found " + describe(peek().kind));
    ++pos_;
  }

  Term expr() {
    Term t = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      Term rhs = term();
      t = Term::add(t, minus ? Term::neg(rhs) : rhs);
    }
    return t;
  }

  Term term() {
    Term t = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const bool divide = take().kind == Tok::Slash;
      Term rhs = factor();
      t = Term::mul(t, divide ? Term::inv(rhs) : rhs);
    }
    return t;
  }

  Term factor() {
    if (peek().kind == Tok::Minus) {
      take();
      return Term::neg(factor());
    }
    return primary();
  }

  Term primary() {
    Term t = atom();
    if (peek().kind == Tok::InvPostfix) {
      take();
      t = Term::inv(t);
    }
    return t;
  }

  Term atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Nat: {
        std::size_t n = 0;
        for (char c : tok.text) {
          n = n * 10 + static_cast<std::size_t>(c - '0');
          if (n > kMaxNumeralLiteral) fail("numeral literal exceeds " + std::to_string(kMaxNumeralLiteral));
        }
        take();
        return Term::numeral(n);
      }
      case Tok::Bottom: take(); return Term::bottom();
      case Tok::Ident: {
        std::string name = take().text;
        if (name == "inv" && peek().kind == Tok::LParen) {
          take();
          Term inner = expr();
          expect(Tok::RParen);
          return Term::inv(inner);
        }
        return Term::var(std::move(name));
      }
      case Tok::LParen: {
        take();
        Term inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default: fail("expected an operand, found " + std::string(describe(tok.kind)));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

}  // namespace meadow
