#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"

namespace relcalc::fo {

namespace detail {

enum class Tok {
  Ident,
  KwExists,
  KwForall,
  KwTrue,
  KwFalse,
  LParen,
  RParen,
  Comma,
  Dot,
  Equal,
  Bang,
  Amp,
  Pipe,
  Arrow,
  DArrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

inline std::vector<Token> lex_fo(std::string_view src) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  size_t i = 0;
  auto bump = [&](size_t n) {
    for (size_t j = 0; j < n; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    const int l = line, k = col;
    if (c == '(') {
      toks.push_back({Tok::LParen, "(", l, k});
      bump(1);
    } else if (c == ')') {
      toks.push_back({Tok::RParen, ")", l, k});
      bump(1);
    } else if (c == ',') {
      toks.push_back({Tok::Comma, ",", l, k});
      bump(1);
    } else if (c == '.') {
      toks.push_back({Tok::Dot, ".", l, k});
      bump(1);
    } else if (c == '=') {
      toks.push_back({Tok::Equal, "=", l, k});
      bump(1);
    } else if (c == '!') {
      toks.push_back({Tok::Bang, "!", l, k});
      bump(1);
    } else if (c == '&') {
      toks.push_back({Tok::Amp, "&", l, k});
      bump(1);
    } else if (c == '|') {
      toks.push_back({Tok::Pipe, "|", l, k});
      bump(1);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      toks.push_back({Tok::Arrow, "->", l, k});
      bump(2);
    } else if (c == '<' && i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
      toks.push_back({Tok::DArrow, "<->", l, k});
      bump(3);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      if (!std::islower(static_cast<unsigned char>(c)))
        throw ParseError("malformed identifier: must start with a lowercase letter", l, k);
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      bump(j - i);
      Tok kind = Tok::Ident;
      if (word == "exists")
        kind = Tok::KwExists;
      else if (word == "forall")
        kind = Tok::KwForall;
      else if (word == "true")
        kind = Tok::KwTrue;
      else if (word == "false")
        kind = Tok::KwFalse;
      toks.push_back({kind, std::move(word), l, k});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
  }
  toks.push_back({Tok::End, "", line, col});
  return toks;
}

class FoParser {
 public:
  explicit FoParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k))
      throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'",
                       peek().line, peek().col);
  }

  FormulaPtr formula() { return iff_level(); }

  FormulaPtr iff_level() {
    FormulaPtr lhs = impl_level();
    if (accept(Tok::DArrow)) return iff(lhs, iff_level());
    return lhs;
  }

  FormulaPtr impl_level() {
    FormulaPtr lhs = or_level();
    if (accept(Tok::Arrow)) return implies(lhs, impl_level());
    return lhs;
  }

  FormulaPtr or_level() {
    FormulaPtr f = and_level();
    while (accept(Tok::Pipe)) f = or_(f, and_level());
    return f;
  }

  FormulaPtr and_level() {
    FormulaPtr f = unary();
    while (accept(Tok::Amp)) f = and_(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (accept(Tok::Bang)) return not_(unary());
    if (peek().kind == Tok::KwExists || peek().kind == Tok::KwForall) {
      const bool universal = take().kind == Tok::KwForall;
      Token v = take();
      if (v.kind != Tok::Ident) throw ParseError("expected a variable after quantifier", v.line, v.col);
      expect(Tok::Dot, "'.'");
      FormulaPtr body = formula();  // scope extends maximally to the right
      return universal ? forall(Var{v.text}, body) : exists(Var{v.text}, body);
    }
    return atomish();
  }

  FormulaPtr atomish() {
    Token t = take();
    switch (t.kind) {
      case Tok::KwTrue:
        return truth();
      case Tok::KwFalse:
        return falsity();
      case Tok::LParen: {
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: {
        if (accept(Tok::LParen)) {
          Token a = take();
          if (a.kind != Tok::Ident) throw ParseError("expected a variable", a.line, a.col);
          expect(Tok::Comma, "','");
          Token b = take();
          if (b.kind != Tok::Ident) throw ParseError("expected a variable", b.line, b.col);
          expect(Tok::RParen, "')'");
          return atom(t.text, Var{a.text}, Var{b.text});
        }
        expect(Tok::Equal, "'(' or '='");
        Token b = take();
        if (b.kind != Tok::Ident) throw ParseError("expected a variable", b.line, b.col);
        return eq(Var{t.text}, Var{b.text});
      }
      default:
        throw ParseError("expected a formula, got '" + t.text + "'", t.line, t.col);
    }
  }
};

}  // namespace detail

inline FormulaPtr parse_fo(std::string_view text) {
  return detail::FoParser(detail::lex_fo(text)).parse();
}

}  // namespace relcalc::fo
