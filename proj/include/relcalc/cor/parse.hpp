#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/errors.hpp"

namespace relcalc::cor {

namespace detail {

enum class CTok {
  Ident,
  KwId,
  KwTop,
  KwBot,
  LParen,
  RParen,
  Semi,
  Hash,
  Amp,
  Pipe,
  PostComp,  // ^c
  PostConv,  // ^T
  Equal,
  LeqOp,  // <=
  Bang,
  FAnd,  // /\ (formula-level conjunction)
  End,
};

struct CToken {
  CTok kind;
  std::string text;
  int line;
  int col;
};

inline std::vector<CToken> lex_cor(std::string_view src) {
  std::vector<CToken> toks;
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
  auto push = [&](CTok k, std::string s, int l, int c) { toks.push_back({k, std::move(s), l, c}); };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    const int l = line, k = col;
    switch (c) {
      case '(': push(CTok::LParen, "(", l, k); bump(1); continue;
      case ')': push(CTok::RParen, ")", l, k); bump(1); continue;
      case ';': push(CTok::Semi, ";", l, k); bump(1); continue;
      case '#': push(CTok::Hash, "#", l, k); bump(1); continue;
      case '&': push(CTok::Amp, "&", l, k); bump(1); continue;
      case '|': push(CTok::Pipe, "|", l, k); bump(1); continue;
      case '=': push(CTok::Equal, "=", l, k); bump(1); continue;
      case '!': push(CTok::Bang, "!", l, k); bump(1); continue;
      default: break;
    }
    if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      push(CTok::LeqOp, "<=", l, k);
      bump(2);
    } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '\\') {
      push(CTok::FAnd, "/\\", l, k);
      bump(2);
    } else if (c == '^') {
      if (i + 1 < src.size() && src[i + 1] == 'c') {
        push(CTok::PostComp, "^c", l, k);
        bump(2);
      } else if (i + 1 < src.size() && src[i + 1] == 'T') {
        push(CTok::PostConv, "^T", l, k);
        bump(2);
      } else {
        throw ParseError("expected 'c' or 'T' after '^'", l, k);
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      if (!std::islower(static_cast<unsigned char>(c)))
        throw ParseError("malformed identifier: must start with a lowercase letter", l, k);
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      bump(j - i);
      CTok kind = CTok::Ident;
      if (word == "id")
        kind = CTok::KwId;
      else if (word == "top")
        kind = CTok::KwTop;
      else if (word == "bot")
        kind = CTok::KwBot;
      push(kind, std::move(word), l, k);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
  }
  push(CTok::End, "", line, col);
  return toks;
}

class CorParser {
 public:
  explicit CorParser(std::vector<CToken> toks) : toks_(std::move(toks)) {}

  TermPtr parse_term_all() {
    TermPtr t = term();
    expect(CTok::End, "end of input");
    return t;
  }

  QfPtr parse_formula_all() {
    QfPtr f = formula();
    expect(CTok::End, "end of input");
    return f;
  }

 private:
  std::vector<CToken> toks_;
  size_t pos_ = 0;

  const CToken& peek() const { return toks_[pos_]; }
  CToken take() { return toks_[pos_++]; }
  bool accept(CTok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(CTok k, const char* what) {
    if (!accept(k))
      throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'",
                       peek().line, peek().col);
  }

  TermPtr term() { return union_level(); }

  TermPtr union_level() {
    TermPtr t = inter_level();
    while (accept(CTok::Pipe)) t = union_(t, inter_level());
    return t;
  }

  TermPtr inter_level() {
    TermPtr t = seq_level();
    while (accept(CTok::Amp)) t = inter(t, seq_level());
    return t;
  }

  TermPtr seq_level() {
    TermPtr t = postfix();
    for (;;) {
      if (accept(CTok::Semi))
        t = dot(t, postfix());
      else if (accept(CTok::Hash))
        t = dagger(t, postfix());
      else
        return t;
    }
  }

  TermPtr postfix() {
    TermPtr t = primary();
    for (;;) {
      if (accept(CTok::PostComp))
        t = comp(t);
      else if (accept(CTok::PostConv))
        t = conv(t);
      else
        return t;
    }
  }

  TermPtr primary() {
    CToken t = take();
    switch (t.kind) {
      case CTok::Ident:
        return rel(t.text);
      case CTok::KwId:
        return id();
      case CTok::KwTop:
        return top();
      case CTok::KwBot:
        return bot();
      case CTok::LParen: {
        TermPtr inner = term();
        expect(CTok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected a term, got '" + t.text + "'", t.line, t.col);
    }
  }

  QfPtr formula() {
    QfPtr f = funit();
    while (accept(CTok::FAnd)) f = qf_and(f, funit());
    return f;
  }

  QfPtr funit() {
    if (accept(CTok::Bang)) return qf_not(funit());
    if (peek().kind == CTok::LParen) {
      // A '(' may open a parenthesized formula or the left term of an
      // equation; try the formula reading first and fall back on failure.
      const size_t mark = pos_;
      try {
        take();
        QfPtr f = formula();
        expect(CTok::RParen, "')'");
        if (peek().kind == CTok::Equal || peek().kind == CTok::LeqOp)
          throw ParseError("parenthesized formula followed by '='", peek().line, peek().col);
        return f;
      } catch (const ParseError&) {
        pos_ = mark;
      }
    }
    return equation_unit();
  }

  QfPtr equation_unit() {
    TermPtr lhs = term();
    CToken t = take();
    if (t.kind == CTok::Equal) return equation(lhs, term());
    if (t.kind == CTok::LeqOp) return leq(lhs, term());
    throw ParseError("expected '=' or '<=', got '" + t.text + "'", t.line, t.col);
  }
};

}  // namespace detail

inline TermPtr parse_cor_term(std::string_view text) {
  return detail::CorParser(detail::lex_cor(text)).parse_term_all();
}

inline QfPtr parse_cor_qf(std::string_view text) {
  return detail::CorParser(detail::lex_cor(text)).parse_formula_all();
}

// Parses either a quantifier-free formula or a bare term, preferring the
// formula reading.
inline std::variant<TermPtr, QfPtr> parse_cor(std::string_view text) {
  try {
    return parse_cor_qf(text);
  } catch (const ParseError& formula_err) {
    try {
      return parse_cor_term(text);
    } catch (const ParseError&) {
      throw formula_err;
    }
  }
}

}  // namespace relcalc::cor
