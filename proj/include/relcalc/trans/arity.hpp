#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/fo/parse.hpp"
#include "relcalc/trans/fold.hpp"

namespace relcalc::trans {

// Front-end AST for formulas whose atoms may have any arity >= 1. Everything
// else mirrors the core grammar; the arity reduction is the only consumer.
class ExtFormula;
using ExtPtr = std::shared_ptr<const ExtFormula>;

struct ExtAtom {
  std::string pred;
  std::vector<fo::Var> args;
};
struct ExtEq {
  fo::Var lhs, rhs;
};
struct ExtNot {
  ExtPtr sub;
};
struct ExtAnd {
  ExtPtr lhs, rhs;
};
struct ExtExists {
  fo::Var bound;
  ExtPtr sub;
};

class ExtFormula {
 public:
  using Node = std::variant<ExtAtom, ExtEq, ExtNot, ExtAnd, ExtExists>;
  explicit ExtFormula(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

inline ExtPtr ext_atom(std::string p, std::vector<fo::Var> args) {
  return std::make_shared<ExtFormula>(ExtAtom{std::move(p), std::move(args)});
}
inline ExtPtr ext_eq(fo::Var a, fo::Var b) {
  return std::make_shared<ExtFormula>(ExtEq{std::move(a), std::move(b)});
}
inline ExtPtr ext_not(ExtPtr f) { return std::make_shared<ExtFormula>(ExtNot{std::move(f)}); }
inline ExtPtr ext_and(ExtPtr a, ExtPtr b) {
  return std::make_shared<ExtFormula>(ExtAnd{std::move(a), std::move(b)});
}
inline ExtPtr ext_exists(fo::Var v, ExtPtr f) {
  return std::make_shared<ExtFormula>(ExtExists{std::move(v), std::move(f)});
}
inline ExtPtr ext_or(ExtPtr a, ExtPtr b) {
  return ext_not(ext_and(ext_not(std::move(a)), ext_not(std::move(b))));
}
inline ExtPtr ext_implies(ExtPtr a, ExtPtr b) { return ext_or(ext_not(std::move(a)), std::move(b)); }
inline ExtPtr ext_iff(ExtPtr a, ExtPtr b) {
  return ext_and(ext_implies(a, b), ext_implies(b, a));
}
inline ExtPtr ext_truth() {
  return ext_exists(fo::truth_var(), ext_eq(fo::truth_var(), fo::truth_var()));
}

inline std::set<fo::Var> ext_vars_of(const ExtPtr& f) {
  std::set<fo::Var> out;
  if (const auto* n = f->get_if<ExtAtom>()) {
    out.insert(n->args.begin(), n->args.end());
  } else if (const auto* n = f->get_if<ExtEq>()) {
    out.insert(n->lhs);
    out.insert(n->rhs);
  } else if (const auto* n = f->get_if<ExtNot>()) {
    out = ext_vars_of(n->sub);
  } else if (const auto* n = f->get_if<ExtAnd>()) {
    out = ext_vars_of(n->lhs);
    auto r = ext_vars_of(n->rhs);
    out.insert(r.begin(), r.end());
  } else {
    const auto* ex = f->get_if<ExtExists>();
    out = ext_vars_of(ex->sub);
    out.insert(ex->bound);
  }
  return out;
}

namespace detail {

// Parser over the FO token stream, identical to the core grammar except that
// atoms take one or more arguments.
class ExtParser {
 public:
  explicit ExtParser(std::vector<fo::detail::Token> toks) : toks_(std::move(toks)) {}

  ExtPtr parse() {
    ExtPtr f = formula();
    expect(fo::detail::Tok::End, "end of input");
    return f;
  }

 private:
  using Tok = fo::detail::Tok;
  std::vector<fo::detail::Token> toks_;
  size_t pos_ = 0;

  const fo::detail::Token& peek() const { return toks_[pos_]; }
  fo::detail::Token take() { return toks_[pos_++]; }
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

  ExtPtr formula() {
    ExtPtr lhs = impl_level();
    if (accept(Tok::DArrow)) return ext_iff(lhs, formula());
    return lhs;
  }
  ExtPtr impl_level() {
    ExtPtr lhs = or_level();
    if (accept(Tok::Arrow)) return ext_implies(lhs, impl_level());
    return lhs;
  }
  ExtPtr or_level() {
    ExtPtr f = and_level();
    while (accept(Tok::Pipe)) f = ext_or(f, and_level());
    return f;
  }
  ExtPtr and_level() {
    ExtPtr f = unary();
    while (accept(Tok::Amp)) f = ext_and(f, unary());
    return f;
  }
  ExtPtr unary() {
    if (accept(Tok::Bang)) return ext_not(unary());
    if (peek().kind == Tok::KwExists || peek().kind == Tok::KwForall) {
      const bool universal = take().kind == Tok::KwForall;
      auto v = take();
      if (v.kind != Tok::Ident)
        throw ParseError("expected a variable after quantifier", v.line, v.col);
      expect(Tok::Dot, "'.'");
      ExtPtr body = formula();
      if (universal) return ext_not(ext_exists(fo::Var{v.text}, ext_not(body)));
      return ext_exists(fo::Var{v.text}, body);
    }
    return atomish();
  }
  ExtPtr atomish() {
    auto t = take();
    switch (t.kind) {
      case Tok::KwTrue:
        return ext_truth();
      case Tok::KwFalse:
        return ext_not(ext_truth());
      case Tok::LParen: {
        ExtPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: {
        if (accept(Tok::LParen)) {
          std::vector<fo::Var> args;
          for (;;) {
            auto a = take();
            if (a.kind != Tok::Ident) throw ParseError("expected a variable", a.line, a.col);
            args.push_back(fo::Var{a.text});
            if (accept(Tok::RParen)) break;
            expect(Tok::Comma, "','");
          }
          return ext_atom(t.text, std::move(args));
        }
        expect(Tok::Equal, "'(' or '='");
        auto b = take();
        if (b.kind != Tok::Ident) throw ParseError("expected a variable", b.line, b.col);
        return ext_eq(fo::Var{t.text}, fo::Var{b.text});
      }
      default:
        throw ParseError("expected a formula, got '" + t.text + "'", t.line, t.col);
    }
  }
};

}  // namespace detail

inline ExtPtr parse_ext(std::string_view text) {
  return detail::ExtParser(fo::detail::lex_fo(text)).parse();
}

// Reduction of arbitrary-arity atoms to binary ones: a(x_1..x_n) becomes
// exists z, p_1(z,x_1) /\ ... /\ p_n(z,x_n) /\ a'(z,z) with the projection
// symbols p_j shared per position and a' fresh per predicate. Binary atoms
// pass through untouched.
inline fo::FormulaPtr arity_reduce(const ExtPtr& f) {
  // Collect predicate arities; a symbol must be used consistently.
  std::map<std::string, size_t> arity;
  std::set<std::string> preds;
  {
    std::vector<ExtPtr> stack{f};
    while (!stack.empty()) {
      ExtPtr cur = stack.back();
      stack.pop_back();
      if (const auto* n = cur->get_if<ExtAtom>()) {
        if (n->args.empty()) throw SemanticError("atoms need at least one argument");
        auto [it, inserted] = arity.emplace(n->pred, n->args.size());
        if (!inserted && it->second != n->args.size())
          throw SemanticError("predicate '" + n->pred + "' used with inconsistent arity");
        preds.insert(n->pred);
      } else if (const auto* n = cur->get_if<ExtNot>()) {
        stack.push_back(n->sub);
      } else if (const auto* n = cur->get_if<ExtAnd>()) {
        stack.push_back(n->lhs);
        stack.push_back(n->rhs);
      } else if (const auto* n = cur->get_if<ExtExists>()) {
        stack.push_back(n->sub);
      }
    }
  }

  size_t max_arity = 2;
  for (const auto& [p, n] : arity) max_arity = std::max(max_arity, n);

  std::set<std::string> taken = preds;
  auto fresh_pred = [&](const std::string& base) {
    std::string name = base;
    for (int i = 1; taken.count(name); ++i) name = base + "_" + std::to_string(i);
    taken.insert(name);
    return name;
  };

  std::vector<std::string> projection(max_arity + 1);
  for (size_t j = 1; j <= max_arity; ++j) projection[j] = fresh_pred("p" + std::to_string(j));
  std::map<std::string, std::string> renamed;
  for (const auto& [p, n] : arity)
    if (n != 2) renamed.emplace(p, fresh_pred(p + "_r"));

  const std::set<fo::Var> used_vars = ext_vars_of(f);
  const fo::Var z = fo::fresh_var("z", used_vars);

  auto translate_atom = [&](const ExtAtom& a) -> fo::FormulaPtr {
    if (a.args.size() == 2) return fo::atom(a.pred, a.args[0], a.args[1]);
    fo::FormulaPtr body;
    for (size_t j = 0; j < a.args.size(); ++j) {
      fo::FormulaPtr proj = fo::atom(projection[j + 1], z, a.args[j]);
      body = body ? fo::and_(body, proj) : proj;
    }
    body = fo::and_(body, fo::atom(renamed.at(a.pred), z, z));
    return fo::exists(z, body);
  };

  auto rec = [&](auto&& self, const ExtPtr& cur) -> fo::FormulaPtr {
    if (const auto* n = cur->get_if<ExtAtom>()) return translate_atom(*n);
    if (const auto* n = cur->get_if<ExtEq>()) return fo::eq(n->lhs, n->rhs);
    if (const auto* n = cur->get_if<ExtNot>()) return fo::not_(self(self, n->sub));
    if (const auto* n = cur->get_if<ExtAnd>())
      return fo::and_(self(self, n->lhs), self(self, n->rhs));
    const auto* n = cur->get_if<ExtExists>();
    return fo::exists(n->bound, self(self, n->sub));
  };
  return rec(rec, f);
}

}  // namespace relcalc::trans
