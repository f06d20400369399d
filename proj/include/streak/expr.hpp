#pragma once

// Arithmetic expressions over exact constants, evaluated to certified
// decimals through interval-refinement reals.
//
// Grammar (unary binds tighter than * and /, which bind tighter than + and -):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := literal | '(' expr ')' | name | name '(' expr (',' expr)* ')'
//   literal := digits ['/' digits | '.' digits]
// A '/' directly followed by a digit continues the literal, so "1/3" is the
// literal 1/3 while "1 / 3" is a division.  Error offsets are 1-based columns.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "streak/registry.hpp"

namespace streak {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { literal, constant, neg, abs, recip, add, sub, mul, div, min, max, lim };

  Kind kind = Kind::literal;
  Rational value;          // literal
  std::string name;        // constant, lim
  std::vector<ExprPtr> args;

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!(*a.args[i] == *b.args[i])) return false;
    return true;
  }
};

inline ExprPtr make_literal(const Rational& q) { return std::make_shared<const Expr>(Expr{Expr::Kind::literal, q, {}, {}}); }
inline ExprPtr make_named(Expr::Kind kind, std::string name) {
  return std::make_shared<const Expr>(Expr{kind, Rational(0), std::move(name), {}});
}
inline ExprPtr make_node(Expr::Kind kind, std::vector<ExprPtr> args) {
  return std::make_shared<const Expr>(Expr{kind, Rational(0), {}, std::move(args)});
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_ + 1, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (peek('+')) { ++pos_; lhs = make_node(Expr::Kind::add, {lhs, term()}); }
      else if (peek('-')) { ++pos_; lhs = make_node(Expr::Kind::sub, {lhs, term()}); }
      else return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (peek('*')) { ++pos_; lhs = make_node(Expr::Kind::mul, {lhs, unary()}); }
      else if (peek('/')) { ++pos_; lhs = make_node(Expr::Kind::div, {lhs, unary()}); }
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (peek('-')) {
      ++pos_;
      return make_node(Expr::Kind::neg, {unary()});
    }
    return primary();
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (digit_at(pos_)) return literal();
    if (peek('(')) {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) return named();
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  ExprPtr literal() {
    const std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.') && digit_at(pos_ + 1)) {
      pos_ += 1;
      while (digit_at(pos_)) ++pos_;
    }
    try {
      return make_literal(Rational::parse(text_.substr(start, pos_ - start)));
    } catch (const Error& e) {
      if (e.code() != errc::division_by_zero) throw;
      pos_ = start;
      fail("zero denominator in literal");
    }
  }

  ExprPtr named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string id(text_.substr(start, pos_ - start));
    if (!peek('(')) {
      if (!find_constant(id)) throw Error(errc::unknown_constant, "no constant named " + id);
      return make_named(Expr::Kind::constant, id);
    }
    ++pos_;
    if (id == "lim") {
      skip_space();
      const std::size_t fstart = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string family(text_.substr(fstart, pos_ - fstart));
      if (family.empty()) fail("expected a family name");
      if (!find_family(family)) throw Error(errc::unknown_constant, "no Cauchy family named " + family);
      expect(')');
      return make_named(Expr::Kind::lim, family);
    }
    Expr::Kind kind;
    std::size_t arity;
    if (id == "abs") kind = Expr::Kind::abs, arity = 1;
    else if (id == "recip") kind = Expr::Kind::recip, arity = 1;
    else if (id == "min") kind = Expr::Kind::min, arity = 2;
    else if (id == "max") kind = Expr::Kind::max, arity = 2;
    else {
      pos_ = start;
      fail("unknown function " + id);
    }
    std::vector<ExprPtr> args{expr()};
    while (args.size() < arity) {
      expect(',');
      args.push_back(expr());
    }
    expect(')');
    return make_node(kind, std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Fully parenthesized text that parses back to the same tree.
inline std::string print_expr(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + print_expr(*e.args[0]) + " " + op + " " + print_expr(*e.args[1]) + ")"; };
  auto call = [&](const char* fn) {
    std::string out = std::string(fn) + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print_expr(*e.args[i]);
    return out + ")";
  };
  switch (e.kind) {
    case Expr::Kind::literal: return e.value.sign() < 0 ? "(" + e.value.str() + ")" : e.value.str();
    case Expr::Kind::constant: return e.name;
    case Expr::Kind::lim: return "lim(" + e.name + ")";
    case Expr::Kind::neg: return "-" + print_expr(*e.args[0]);
    case Expr::Kind::abs: return call("abs");
    case Expr::Kind::recip: return call("recip");
    case Expr::Kind::min: return call("min");
    case Expr::Kind::max: return call("max");
    case Expr::Kind::add: return bin("+");
    case Expr::Kind::sub: return bin("-");
    case Expr::Kind::mul: return bin("*");
    case Expr::Kind::div: return bin("/");
  }
  return {};
}

struct EvalConfig {
  std::size_t digits = 6;
  Budget budget = 64;
  std::uint64_t seed = 1;
};

inline RefinedReal to_real(const Expr& e, const EvalConfig& cfg) {
  auto arg = [&](std::size_t i) { return to_real(*e.args[i], cfg); };
  auto recip = [&](const RefinedReal& x) {
    auto cert = find_apartness(x, cfg.budget);
    if (!cert) throw Error(errc::apartness_undecided, "operand of recip not separated from 0 within budget");
    return real_recip(x, *cert);
  };
  switch (e.kind) {
    case Expr::Kind::literal: return real_from_rational(e.value);
    case Expr::Kind::constant: return cs_to_real(*find_constant(e.name));
    case Expr::Kind::lim: {
      NamedFamily f = *find_family(e.name);
      return cs_to_real(cs_limit(f.family, f.outer));
    }
    case Expr::Kind::neg: return real_neg(arg(0));
    case Expr::Kind::abs: return real_abs(arg(0));
    case Expr::Kind::recip: return recip(arg(0));
    case Expr::Kind::add: return real_add(arg(0), arg(1));
    case Expr::Kind::sub: return real_sub(arg(0), arg(1));
    case Expr::Kind::mul: return real_mul_total(arg(0), arg(1), cfg.budget);
    case Expr::Kind::div: return real_mul_total(arg(0), recip(arg(1)), cfg.budget);
    case Expr::Kind::min: return real_inf(arg(0), arg(1));
    case Expr::Kind::max: return real_sup(arg(0), arg(1));
  }
  throw Error(errc::precondition_failed, "malformed expression");
}

inline DecimalResult eval_expr(const Expr& e, const EvalConfig& cfg) {
  return real_to_decimal(to_real(e, cfg), cfg.digits, cfg.budget);
}

}  // namespace streak
