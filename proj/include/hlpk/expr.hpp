// A tiny expression grammar for the CLI: sums and products of basis atoms
// with integer/t scalar coefficients, evaluated straight into a SymFunc on
// the p basis (the hub every other basis converts through).
//
//   expr    := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 't' | '(' expr ')' | atom
//   atom    := P[lam] | Q[lam] | s[lam] | m[lam] | p[lam]
//            | e[r] | q[r] | skewP[lam/mu]
//
// Partitions inside brackets use the usual text syntax (comma-separated,
// '-' for empty) and are validated, not normalized: "1,2" is an error.

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "partition.hpp"
#include "ratfunc.hpp"
#include "symfunc.hpp"

namespace hlpk {

namespace edetail {

class ExprParser {
 public:
  ExprParser(const std::string& text, const Engine& engine)
      : text_(text), eng_(engine) {}

  SymFunc run() {
    SymFunc out = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expr: " + what + " at position " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 9) fail("integer literal too large");
    return std::stol(text_.substr(start, pos_ - start));
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Raw text between '[' and the next ']'; brackets do not nest.
  std::string parse_bracket() {
    if (!eat('[')) fail("expected '['");
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
    if (pos_ == text_.size()) fail("unterminated '['");
    std::string inner = text_.substr(start, pos_ - start);
    ++pos_;  // consume ']'
    return inner;
  }

  Partition bracket_partition(const std::string& raw) const {
    std::size_t a = raw.find_first_not_of(" \t");
    std::size_t b = raw.find_last_not_of(" \t");
    if (a == std::string::npos) a = raw.size();
    return parse_partition(raw.substr(a, b == std::string::npos ? 0 : b - a + 1));
  }

  SymFunc scalar(const RatFunc& c) const {
    return SymFunc::unit(Basis::p).scaled(c);
  }

  SymFunc atom(const std::string& name) {
    if (name == "skewP") {
      std::string raw = parse_bracket();
      std::size_t slash = raw.find('/');
      if (slash == std::string::npos || raw.find('/', slash + 1) != raw.npos)
        fail("skewP expects 'outer/inner'");
      Partition lam = bracket_partition(raw.substr(0, slash));
      Partition mu = bracket_partition(raw.substr(slash + 1));
      return eng_.convert(eng_.skew_P(lam, mu), Basis::p);
    }
    if (name == "e" || name == "q") {
      if (!eat('[')) fail("expected '['");
      long r = parse_uint();
      if (!eat(']')) fail("expected ']'");
      SymFunc f = name == "e" ? eng_.e_element(static_cast<int>(r))
                              : eng_.q_element(static_cast<int>(r));
      return eng_.convert(f, Basis::p);
    }
    // single-letter basis atoms share the partition bracket
    Basis b = parse_basis(name);  // throws on anything unknown
    Partition lam = bracket_partition(parse_bracket());
    return eng_.convert(eng_.basis_element(b, lam), Basis::p);
  }

  SymFunc parse_primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SymFunc inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return scalar(RatFunc(IntPoly(parse_uint())));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = parse_name();
      if (name == "t") return scalar(RatFunc(IntPoly::t()));
      if (peek() != '[') fail("unknown name '" + name + "'");
      try {
        return atom(name);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  SymFunc parse_power() {
    SymFunc base = parse_primary();
    if (!eat('^')) return base;
    long n = parse_uint();
    SymFunc out = SymFunc::unit(Basis::p);
    for (long i = 0; i < n; ++i) out = eng_.multiply(out, base);
    return out;
  }

  SymFunc parse_unary() {
    if (eat('-')) return parse_unary().scaled(RatFunc(-1));
    return parse_power();
  }

  SymFunc parse_product() {
    SymFunc out = parse_unary();
    while (eat('*')) out = eng_.multiply(out, parse_unary());
    return out;
  }

  SymFunc parse_expr() {
    SymFunc out = parse_product();
    for (;;) {
      if (eat('+')) {
        out = out + parse_product();
      } else if (peek() == '-') {
        // binary minus; leave unary handling to the next product
        ++pos_;
        out = out - parse_product();
      } else {
        return out;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  const Engine& eng_;
};

}  // namespace edetail

// Evaluates the expression to a SymFunc on the p basis; convert() to taste.
inline SymFunc parse_expr(const std::string& text, const Engine& engine) {
  return edetail::ExprParser(text, engine).run();
}

}  // namespace hlpk
