#ifndef QSMZV_PARSER_HPP
#define QSMZV_PARSER_HPP

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "qsmzv/evaluator.hpp"
#include "qsmzv/io.hpp"

namespace qsmzv {

// Positions in diagnostics are 1-based byte offsets.
struct ParseError : Error {
  size_t offset;
  ParseError(size_t off, const std::string& msg)
      : Error("parse error at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};
struct TypeError : Error {
  using Error::Error;
};

using Value = std::variant<Rational, double, NCPoly, ClassicalPoly>;

struct EvalOptions {
  Rational q{1, 2};
  bool float_mode = false;
  double q_float = 0.5;
  long M = 10;
  double tol = 1e-12;
};

namespace detail {

struct Token {
  enum Kind { Number, Ident, Sym, End } kind;
  std::string text;
  long value = 0;
  size_t offset;  // 0-based byte offset of the first character
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Token t{Token::Number, s.substr(i, j - i), 0, i};
      t.value = std::stol(t.text);
      out.push_back(t);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back(Token{Token::Ident, s.substr(i, j - i), 0, i});
      i = j;
      continue;
    }
    if (std::string("+-*/^()[],").find(c) != std::string::npos) {
      out.push_back(Token{Token::Sym, std::string(1, c), 0, i});
      ++i;
      continue;
    }
    throw ParseError(i + 1, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{Token::End, "", 0, s.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string& src, const EvalOptions& opts) : opts_(opts), toks_(tokenize(src)) {}

  Value parse() {
    Value v = expr();
    if (!at_end()) fail("trailing input");
    return v;
  }

private:
  const EvalOptions& opts_;
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == Token::End; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur().offset + 1, msg); }
  bool accept_sym(const std::string& s) {
    if (cur().kind == Token::Sym && cur().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }

  static NCPoly as_q(const Value& v) {
    if (std::holds_alternative<NCPoly>(v)) return std::get<NCPoly>(v);
    if (std::holds_alternative<Rational>(v)) return NCPoly(HPoly(std::get<Rational>(v)));
    throw TypeError("expected a q-side word expression");
  }
  static ClassicalPoly as_c(const Value& v) {
    if (std::holds_alternative<ClassicalPoly>(v)) return std::get<ClassicalPoly>(v);
    if (std::holds_alternative<Rational>(v)) return ClassicalPoly(std::get<Rational>(v));
    throw TypeError("expected a classical word expression");
  }

  static Value add(const Value& a, const Value& b, int sign) {
    if (std::holds_alternative<double>(a) || std::holds_alternative<double>(b)) {
      double x = std::holds_alternative<double>(a) ? std::get<double>(a)
                                                   : std::get<Rational>(a).to_double();
      double y = std::holds_alternative<double>(b) ? std::get<double>(b)
                                                   : std::get<Rational>(b).to_double();
      return x + sign * y;
    }
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
      return sign > 0 ? std::get<Rational>(a) + std::get<Rational>(b)
                      : std::get<Rational>(a) - std::get<Rational>(b);
    if (std::holds_alternative<ClassicalPoly>(a) || std::holds_alternative<ClassicalPoly>(b)) {
      ClassicalPoly x = as_c(a), y = as_c(b);
      return sign > 0 ? x + y : x - y;
    }
    NCPoly x = as_q(a), y = as_q(b);
    return sign > 0 ? x + y : x - y;
  }

  static Value mul(const Value& a, const Value& b) {
    if (std::holds_alternative<double>(a) || std::holds_alternative<double>(b)) {
      double x = std::holds_alternative<double>(a) ? std::get<double>(a)
                                                   : std::get<Rational>(a).to_double();
      double y = std::holds_alternative<double>(b) ? std::get<double>(b)
                                                   : std::get<Rational>(b).to_double();
      return x * y;
    }
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
      return std::get<Rational>(a) * std::get<Rational>(b);
    if (std::holds_alternative<ClassicalPoly>(a) || std::holds_alternative<ClassicalPoly>(b))
      return as_c(a) * as_c(b);
    return as_q(a) * as_q(b);
  }

  static Value neg(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return -std::get<Rational>(v);
    if (std::holds_alternative<double>(v)) return -std::get<double>(v);
    if (std::holds_alternative<NCPoly>(v)) return -std::get<NCPoly>(v);
    return -std::get<ClassicalPoly>(v);
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept_sym("+")) v = add(v, term(), 1);
      else if (accept_sym("-")) v = add(v, term(), -1);
      else return v;
    }
  }

  Value term() {
    Value v = factor();
    while (accept_sym("*")) v = mul(v, factor());
    return v;
  }

  Value factor() {
    if (accept_sym("-")) return neg(factor());
    Value v = atom();
    if (accept_sym("^")) {
      if (cur().kind != Token::Number) fail("expected integer exponent");
      long e = cur().value;
      ++pos_;
      if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).pow(e);
      if (e < 0) throw TypeError("negative power of a word expression");
      Value acc = std::holds_alternative<ClassicalPoly>(v)
                      ? Value(ClassicalPoly::one())
                      : Value(NCPoly::one());
      for (long i = 0; i < e; ++i) acc = mul(acc, v);
      return acc;
    }
    return v;
  }

  Index bracket_list(bool allow_empty = true) {
    expect_sym("[");
    Index k;
    if (accept_sym("]")) {
      if (!allow_empty) fail("expected at least one entry");
      return k;
    }
    while (true) {
      if (cur().kind != Token::Number) fail("expected integer");
      k.push_back(static_cast<int>(cur().value));
      ++pos_;
      if (accept_sym("]")) return k;
      expect_sym(",");
    }
  }

  Value call_args1() {
    expect_sym("(");
    Value v = expr();
    expect_sym(")");
    return v;
  }
  std::pair<Value, Value> call_args2() {
    expect_sym("(");
    Value v1 = expr();
    expect_sym(",");
    Value v2 = expr();
    expect_sym(")");
    return {v1, v2};
  }

  template <typename NumT>
  Value eval_with(const QContext<NumT>& ctx, const std::string& fn, const NCPoly& arg) {
    if (fn == "ZqM") return ZqM(arg, opts_.M, ctx);
    return Zq(arg, ctx).value;
  }

  Value atom() {
    if (cur().kind == Token::Number) {
      Rational n(cur().value);
      ++pos_;
      if (accept_sym("/")) {
        if (cur().kind != Token::Number) fail("expected denominator");
        if (cur().value == 0) fail("zero denominator");
        n /= Rational(cur().value);
        ++pos_;
      }
      return n;
    }
    if (accept_sym("(")) {
      Value v = expr();
      expect_sym(")");
      return v;
    }
    if (cur().kind != Token::Ident) fail("expected expression");
    std::string id = cur().text;
    ++pos_;

    if (id == "g" || id == "e" || id == "E") {
      Index k = bracket_list();
      for (int p : k)
        if (p < 1) throw TypeError(id + "[...]: parts must be >= 1");
      if (id == "g") return g_word(k);
      if (id == "E") return E_index(k);
      NCPoly r = NCPoly::one();
      for (int p : k) r *= e_word(p);
      return r;
    }
    if (id == "z") {
      Index k = bracket_list();
      for (int p : k)
        if (p < 1) throw TypeError("z[...]: parts must be >= 1");
      return z_word(k);
    }
    if (id == "H") return hb_word();
    if (id == "h") return NCPoly(HPoly::hbar());
    if (id == "a") return NCPoly::monomial("a");
    if (id == "b") return NCPoly::monomial("b");
    if (id == "x") return ClassicalPoly::monomial("x");
    if (id == "y") return ClassicalPoly::monomial("y");

    if (id == "qharm" || id == "qshuf") {
      auto [v1, v2] = call_args2();
      return id == "qharm" ? qharm(as_q(v1), as_q(v2)) : qshuf(as_q(v1), as_q(v2));
    }
    if (id == "psistar") return psi_star(as_q(call_args1()));
    if (id == "psish") return psi_sh(as_q(call_args1()));
    if (id == "iota") return iota(as_q(call_args1()));
    if (id == "harm" || id == "shuf") {
      auto [v1, v2] = call_args2();
      return id == "harm" ? harm(as_c(v1), as_c(v2)) : shuf(as_c(v1), as_c(v2));
    }
    if (id == "psi") return psi(as_c(call_args1()));
    if (id == "wS" || id == "wSc") {
      expect_sym("(");
      if (cur().kind != Token::Ident || (cur().text != "star" && cur().text != "sh"))
        fail("expected star or sh");
      Mode mode = cur().text == "star" ? Mode::star : Mode::sh;
      ++pos_;
      expect_sym(",");
      Value v = expr();
      expect_sym(")");
      return id == "wS" ? Value(wS_q(as_q(v), mode)) : Value(wS_classical(as_c(v), mode));
    }
    if (id == "ZqM" || id == "Zq") {
      NCPoly arg = as_q(call_args1());
      if (opts_.float_mode) {
        QContext<double> ctx(opts_.q_float, std::nullopt, opts_.tol);
        return eval_with(ctx, id, arg);
      }
      QContext<Rational> ctx(opts_.q, std::nullopt, opts_.tol);
      return eval_with(ctx, id, arg);
    }
    fail("unknown identifier '" + id + "'");
  }
};

}  // namespace detail

inline Value cli_eval(const std::string& input, const EvalOptions& opts = {}) {
  detail::Parser p(input, opts);
  return p.parse();
}

inline NCPoly parse_ncpoly(const std::string& input) {
  Value v = cli_eval(input);
  if (std::holds_alternative<NCPoly>(v)) return std::get<NCPoly>(v);
  if (std::holds_alternative<Rational>(v)) return NCPoly(HPoly(std::get<Rational>(v)));
  throw TypeError("expected a q-side expression: " + input);
}

inline std::string value_to_string(const Value& v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).to_string();
  if (std::holds_alternative<double>(v)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", std::get<double>(v));
    return buf;
  }
  if (std::holds_alternative<NCPoly>(v)) return to_string(std::get<NCPoly>(v));
  return to_string(std::get<ClassicalPoly>(v));
}

}  // namespace qsmzv

#endif
