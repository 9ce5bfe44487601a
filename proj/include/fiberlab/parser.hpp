// Parser for the ideal input language:
//
//   ring x, y, z over 32003;
//   ideal x^2 - y^2, x*y, 3*x*z;
//   matrix [x, 0], [y, z];        # optional; its maximal minors join the ideal
//
// '#' starts a comment. Coefficients are integers (or fractions a/b over QQ).

#ifndef FIBERLAB_PARSER_HPP
#define FIBERLAB_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fiberlab/minors.hpp"
#include "fiberlab/polynomial.hpp"

namespace fiberlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

struct RawTerm {
  mpq_class coeff;
  std::vector<int> exponents;
};
using RawPoly = std::vector<RawTerm>;

struct ParsedInput {
  mpz_class characteristic;
  int characteristic_line = 0, characteristic_column = 0;
  std::vector<std::string> variables;
  std::vector<RawPoly> generators;
  std::vector<std::vector<RawPoly>> matrix;
};

namespace detail {

enum class Tok { name, integer, decimal, symbol, end };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::name, text.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      Tok kind = Tok::integer;
      if (j < text.size() && text[j] == '.') {
        kind = Tok::decimal;
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      out.push_back({kind, text.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::string(",;+-*^/[]").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::symbol, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  ParsedInput parse() {
    ParsedInput in;
    expect_keyword("ring");
    do {
      const Token& t = peek();
      if (t.kind != Tok::name || is_keyword(t.text)) fail(t, "expected a variable name");
      for (const auto& v : in.variables)
        if (v == t.text) fail(t, "duplicate variable name '" + t.text + "'");
      in.variables.push_back(t.text);
      ++pos_;
    } while (accept(","));
    expect_keyword("over");
    const Token& c = peek();
    if (c.kind == Tok::decimal) fail(c, "characteristic must be a nonnegative integer");
    if (c.kind != Tok::integer) fail(c, "expected the characteristic (0 for the rationals)");
    in.characteristic = mpz_class(c.text);
    in.characteristic_line = c.line;
    in.characteristic_column = c.column;
    ++pos_;
    expect(";");
    vars_ = &in.variables;

    const Token& ideal_tok = peek();
    expect_keyword("ideal");
    if (peek().kind == Tok::symbol && peek().text == ";") fail(peek(), "empty generator list");
    do {
      RawPoly p = poly();
      if (!p.empty()) in.generators.push_back(std::move(p));
    } while (accept(","));
    expect(";");

    if (peek().kind == Tok::name && peek().text == "matrix") {
      ++pos_;
      do {
        expect("[");
        std::vector<RawPoly> row;
        do {
          row.push_back(poly());
        } while (accept(","));
        const Token& close = peek();
        expect("]");
        if (!in.matrix.empty() && row.size() != in.matrix.front().size())
          fail(close, "matrix rows must all have the same length");
        in.matrix.push_back(std::move(row));
      } while (accept(","));
      expect(";");
    }
    if (peek().kind != Tok::end) fail(peek(), "unexpected '" + peek().text + "' after the ideal declaration");
    if (in.generators.empty() && in.matrix.empty()) fail(ideal_tok, "empty generator list");
    return in;
  }

 private:
  static bool is_keyword(const std::string& s) {
    return s == "ring" || s == "over" || s == "ideal" || s == "matrix";
  }
  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }
  bool accept(const std::string& sym) {
    if (peek().kind == Tok::symbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) {
      const Token& t = peek();
      fail(t, "expected '" + sym + "' but found " + (t.kind == Tok::end ? "end of input" : "'" + t.text + "'"));
    }
  }
  void expect_keyword(const std::string& kw) {
    const Token& t = peek();
    if (t.kind != Tok::name || t.text != kw)
      fail(t, "expected '" + kw + "' but found " + (t.kind == Tok::end ? "end of input" : "'" + t.text + "'"));
    ++pos_;
  }

  bool term_starts() const {
    const Token& t = peek();
    return t.kind == Tok::integer || t.kind == Tok::decimal || (t.kind == Tok::name && !is_keyword(t.text));
  }

  RawPoly poly() {
    RawPoly out;
    int sign = 1;
    const Token* op = nullptr;
    if (peek().kind == Tok::symbol && (peek().text == "+" || peek().text == "-")) {
      op = &peek();
      sign = peek().text == "-" ? -1 : 1;
      ++pos_;
    }
    while (true) {
      if (!term_starts()) {
        if (op) fail(*op, "dangling '" + op->text + "': expected a term after it");
        fail(peek(), "expected a polynomial term but found " +
                         (peek().kind == Tok::end ? std::string("end of input") : "'" + peek().text + "'"));
      }
      RawTerm t = term();
      if (sign < 0) t.coeff = -t.coeff;
      if (sgn(t.coeff) != 0) out.push_back(std::move(t));
      if (peek().kind == Tok::symbol && (peek().text == "+" || peek().text == "-")) {
        op = &peek();
        sign = peek().text == "-" ? -1 : 1;
        ++pos_;
      } else {
        break;
      }
    }
    return out;
  }

  RawTerm term() {
    RawTerm t{mpq_class(1), std::vector<int>(vars_->size(), 0)};
    bool need_factor = false;
    if (peek().kind == Tok::decimal) fail(peek(), "non-integer coefficient '" + peek().text + "'");
    if (peek().kind == Tok::integer) {
      mpz_class num(peek().text);
      ++pos_;
      mpz_class den = 1;
      if (accept("/")) {
        const Token& d = peek();
        if (d.kind != Tok::integer) fail(d, "expected an integer denominator");
        den = mpz_class(d.text);
        if (den == 0) fail(d, "zero denominator");
        ++pos_;
      }
      t.coeff = mpq_class(num, den);
      t.coeff.canonicalize();
      if (!accept("*")) return t;
      need_factor = true;
    }
    do {
      const Token& v = peek();
      if (v.kind != Tok::name || is_keyword(v.text)) {
        if (need_factor) fail(v, "expected a variable after '*'");
        fail(v, "expected a variable");
      }
      int idx = -1;
      for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == v.text) idx = static_cast<int>(i);
      if (idx < 0) fail(v, "unknown variable '" + v.text + "'");
      ++pos_;
      long e = 1;
      if (accept("^")) {
        const Token& ex = peek();
        if (ex.kind != Tok::integer) fail(ex, "non-integer exponent" + (ex.kind == Tok::end ? std::string() : " '" + ex.text + "'"));
        mpz_class ez(ex.text);
        if (ez > 60000) fail(ex, "exponent too large");
        e = ez.get_si();
        ++pos_;
      }
      t.exponents[static_cast<std::size_t>(idx)] += static_cast<int>(e);
      if (t.exponents[static_cast<std::size_t>(idx)] > 60000) fail(v, "exponent too large");
      need_factor = true;
    } while (accept("*"));
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* vars_ = nullptr;
};

}  // namespace detail

inline ParsedInput parse_ideal_text(const std::string& text) { return detail::Parser(text).parse(); }

/// The field named by a parsed file; reports bad characteristics at their position.
inline FieldSpec field_of(const ParsedInput& in) {
  try {
    if (in.characteristic > mpz_class("4294967295")) throw std::invalid_argument("characteristic is too large");
    return FieldSpec::from_characteristic(in.characteristic.get_ui());
  } catch (const std::invalid_argument& e) {
    throw ParseError(in.characteristic_line, in.characteristic_column, e.what());
  }
}

template <class F>
Polynomial<F> to_polynomial(const RawPoly& raw, const RingPtr<F>& ring) {
  const F& K = ring->field();
  std::vector<Term<F>> terms;
  for (const auto& t : raw) {
    auto num = K.from_mpz(t.coeff.get_num());
    auto den = K.from_mpz(t.coeff.get_den());
    if (K.is_zero(den)) throw std::domain_error("coefficient denominator vanishes in " + K.spec().to_string());
    terms.push_back({ring->monomial(t.exponents), K.div(num, den)});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
struct IdealInput {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> listed;   ///< generators written after `ideal`
  PolyMatrix<F> matrix;                ///< optional presentation matrix
  std::vector<Polynomial<F>> generators;  ///< listed ones plus maximal minors
};

template <class F>
IdealInput<F> build_input(const ParsedInput& in, const F& field) {
  IdealInput<F> out;
  out.ring = make_ring(field, in.variables);
  for (const auto& g : in.generators) {
    auto p = to_polynomial(g, out.ring);
    if (!p.is_zero()) out.listed.push_back(std::move(p));
  }
  for (const auto& row : in.matrix) {
    std::vector<Polynomial<F>> r;
    for (const auto& e : row) r.push_back(to_polynomial(e, out.ring));
    out.matrix.push_back(std::move(r));
  }
  out.generators = out.listed;
  if (!out.matrix.empty()) {
    int k = static_cast<int>(std::min(out.matrix.size(), out.matrix.front().size()));
    for (auto& m : minors(out.matrix, k, out.ring)) out.generators.push_back(std::move(m));
  }
  if (out.generators.empty()) throw std::invalid_argument("the input defines the zero ideal");
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_PARSER_HPP
