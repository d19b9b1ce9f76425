#include "aci/parse.hpp"

#include <cctype>

namespace aci {

namespace {

template <Field K>
class Parser {
 public:
  using Element = typename K::Element;
  using Term = typename Polynomial<K>::Term;

  Parser(std::string_view text, const K& field, int nvars) : text_(text), field_(field), nvars_(nvars) {}

  Polynomial<K> run() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(ParseError::Kind::Syntax, "expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return Polynomial<K>::from_terms(field_, nvars_, std::move(terms));
  }

 private:
  Term term() {
    skip_ws();
    Element coeff = field_.one();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      skip_ws();
      if (peek() != '*') return {Monomial(), coeff};
      ++pos_;
      skip_ws();
    }
    Monomial m;
    for (;;) {
      factor(m);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    return {m, coeff};
  }

  void factor(Monomial& m) {
    if (peek() != 'x') fail(ParseError::Kind::Syntax, "expected a variable x<index>");
    std::size_t start = pos_;
    ++pos_;
    std::string_view idx = digits();
    if (idx.empty()) fail(ParseError::Kind::Syntax, "expected a variable index after 'x'");
    if (idx.size() > 3 || std::stoi(std::string(idx)) >= nvars_)
      fail(ParseError::Kind::UnknownVariable, "unknown variable x" + std::string(idx), start);
    int var = std::stoi(std::string(idx));
    int power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::string_view e = digits();
      if (e.empty() || e.size() > 4) fail(ParseError::Kind::Syntax, "expected a positive exponent");
      power = std::stoi(std::string(e));
      if (power <= 0) fail(ParseError::Kind::Syntax, "expected a positive exponent");
    }
    m.set(var, m[var] + power);
  }

  Element coefficient() {
    std::size_t start = pos_;
    std::string_view num = digits();
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      fail(ParseError::Kind::Coefficient, "non-integer coefficient literal", start);
    Element value = field_.from_decimal(num, false);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::string_view den = digits();
      if (den.empty()) fail(ParseError::Kind::Syntax, "expected a denominator");
      Element d = field_.from_decimal(den, false);
      if (field_.is_zero(d)) fail(ParseError::Kind::Coefficient, "coefficient denominator is zero in this field", start);
      value = field_.div(value, d);
    }
    return value;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& what) { fail(kind, what, pos_); }
  [[noreturn]] void fail(ParseError::Kind kind, const std::string& what, std::size_t at) {
    throw ParseError(kind, at, what);
  }

  std::string_view text_;
  const K& field_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

template <Field K>
Polynomial<K> parse_polynomial(std::string_view text, const K& field, int nvars) {
  return Parser<K>(text, field, nvars).run();
}

int max_variable_index(std::string_view text) {
  int best = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    int v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i < 4) {
      v = v * 10 + (text[j] - '0');
      any = true;
      ++j;
    }
    if (any) best = std::max(best, v);
  }
  return best;
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const PrimeField&, int);
template Polynomial<RationalField> parse_polynomial(std::string_view, const RationalField&, int);

}  // namespace aci
