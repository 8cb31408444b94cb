#include "rfdiv/polyring.hpp"

#include <cctype>

namespace rfdiv::polyring {

namespace {

constexpr unsigned long kMaxExponent = 1000;

BivariateTerms add(BivariateTerms a, const BivariateTerms& b, int sign) {
  for (const auto& [m, c] : b) {
    Int& slot = a[m];
    if (sign > 0) slot += c; else slot -= c;
    if (slot == 0) a.erase(m);
  }
  return a;
}

BivariateTerms mul(const BivariateTerms& a, const BivariateTerms& b) {
  BivariateTerms r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Int& slot = r[{ma.first + mb.first, ma.second + mb.second}];
      slot += ca * cb;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

BivariateTerms power(const BivariateTerms& a, unsigned long k) {
  BivariateTerms result{{{0, 0}, Int(1)}};
  BivariateTerms base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

BivariateTerms variable(char v) {
  return v == 'x' ? BivariateTerms{{{1, 0}, Int(1)}} : BivariateTerms{{{0, 1}, Int(1)}};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivariateTerms parse() {
    BivariateTerms result = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polyring", "polyring: syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  bool at_variable() const { return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'y'); }

  Int integer_literal() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) fail("non-integer coefficient");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned long exponent() {
    skip_space();
    if (!at_digit()) fail("expected nonnegative integer exponent");
    const Int e = integer_literal();
    if (e > kMaxExponent) fail("exponent too large");
    return e.get_ui();
  }

  BivariateTerms expr() {
    BivariateTerms result;
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    result = add(result, term(), sign);
    for (;;) {
      if (accept('+')) result = add(result, term(), 1);
      else if (accept('-')) result = add(result, term(), -1);
      else return result;
    }
  }

  BivariateTerms term() {
    BivariateTerms result = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        result = mul(result, factor());
      } else if (pos_ < text_.size() && (at_variable() || text_[pos_] == '(' || at_digit())) {
        fail("implicit multiplication is only allowed as coefficient-times-monomial");
      } else {
        return result;
      }
    }
  }

  BivariateTerms factor() {
    if (accept('-')) return mul(BivariateTerms{{{0, 0}, Int(-1)}}, factor());
    skip_space();
    if (at_digit()) {
      const Int c = integer_literal();
      if (at_variable()) {
        // coefficient-times-monomial, e.g. 3x^2
        BivariateTerms mono = variable(text_[pos_++]);
        if (accept('^')) mono = power(mono, exponent());
        return mul(BivariateTerms{{{0, 0}, c}}, mono);
      }
      BivariateTerms lit;
      if (c != 0) lit[{0, 0}] = c;
      if (accept('^')) return power(lit, exponent());
      return lit;
    }
    BivariateTerms base = primary();
    if (accept('^')) return power(base, exponent());
    return base;
  }

  BivariateTerms primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (at_variable()) return variable(text_[pos_++]);
    if (accept('(')) {
      BivariateTerms inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (text_[pos_] == '.') fail("non-integer coefficient");
    fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariateTerms parse_terms(std::string_view text) { return Parser(text).parse(); }

namespace {

IntPoly univariate(const BivariateTerms& terms) {
  std::vector<Int> v;
  for (const auto& [m, c] : terms) {
    if (v.size() <= m.first) v.resize(m.first + 1, Int(0));
    v[m.first] = c;
  }
  return IntPoly(std::move(v));
}

bool mentions_y(const BivariateTerms& terms) {
  for (const auto& [m, c] : terms) {
    if (m.second > 0) return true;
  }
  return false;
}

}  // namespace

std::variant<IntPoly, PlanePoly> parse_poly(std::string_view text) {
  BivariateTerms terms = parse_terms(text);
  if (mentions_y(terms)) return PlanePoly(std::move(terms));
  return univariate(terms);
}

IntPoly parse_int_poly(std::string_view text) {
  const BivariateTerms terms = parse_terms(text);
  if (mentions_y(terms)) throw DomainError("polyring", "polyring: expected a polynomial in x only");
  return univariate(terms);
}

}  // namespace rfdiv::polyring
