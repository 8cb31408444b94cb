#include "rfdiv/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace rfdiv::polyring {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, unsigned k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::content() const {
  if (coeffs_.empty()) return 0;
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return sgn(leading()) < 0 ? Int(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
  if (coeffs_.empty()) return {};
  const Int c = content();
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

Int IntPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int s = cmp(coeffs_[i], o.coeffs_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c, const std::string& monomial) {
  const bool negative = sgn(c) < 0;
  const Int magnitude = abs(c);
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude.get_str();
  } else {
    if (magnitude != 1) out << magnitude.get_str();
    out << monomial;
  }
}

std::string power(char var, unsigned k) {
  if (k == 0) return {};
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

}  // namespace

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    append_term(out, first, coeffs_[i], power(var, static_cast<unsigned>(i)));
    first = false;
  }
  return out.str();
}

IntPoly pow(const IntPoly& f, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool divides(const IntPoly& g, const IntPoly& f, IntPoly* quotient) {
  if (g.is_zero()) throw DomainError("polyring", "polyring: division by the zero polynomial");
  if (f.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (f.degree() < g.degree()) return false;
  std::vector<Int> r = f.coeffs();
  std::vector<Int> q(static_cast<std::size_t>(f.degree() - g.degree() + 1));
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), gc[dg].get_mpz_t())) return false;
    Int c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), gc[dg].get_mpz_t());
    const std::size_t shift = i - dg;
    q[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), gc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (r[i] != 0) return false;
  }
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

void pseudo_divide(const IntPoly& f, const IntPoly& g, IntPoly& q, IntPoly& r) {
  if (g.is_zero()) throw DomainError("polyring", "polyring: division by the zero polynomial");
  if (f.degree() < g.degree()) {
    q = {};
    r = f;
    return;
  }
  const int dg = g.degree();
  int steps = f.degree() - dg + 1;
  std::vector<Int> rem = f.coeffs();
  std::vector<Int> quo(static_cast<std::size_t>(steps), Int(0));
  const Int& lc = g.leading();
  for (int i = f.degree(); i >= dg; --i) {
    // rem = lc*rem - rem[i] x^(i-dg) g ; quo = lc*quo + rem[i] x^(i-dg)
    const Int top = rem[static_cast<std::size_t>(i)];
    for (auto& c : quo) c *= lc;
    quo[static_cast<std::size_t>(i - dg)] += top;
    for (auto& c : rem) c *= lc;
    for (int j = 0; j <= dg; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - dg + j)].get_mpz_t(), top.get_mpz_t(),
                 g.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    --steps;
  }
  q = IntPoly(std::move(quo));
  r = IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) return {};
  if (a_in.is_zero()) return b_in.primitive_part();
  if (b_in.is_zero()) return a_in.primitive_part();
  IntPoly a = a_in.primitive_part(), b = b_in.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly q, r;
    pseudo_divide(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part();
}

PlanePoly::PlanePoly(std::map<Monomial, Int> terms) {
  for (auto& [m, c] : terms) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }
  for (const auto& [m, c] : terms_) y_degree_ = std::max(y_degree_, m.second);
  if (y_degree_ < 2) {
    throw DomainError("polyring", "polyring: plane polynomial must have y-degree at least 2");
  }
  const IntPoly top = coeff_in_y(y_degree_);
  if (!(top.degree() == 0 && top.leading() == 1)) {
    throw DomainError("polyring", "polyring: plane polynomial must be monic in y");
  }
}

unsigned PlanePoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

IntPoly PlanePoly::coeff_in_y(unsigned j) const {
  std::vector<Int> v;
  for (const auto& [m, c] : terms_) {
    if (m.second != j) continue;
    if (v.size() <= m.first) v.resize(m.first + 1, Int(0));
    v[m.first] = c;
  }
  return IntPoly(std::move(v));
}

IntPoly PlanePoly::specialize_x(const Int& n) const {
  std::vector<Int> v(y_degree_ + 1, Int(0));
  for (unsigned j = 0; j <= y_degree_; ++j) v[j] = coeff_in_y(j)(n);
  return IntPoly(std::move(v));
}

std::string PlanePoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  // descending y-degree, then descending x-degree
  std::vector<std::pair<Monomial, Int>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  for (const auto& [m, c] : ordered) {
    std::string mono = power('x', m.first);
    const std::string ypart = power('y', m.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    append_term(out, first, c, mono);
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace rfdiv::polyring
