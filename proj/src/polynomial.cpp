#include "coxstack/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "coxstack/error.hpp"

namespace coxstack {

Monomial Monomial::variable(int var, long long exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  if (exp > 0) m.exps_.push_back({var, exp});
  return m;
}

long long Monomial::exponent(int var) const {
  for (const auto& [v, e] : exps_)
    if (v == var) return e;
  return 0;
}

void Monomial::set_exponent(int var, long long exp) {
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  auto it = std::lower_bound(
      exps_.begin(), exps_.end(), var,
      [](const auto& p, int v) { return p.first < v; });
  if (it != exps_.end() && it->first == var) {
    if (exp == 0)
      exps_.erase(it);
    else
      it->second = exp;
  } else if (exp != 0) {
    exps_.insert(it, {var, exp});
  }
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

bool Monomial::is_single_variable(int& var, long long& exp) const {
  if (exps_.size() != 1) return false;
  var = exps_[0].first;
  exp = exps_[0].second;
  return true;
}

std::set<int> Monomial::support() const {
  std::set<int> s;
  for (const auto& [v, e] : exps_) s.insert(v);
  return s;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  auto a = exps_.begin(), b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      out.exps_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::power(long long e) const {
  if (e < 0) throw std::invalid_argument("Monomial: negative power");
  Monomial out;
  if (e == 0) return out;
  for (const auto& [v, x] : exps_) out.exps_.push_back({v, x * e});
  return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Equal total degree: earlier variable with the higher exponent wins.
  auto ia = a.exponents().begin(), ib = b.exponents().begin();
  while (ia != a.exponents().end() && ib != b.exponents().end()) {
    if (ia->first != ib->first)
      // The one owning the smaller index has positive exponent there.
      return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;  // identical (both exhausted; degrees already matched)
}

Polynomial Polynomial::constant(Rat c) {
  Polynomial p;
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::variable(int var, long long exp) {
  Polynomial p;
  p.add_term(Monomial::variable(var, exp), 1);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty())
    throw std::logic_error("Polynomial: zero polynomial has no leading term");
  return terms_.begin()->first;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_)
      out.add_term(ma.times(mb), ca * cb);
  return out;
}

Polynomial Polynomial::negated() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return {};
  return scaled(Rat(1) / terms_.begin()->second);
}

std::set<int> Polynomial::support() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) s.insert(v);
  return s;
}

bool Polynomial::uses_variable(int var) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(var) != 0) return true;
  return false;
}

Polynomial Polynomial::substitute(int var, const Monomial& rep) const {
  return substitute(var, Rat(1), rep);
}

Polynomial Polynomial::substitute(int var, const Rat& coeff,
                                  const Monomial& rep) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    long long e = m.exponent(var);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Rat scale = 1;
    for (long long i = 0; i < e; ++i) scale *= coeff;
    Monomial rest = m;
    rest.set_exponent(var, 0);
    out.add_term(rest.times(rep.power(e)), c * scale);
  }
  return out;
}

Polynomial Polynomial::rename_variables(const std::vector<int>& mapping) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& [v, e] : m.exponents()) {
      if (v < 0 || static_cast<std::size_t>(v) >= mapping.size() ||
          mapping[v] < 0)
        throw std::logic_error("rename_variables: unmapped variable");
      renamed.set_exponent(mapping[v], e);
    }
    out.add_term(renamed, c);
  }
  return out;
}

std::string Polynomial::to_string(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;

    bool printed = false;
    if (a != 1 || m.is_one()) {
      out << numerator(a).str();
      if (denominator(a) != 1) out << "/" << denominator(a).str();
      printed = true;
    }
    for (const auto& [v, e] : m.exponents()) {
      if (printed) out << "*";
      if (static_cast<std::size_t>(v) >= names.size())
        throw std::logic_error("to_string: variable without a name");
      out << names[v];
      if (e != 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

namespace {

struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, 0, static_cast<int>(pos) + 1);
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return Int(std::string(text.substr(start, pos - start)));
  }
  Rat number() {
    Int num = integer();
    if (peek() == '/') {
      ++pos;
      Int den = integer();
      if (den == 0) fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos]))))
      fail("expected a variable name");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& var_names) {
  PolyLexer lx{text};
  Polynomial result;
  bool expect_term = true;
  bool any_term = false;
  Rat sign = 1;

  while (!lx.done()) {
    char c = lx.peek();
    if (expect_term) {
      if (c == '-') {
        sign = -sign;
        ++lx.pos;
        continue;
      }
      if (c == '+') {
        ++lx.pos;
        continue;
      }
      // One term: factors joined by '*'.
      Rat coeff = sign;
      Monomial mono;
      for (;;) {
        char f = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(f))) {
          coeff *= lx.number();
        } else if (std::isalpha(static_cast<unsigned char>(f))) {
          std::string nm = lx.name();
          auto it = std::find(var_names.begin(), var_names.end(), nm);
          if (it == var_names.end()) lx.fail("unknown variable '" + nm + "'");
          long long exp = 1;
          if (lx.peek() == '^') {
            ++lx.pos;
            Int e = lx.integer();
            if (e > 1'000'000) lx.fail("exponent too large");
            exp = static_cast<long long>(e);
          }
          int var = static_cast<int>(it - var_names.begin());
          mono.set_exponent(var, mono.exponent(var) + exp);
        } else {
          lx.fail("expected a coefficient or variable");
        }
        if (lx.peek() == '*') {
          ++lx.pos;
          continue;
        }
        break;
      }
      result.add_term(mono, coeff);
      sign = 1;
      expect_term = false;
      any_term = true;
    } else {
      if (c == '+') {
        ++lx.pos;
        expect_term = true;
      } else if (c == '-') {
        ++lx.pos;
        sign = -1;
        expect_term = true;
      } else {
        lx.fail("expected '+' or '-'");
      }
    }
  }
  if (expect_term || !any_term) lx.fail("expected a term");
  return result;
}

}  // namespace coxstack
