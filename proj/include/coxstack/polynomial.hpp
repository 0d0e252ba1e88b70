#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coxstack/matrix.hpp"

namespace coxstack {

/// Sparse exponent vector: (variable index, exponent) pairs, strictly
/// ascending indices, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial variable(int var, long long exp = 1);

  const std::vector<std::pair<int, long long>>& exponents() const {
    return exps_;
  }
  long long exponent(int var) const;
  void set_exponent(int var, long long exp);
  long long total_degree() const;
  bool is_one() const { return exps_.empty(); }
  /// x^e for a single variable x; exponent returned through the out-params.
  bool is_single_variable(int& var, long long& exp) const;
  std::set<int> support() const;

  Monomial times(const Monomial& other) const;
  Monomial power(long long e) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::pair<int, long long>> exps_;
};

/// Graded-lexicographic order (total degree first, then earlier variables
/// weigh more). Serialisation lists terms in descending grlex.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

/// Sparse polynomial with exact rational coefficients. No zero coefficients
/// are stored; terms are kept in descending grlex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  Polynomial() = default;
  static Polynomial constant(Rat c);
  static Polynomial variable(int var, long long exp = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Leading term in grlex.
  const Monomial& leading_monomial() const;

  void add_term(const Monomial& m, const Rat& c);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial negated() const;
  Polynomial scaled(const Rat& c) const;
  /// Leading coefficient rescaled to 1; zero stays zero.
  Polynomial monic() const;

  bool operator==(const Polynomial& other) const = default;

  std::set<int> support() const;
  bool uses_variable(int var) const;
  /// Every occurrence of var replaced by the monomial m.
  Polynomial substitute(int var, const Monomial& m) const;
  /// Every occurrence of var replaced by coeff * m.
  Polynomial substitute(int var, const Rat& coeff, const Monomial& m) const;
  /// Variable indices rewritten through mapping (mapping[old] = new);
  /// every used index must be mapped (>= 0).
  Polynomial rename_variables(const std::vector<int>& mapping) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  TermMap terms_;
};

/// Parses the polynomial syntax used by stack documents and the CLI:
/// rational coefficients, + - * ^, names resolved against var_names.
/// Examples: "z^3 - x1", "u^2 - v*w", "1/2*x*y - 3".
/// Throws ParseError on bad syntax or an unknown variable.
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& var_names);

}  // namespace coxstack
