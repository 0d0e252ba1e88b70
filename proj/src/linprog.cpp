#include "coxstack/linprog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxstack {

namespace {

using Kind = LinearConstraint::Kind;

// Scale so the first nonzero coefficient has absolute value 1; keeps
// duplicates recognizable without changing the solution set.
void normalize(LinearConstraint& c) {
  for (const Rat& x : c.coeffs) {
    if (x == 0) continue;
    Rat s = abs(x);
    for (Rat& y : c.coeffs) y /= s;
    c.rhs /= s;
    return;
  }
}

std::string key_of(const LinearConstraint& c) {
  std::ostringstream out;
  out << static_cast<int>(c.kind) << "|" << c.rhs;
  for (const Rat& x : c.coeffs) out << "," << x;
  return out.str();
}

enum class Triviality { Keep, True, False };

Triviality classify(const LinearConstraint& c) {
  if (std::any_of(c.coeffs.begin(), c.coeffs.end(),
                  [](const Rat& x) { return x != 0; }))
    return Triviality::Keep;
  bool holds = (c.kind == Kind::Eq)   ? (c.rhs == 0)
               : (c.kind == Kind::Ge) ? (c.rhs <= 0)
                                      : (c.rhs < 0);
  return holds ? Triviality::True : Triviality::False;
}

}  // namespace

bool rational_feasible(std::vector<LinearConstraint> cs, std::size_t n) {
  for (const auto& c : cs)
    if (c.coeffs.size() != n)
      throw std::invalid_argument("rational_feasible: arity mismatch");

  for (std::size_t var = 0; var < n; ++var) {
    // Prefer Gaussian substitution when an equation mentions the variable.
    std::size_t eq = cs.size();
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs[i].kind == Kind::Eq && cs[i].coeffs[var] != 0) {
        eq = i;
        break;
      }
    std::vector<LinearConstraint> next;
    if (eq != cs.size()) {
      LinearConstraint pivot = cs[eq];
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i == eq) continue;
        LinearConstraint c = cs[i];
        if (c.coeffs[var] != 0) {
          Rat f = c.coeffs[var] / pivot.coeffs[var];
          for (std::size_t j = 0; j < n; ++j)
            c.coeffs[j] -= f * pivot.coeffs[j];
          c.rhs -= f * pivot.rhs;
        }
        next.push_back(std::move(c));
      }
    } else {
      // Classic Fourier-Motzkin on the inequalities.
      std::vector<LinearConstraint> lower, upper;
      for (auto& c : cs) {
        if (c.coeffs[var] > 0)
          lower.push_back(c);
        else if (c.coeffs[var] < 0)
          upper.push_back(c);
        else
          next.push_back(c);
      }
      for (const auto& lo : lower)
        for (const auto& up : upper) {
          // lo: a x >= ..., a > 0; up: -b x >= ..., b > 0. Combine to drop x.
          Rat a = lo.coeffs[var], b = -up.coeffs[var];
          LinearConstraint c;
          c.coeffs.resize(n);
          for (std::size_t j = 0; j < n; ++j)
            c.coeffs[j] = b * lo.coeffs[j] + a * up.coeffs[j];
          c.rhs = b * lo.rhs + a * up.rhs;
          c.kind = (lo.kind == Kind::Gt || up.kind == Kind::Gt) ? Kind::Gt
                                                                : Kind::Ge;
          next.push_back(std::move(c));
        }
    }

    std::set<std::string> seen;
    cs.clear();
    for (auto& c : next) {
      switch (classify(c)) {
        case Triviality::False:
          return false;
        case Triviality::True:
          break;
        case Triviality::Keep:
          normalize(c);
          if (seen.insert(key_of(c)).second) cs.push_back(std::move(c));
          break;
      }
    }
  }

  return std::all_of(cs.begin(), cs.end(), [](const LinearConstraint& c) {
    return classify(c) != Triviality::False;
  });
}

}  // namespace coxstack
