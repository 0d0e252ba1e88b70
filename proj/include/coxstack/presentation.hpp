#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxstack/abelian.hpp"
#include "coxstack/polynomial.hpp"

namespace coxstack {

struct Variable {
  std::string name;
  GroupElement degree;  // in the grading group's coordinates
};

/// Graded polynomial presentation: variables with degrees, relation
/// polynomials and the generators of the irrelevant ideal.
struct CoxPresentation {
  AbelianGroup grading;
  std::vector<Variable> variables;
  std::vector<Polynomial> relations;
  std::vector<Polynomial> irrelevant;

  std::vector<std::string> variable_names() const;
  int variable_index(const std::string& name) const;  // -1 when absent
};

GroupElement degree_of_monomial(const CoxPresentation& p, const Monomial& m);

/// Common degree of all terms, or nullopt when the terms disagree. The zero
/// polynomial counts as homogeneous of degree zero.
std::optional<GroupElement> degree_of_polynomial(const CoxPresentation& p,
                                                 const Polynomial& poly);

struct HomogeneityEntry {
  enum class Where { Relation, Irrelevant };
  Where where;
  std::size_t index;
  bool homogeneous;
  std::optional<GroupElement> degree;  // set when homogeneous
  // Two witness degrees of distinct terms when inhomogeneous.
  std::optional<std::pair<GroupElement, GroupElement>> mismatch;
};

struct HomogeneityReport {
  std::vector<HomogeneityEntry> entries;
  bool all_homogeneous = true;
};

HomogeneityReport check_homogeneous(const CoxPresentation& p);

/// Rewrites away root relations z^r - x: whenever the root variable z occurs
/// in no other relation and x is a different variable, substitutes x := z^r
/// through every relation and irrelevant generator, then drops x and the
/// relation. Repeats until no such relation is left.
CoxPresentation eliminate_simple_roots(const CoxPresentation& p);

/// True when eliminate_simple_roots clears the relation list.
bool is_polynomial(const CoxPresentation& p);

enum class SmoothVerdict { Smooth, Singular, SmoothOnComplement, Unknown };

struct SingularityReport {
  SmoothVerdict verdict = SmoothVerdict::Unknown;
  /// Coordinate strata of the singular locus: variable index sets forced to
  /// vanish simultaneously.
  std::vector<std::vector<int>> strata;
  bool inside_irrelevant = false;
  std::string detail;
};

/// Singular locus of a single disjoint-support binomial relation, as a union
/// of coordinate strata, plus whether the locus is swallowed by V(J_irr).
/// Anything outside that restricted class comes back Unknown.
SingularityReport binomial_singular_locus(const CoxPresentation& p);

/// Smoothness of Spec R \ V(J_irr): Smooth for empty relation lists,
/// otherwise delegates to binomial_singular_locus.
SingularityReport smoothness(const CoxPresentation& p);

enum class UnitsVerdict { Pass, Fail, Unknown };

struct UnitsCheckResult {
  UnitsVerdict verdict = UnitsVerdict::Unknown;
  std::optional<Monomial> witness;  // nonconstant degree-zero monomial on Fail
  std::string detail;
};

/// Checks that the only degree-zero monomials are the constants. Pass is
/// certified by all free degree parts sharing an open half-space; Fail by a
/// bounded search for a degree-zero monomial in the variables with nonzero
/// free degree part. Everything else is Unknown.
UnitsCheckResult degree_zero_subalgebra_check(const CoxPresentation& p);

}  // namespace coxstack
