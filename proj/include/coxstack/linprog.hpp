#pragma once

#include <vector>

#include "coxstack/matrix.hpp"

namespace coxstack {

/// One linear condition  sum coeffs[i] * x_i  REL  rhs.
struct LinearConstraint {
  enum class Kind { Eq, Ge, Gt };
  std::vector<Rat> coeffs;
  Rat rhs;
  Kind kind = Kind::Ge;
};

/// Exact feasibility of a rational linear system by Fourier-Motzkin
/// elimination. Decides strict and non-strict inequalities; no witness.
bool rational_feasible(std::vector<LinearConstraint> constraints,
                       std::size_t num_vars);

}  // namespace coxstack
