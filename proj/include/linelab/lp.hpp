#pragma once

#include <optional>
#include <vector>

#include "linelab/rational.hpp"

namespace linelab {

// Feasibility system over x >= 0:
//   eq_lhs[i] . x == eq_rhs[i]
//   ge_lhs[i] . x >= ge_rhs[i]
// All rows must have length nvars.
struct LinearSystem {
  int nvars = 0;
  std::vector<std::vector<Rat>> eq_lhs;
  std::vector<Rat> eq_rhs;
  std::vector<std::vector<Rat>> ge_lhs;
  std::vector<Rat> ge_rhs;

  void add_eq(std::vector<Rat> lhs, Rat rhs);
  void add_ge(std::vector<Rat> lhs, Rat rhs);
};

// Exact phase-1 simplex with Bland's rule: returns a feasible point, or
// nullopt when the system is infeasible. Deterministic and terminating.
std::optional<std::vector<Rat>> lp_feasible_point(const LinearSystem& s);

}  // namespace linelab
