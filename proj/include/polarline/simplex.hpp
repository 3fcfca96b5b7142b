#pragma once

// A small dense two-phase simplex over exact rationals. Bland's rule keeps it
// from cycling; the problems it serves have a few dozen rows at most.

#include <cstddef>
#include <vector>

#include "polarline/scalar.hpp"

namespace polarline::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<Scalar> coefficients;
  Relation relation = Relation::LessEqual;
  Scalar rhs;
};

// maximize objective . x  subject to constraints, x >= 0.
struct Problem {
  std::size_t variables = 0;
  std::vector<Scalar> objective;
  std::vector<Constraint> constraints;

  void add(std::vector<Scalar> coefficients, Relation relation, Scalar rhs);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Scalar value;
  std::vector<Scalar> x;
};

Solution solve(const Problem& problem);

}  // namespace polarline::lp
