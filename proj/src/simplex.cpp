#include "polarline/simplex.hpp"

#include <optional>

#include "polarline/error.hpp"

namespace polarline::lp {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : columns_(columns),
        cells_(rows * (columns + 1)),
        basis_(rows),
        rows_(rows) {}

  Scalar& at(std::size_t r, std::size_t c) { return cells_[r * (columns_ + 1) + c]; }
  Scalar& rhs(std::size_t r) { return at(r, columns_); }
  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const Scalar inv = 1 / at(row, col);
    for (std::size_t c = 0; c <= columns_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Scalar f = at(r, col);
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (at(row, c) != 0) at(r, c) -= f * at(row, c);
      }
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    const std::size_t width = columns_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((row + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

  // Maximizes cost . x over columns with allowed[c]. Returns false when
  // unbounded.
  bool optimize(const std::vector<Scalar>& cost,
                const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < columns_ && !entering; ++c) {
        if (!allowed[c]) continue;
        Scalar reduced = cost[c];
        for (std::size_t r = 0; r < rows_; ++r) {
          if (at(r, c) != 0) reduced -= cost[basis_[r]] * at(r, c);
        }
        if (reduced > 0) entering = c;
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      std::optional<std::size_t> leaving;
      Scalar best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, col) <= 0) continue;
        Scalar ratio = rhs(r) / at(r, col);
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, col);
    }
  }

 private:
  std::size_t columns_;
  std::vector<Scalar> cells_;
  std::vector<std::size_t> basis_;
  std::size_t rows_;
};

}  // namespace

void Problem::add(std::vector<Scalar> coefficients, Relation relation,
                  Scalar rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

Solution solve(const Problem& problem) {
  const std::size_t n = problem.variables;
  const std::size_t m = problem.constraints.size();
  if (problem.objective.size() != n) {
    throw Error(ErrorCode::PreconditionViolated, "objective has wrong length");
  }

  // Column layout: originals, one slack/surplus per inequality, one
  // artificial per row lacking a natural basic column.
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  std::vector<bool> flip(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.constraints[i];
    if (row.coefficients.size() != n) {
      throw Error(ErrorCode::PreconditionViolated,
                  "constraint has wrong length");
    }
    flip[i] = row.rhs < 0;
    Relation rel = row.relation;
    if (flip[i] && rel != Relation::Equal) {
      rel = rel == Relation::LessEqual ? Relation::GreaterEqual
                                       : Relation::LessEqual;
    }
    if (rel != Relation::Equal) ++slacks;
    if (rel != Relation::LessEqual) ++artificials;
  }
  const std::size_t columns = n + slacks + artificials;
  Tableau t(m, columns);
  std::vector<bool> is_artificial(columns, false);
  std::size_t next_slack = n;
  std::size_t next_artificial = n + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.constraints[i];
    const Scalar sign = flip[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * row.coefficients[j];
    t.rhs(i) = sign * row.rhs;
    Relation rel = row.relation;
    if (flip[i] && rel != Relation::Equal) {
      rel = rel == Relation::LessEqual ? Relation::GreaterEqual
                                       : Relation::LessEqual;
    }
    if (rel == Relation::LessEqual) {
      t.at(i, next_slack) = 1;
      t.basis()[i] = next_slack++;
    } else {
      if (rel == Relation::GreaterEqual) t.at(i, next_slack++) = -1;
      t.at(i, next_artificial) = 1;
      is_artificial[next_artificial] = true;
      t.basis()[i] = next_artificial++;
    }
  }

  std::vector<bool> all(columns, true);
  if (artificials > 0) {
    std::vector<Scalar> phase1(columns, 0);
    for (std::size_t c = 0; c < columns; ++c) {
      if (is_artificial[c]) phase1[c] = -1;
    }
    t.optimize(phase1, all);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (is_artificial[t.basis()[r]] && t.rhs(r) != 0) return {};
    }
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t r = 0; r < t.rows();) {
      if (!is_artificial[t.basis()[r]]) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < columns && !col; ++c) {
        if (!is_artificial[c] && t.at(r, c) != 0) col = c;
      }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
  }

  std::vector<Scalar> cost(columns, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
  std::vector<bool> allowed(columns);
  for (std::size_t c = 0; c < columns; ++c) allowed[c] = !is_artificial[c];
  Solution s;
  if (!t.optimize(cost, allowed)) {
    s.status = Status::Unbounded;
    return s;
  }
  s.status = Status::Optimal;
  s.x.assign(n, 0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) s.x[t.basis()[r]] = t.rhs(r);
  }
  s.value = 0;
  for (std::size_t j = 0; j < n; ++j) s.value += problem.objective[j] * s.x[j];
  return s;
}

}  // namespace polarline::lp
