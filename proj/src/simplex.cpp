#include <vector>

#include "regflow/linalg.hpp"
#include "regflow/reference.hpp"

namespace regflow {
namespace {

// Dense tableau simplex on min c.x s.t. Ax = b, x >= 0, with b >= 0.
// Bland's rule throughout, so no cycling. Everything exact.
class Tableau {
public:
  Tableau(const std::vector<RatVector>& a, const RatVector& b, int num_vars)
      : rows_(static_cast<int>(a.size())), vars_(num_vars) {
    // Layout: structural columns, then one artificial per row, then rhs.
    cols_ = vars_ + rows_ + 1;
    t_.assign(static_cast<std::size_t>(rows_) * cols_, Rational(0));
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) {
      bool flip = b[i] < 0;
      for (int j = 0; j < vars_; ++j) at(i, j) = flip ? -a[i][j] : a[i][j];
      at(i, vars_ + i) = 1;
      rhs(i) = flip ? -b[i] : b[i];
      basis_[i] = vars_ + i;
    }
  }

  // Minimize the phase-1 objective (sum of artificials). Returns its optimum.
  Rational run_phase1() {
    RatVector cost(vars_ + rows_, Rational(0));
    for (int i = 0; i < rows_; ++i) cost[vars_ + i] = 1;
    minimize(cost, /*allow_artificials=*/true);
    Rational value = 0;
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] >= vars_) value += rhs(i);
    return value;
  }

  // After a zero-cost phase 1: pivot leftover artificials out of the basis
  // (or mark their rows redundant), then minimize the real objective.
  // Returns false when the problem is unbounded.
  bool run_phase2(const RatVector& cost, Rational* optimum) {
    std::vector<bool> dead_row(rows_, false);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) continue;
      int enter = -1;
      for (int j = 0; j < vars_; ++j)
        if (at(i, j) != 0) {
          enter = j;
          break;
        }
      if (enter < 0)
        dead_row[i] = true;
      else
        pivot(i, enter);
    }
    RatVector full_cost(vars_ + rows_, Rational(0));
    for (int j = 0; j < vars_; ++j) full_cost[j] = cost[j];
    if (!minimize(full_cost, /*allow_artificials=*/false, &dead_row)) return false;
    Rational value = 0;
    for (int i = 0; i < rows_; ++i)
      if (!dead_row[i] && basis_[i] < vars_) value += cost[basis_[i]] * rhs(i);
    *optimum = value;
    return true;
  }

private:
  Rational& at(int i, int j) { return t_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rational& rhs(int i) { return t_[static_cast<std::size_t>(i) * cols_ + cols_ - 1]; }

  RatVector reduced_costs(const RatVector& cost, const std::vector<bool>* dead_row) {
    RatVector reduced = cost;
    for (int i = 0; i < rows_; ++i) {
      if (dead_row && (*dead_row)[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < static_cast<int>(cost.size()); ++j)
        if (at(i, j) != 0) reduced[j] -= cb * at(i, j);
    }
    return reduced;
  }

  void pivot(int row, int col) {
    Rational inv = at(row, col);
    for (int j = 0; j < cols_; ++j) at(row, j) /= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rational factor = at(i, col);
      for (int j = 0; j < cols_; ++j) at(i, j) -= factor * at(row, j);
    }
    basis_[row] = col;
  }

  // Bland: entering = lowest-index improving column; leaving = lowest basic
  // index among the ratio-test minima. Returns false on unboundedness.
  bool minimize(const RatVector& cost, bool allow_artificials,
                const std::vector<bool>* dead_row = nullptr) {
    int candidate_cols = allow_artificials ? vars_ + rows_ : vars_;
    while (true) {
      RatVector reduced = reduced_costs(cost, dead_row);
      int enter = -1;
      for (int j = 0; j < candidate_cols; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (dead_row && (*dead_row)[i]) continue;
        if (at(i, enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  int rows_;
  int vars_;
  int cols_;
  RatVector t_;
  std::vector<int> basis_;
};

}  // namespace

ReferenceResult lp_reference_solve(const Instance& inst) {
  const RegularSpace& space = inst.space();
  int n = inst.ground_size();
  int r = inst.r();
  int d = space.dimension();
  if (d == 0) return {false, Rational(0)};

  // Equality description of the space: rows spanning its orthogonal
  // complement, so f is a member iff W f = 0.
  std::vector<RatVector> w = kernel_basis(RatMatrix::from_rows(space.basis()));

  // Structural variables: f_j (j != r) in file order, then slacks for the
  // capacity rows, then f_r = u - w.
  int num_flow = n - 1;
  int vars = 2 * num_flow + 2;
  int u_col = 2 * num_flow;
  int w_col = u_col + 1;
  auto flow_col = [&](int j) { return j < r ? j : j - 1; };

  std::vector<RatVector> a;
  RatVector b;
  for (const RatVector& row : w) {
    RatVector eq(vars, Rational(0));
    for (int j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      if (j == r) {
        eq[u_col] += row[j];
        eq[w_col] -= row[j];
      } else {
        eq[flow_col(j)] += row[j];
      }
    }
    a.push_back(std::move(eq));
    b.push_back(0);
  }
  for (int j = 0; j < n; ++j) {
    if (j == r) continue;
    RatVector eq(vars, Rational(0));
    eq[flow_col(j)] = 1;
    eq[num_flow + flow_col(j)] = 1;
    a.push_back(std::move(eq));
    b.push_back(inst.capacity(j));
  }
  if (a.empty()) return {true, Rational(0)};  // nothing constrains f_r

  Tableau tableau(a, b, vars);
  if (tableau.run_phase1() != 0)
    throw InvariantError("reference LP reported infeasible, but the zero flow is feasible");

  RatVector cost(vars, Rational(0));
  cost[u_col] = -1;  // maximize u - w as minimize w - u
  cost[w_col] = 1;
  Rational optimum;
  if (!tableau.run_phase2(cost, &optimum)) return {true, Rational(0)};
  return {false, -optimum};
}

}  // namespace regflow
