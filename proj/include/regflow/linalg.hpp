#pragma once
#include <vector>

#include "regflow/rational.hpp"

namespace regflow {

/// Dense rational matrix. Desk-scale dimensions; no sparsity machinery.
class RatMatrix {
public:
  RatMatrix(int rows, int cols);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return entries_[i * cols_ + j]; }

  bool operator==(const RatMatrix&) const = default;

private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

struct RowReduceResult {
  RatMatrix rref;
  std::vector<int> pivot_cols;  // ascending
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RowReduceResult row_reduce(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Basis of the null space { v : Mv = 0 }. Empty iff M has full column rank.
/// Each vector is scaled so its first nonzero entry is +1.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// True iff v is a rational linear combination of the basis vectors.
/// Throws ValidationError when dimensions disagree.
bool in_span(const RatVector& v, const std::vector<RatVector>& basis);

RatVector matvec(const RatMatrix& m, const RatVector& v);

}  // namespace regflow
