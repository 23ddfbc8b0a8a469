#pragma once
#include <cstdint>
#include <vector>

#include "regflow/linalg.hpp"

namespace regflow {

/// Integer matrix with entries in {-1,0,+1}, claimed totally unimodular.
/// The entry range is checked at construction; full TU verification is the
/// opt-in exponential scan in verify_tu.
class TuMatrix {
public:
  TuMatrix(int rows, int cols, const std::vector<int>& row_major_entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMatrix to_rational() const;

  bool operator==(const TuMatrix&) const = default;

private:
  int rows_;
  int cols_;
  std::vector<std::int8_t> entries_;
};

struct TuReport {
  bool tu = true;
  // Witness submatrix when tu is false (0-based indices).
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  std::int64_t witness_det = 0;
};

/// Exhaustive determinant scan over all square submatrices up to size_limit.
/// Refuses matrices with min(rows, cols) > size_limit unless force is set,
/// in which case only submatrices up to size_limit are scanned.
TuReport verify_tu(const TuMatrix& m, int size_limit = 8, bool force = false);

}  // namespace regflow
