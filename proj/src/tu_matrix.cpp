#include "regflow/tu_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace regflow {
namespace {

// Fraction-free elimination; exact for the sizes the scan guard allows.
std::int64_t submatrix_det(const TuMatrix& m, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  std::vector<std::int64_t> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i * k + j] = m.at(rows[i], cols[j]);

  std::int64_t prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (a[p * k + p] == 0) {
      int swap_row = -1;
      for (int i = p + 1; i < k; ++i)
        if (a[i * k + p] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap_row * k + j]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j)
        a[i * k + j] = (a[p * k + p] * a[i * k + j] - a[i * k + p] * a[p * k + j]) / prev;
      a[i * k + p] = 0;
    }
    prev = a[p * k + p];
  }
  return sign * a[(k - 1) * k + (k - 1)];
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

TuMatrix::TuMatrix(int rows, int cols, const std::vector<int>& row_major_entries)
    : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw ValidationError("matrix dimensions must be at least 1x1");
  if (static_cast<std::size_t>(rows) * cols != row_major_entries.size())
    throw ValidationError("entry count does not match declared dimensions");
  entries_.reserve(row_major_entries.size());
  for (std::size_t i = 0; i < row_major_entries.size(); ++i) {
    int e = row_major_entries[i];
    if (e < -1 || e > 1)
      throw ValidationError("entry " + std::to_string(e) + " at row " +
                            std::to_string(i / cols + 1) + ", column " +
                            std::to_string(i % cols + 1) + " is not in {-1,0,+1}");
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

RatMatrix TuMatrix::to_rational() const {
  RatMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j);
  return m;
}

TuReport verify_tu(const TuMatrix& m, int size_limit, bool force) {
  if (size_limit < 1) throw ValidationError("verify_tu: size limit must be positive");
  int max_size = std::min(m.rows(), m.cols());
  if (max_size > size_limit) {
    if (!force)
      throw ValidationError("verify_tu: matrix admits " + std::to_string(max_size) +
                            "x" + std::to_string(max_size) +
                            " submatrices, beyond the size limit " +
                            std::to_string(size_limit) +
                            " (the scan is exponential; pass force to cap it)");
    max_size = size_limit;
  }

  // 1x1 submatrices are covered by the construction-time entry check.
  for (int k = 2; k <= max_size; ++k) {
    std::vector<int> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        std::int64_t det = submatrix_det(m, rows, cols);
        if (det < -1 || det > 1) return {false, rows, cols, det};
      } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
  }
  return {};
}

}  // namespace regflow
