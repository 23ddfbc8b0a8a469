#include "regflow/linalg.hpp"

#include <sstream>

namespace regflow {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational parse_rational(const std::string& token) {
  if (token.empty()) throw ValidationError("empty rational token");
  auto parse_int = [](const std::string& s) -> Int {
    if (s.empty()) throw ValidationError("empty integer token");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ValidationError("bad integer '" + s + "'");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ValidationError("bad integer '" + s + "'");
    return Int(s);
  };
  auto slash = token.find('/');
  if (slash == std::string::npos) return Rational(parse_int(token));
  Int num = parse_int(token.substr(0, slash));
  Int den = parse_int(token.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + token + "'");
  return Rational(num, den);
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw ValidationError("matrix dimensions must be at least 1x1");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) throw ValidationError("matrix needs at least one row");
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw ValidationError("ragged rows in matrix construction");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RowReduceResult row_reduce(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    Rational inv = a(row, col);
    for (int j = 0; j < a.cols(); ++j) a(row, j) /= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational factor = a(i, col);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const RatMatrix& m) {
  return static_cast<int>(row_reduce(m).pivot_cols.size());
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  auto [rref, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rref(static_cast<int>(i), free_col);
    // normalize: first nonzero entry +1
    for (const Rational& x : v) {
      if (x != 0) {
        if (x != 1) {
          Rational lead = x;
          for (Rational& y : v) y /= lead;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const RatVector& v, const std::vector<RatVector>& basis) {
  for (const RatVector& b : basis)
    if (b.size() != v.size()) throw ValidationError("in_span: dimension mismatch");
  bool v_zero = true;
  for (const Rational& x : v)
    if (x != 0) {
      v_zero = false;
      break;
    }
  if (v_zero) return true;
  if (basis.empty()) return false;

  RatMatrix b = RatMatrix::from_rows(basis);
  std::vector<RatVector> with_v = basis;
  with_v.push_back(v);
  return rank(b) == rank(RatMatrix::from_rows(with_v));
}

RatVector matvec(const RatMatrix& m, const RatVector& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw ValidationError("matvec: dimension mismatch");
  RatVector out(m.rows(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace regflow
