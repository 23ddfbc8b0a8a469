#include "regflow/regular_space.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

namespace regflow {
namespace {

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

std::string format_support(std::uint64_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int j = 0; j < 64; ++j) {
    if (!(mask >> j & 1)) continue;
    if (!first) os << ",";
    os << j + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

// Rank by fraction-free integer elimination. Intermediate entries are minors
// of the input, so desk-scale {-1,0,+1} matrices stay far inside int64.
int int_rank(std::vector<std::int64_t> a, int rows, int cols) {
  int r = 0;
  std::int64_t prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i * cols + j] =
            (a[r * cols + c] * a[i * cols + j] - a[i * cols + c] * a[r * cols + j]) / prev;
      a[i * cols + c] = 0;
    }
    prev = a[r * cols + c];
    ++r;
  }
  return r;
}

bool conforms_to(const SignedVector& p, const RatVector& x) {
  for (const auto& [index, sign] : p.support()) {
    if (sign > 0 ? !(x[index] > 0) : !(x[index] < 0)) return false;
  }
  return true;
}

}  // namespace

RegularSpace::RegularSpace(TuMatrix generator, SpaceMode mode)
    : ground_size_(generator.cols()), mode_(mode), generator_(std::move(generator)) {
  RatMatrix g = generator_.to_rational();
  if (mode_ == SpaceMode::Kernel) {
    basis_ = kernel_basis(g);
  } else {
    auto [rref, pivots] = row_reduce(g);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      RatVector row(ground_size_);
      for (int j = 0; j < ground_size_; ++j) row[j] = rref(static_cast<int>(i), j);
      basis_.push_back(std::move(row));
    }
  }
  if (!basis_.empty()) {
    auto [rref, pivots] = row_reduce(RatMatrix::from_rows(basis_));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      RatVector row(ground_size_);
      for (int j = 0; j < ground_size_; ++j) row[j] = rref(static_cast<int>(i), j);
      reduced_rows_.push_back(std::move(row));
    }
    reduced_pivots_ = pivots;
  }
}

bool RegularSpace::contains(const RatVector& v) const {
  if (static_cast<int>(v.size()) != ground_size_)
    throw ValidationError("membership test: dimension mismatch");
  RatVector residue = v;
  for (std::size_t i = 0; i < reduced_rows_.size(); ++i) {
    const Rational& factor = residue[reduced_pivots_[i]];
    if (factor == 0) continue;
    Rational f = factor;
    for (int j = 0; j < ground_size_; ++j)
      if (reduced_rows_[i][j] != 0) residue[j] -= f * reduced_rows_[i][j];
  }
  for (const Rational& x : residue)
    if (x != 0) return false;
  return true;
}

int RegularSpace::restricted_nullity(std::uint64_t support_mask) const {
  int d = dimension();
  if (d == 0) return 0;
  // Constraints: y = sum_i alpha_i basis_i must vanish outside the mask.
  std::vector<int> outside;
  for (int j = 0; j < ground_size_; ++j)
    if (!(support_mask >> j & 1)) outside.push_back(j);
  if (outside.empty()) return d;

  bool small_integer = true;
  for (const RatVector& b : basis_) {
    for (int j : outside)
      if (b[j] != 0 && b[j] != 1 && b[j] != -1) {
        small_integer = false;
        break;
      }
    if (!small_integer) break;
  }
  int rows = static_cast<int>(outside.size());
  if (small_integer) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(rows) * d);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < d; ++k)
        a[i * d + k] = static_cast<std::int64_t>(basis_[k][outside[i]].convert_to<long long>());
    return d - int_rank(std::move(a), rows, d);
  }
  RatMatrix c(rows, d);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < d; ++k) c(i, k) = basis_[k][outside[i]];
  return d - rank(c);
}

const std::vector<SignedVector>& RegularSpace::circuits(int guard) const {
  if (ground_size_ > guard)
    throw ValidationError("circuit enumeration guard: ground size " +
                          std::to_string(ground_size_) + " exceeds " + std::to_string(guard));
  std::call_once(circuits_once_, [this] {
    int d = dimension();
    if (d == 0) return;
    int max_support = ground_size_ - d + 1;
    std::vector<std::uint64_t> found_masks;
    for (int s = 1; s <= max_support; ++s) {
      std::vector<int> comb(s);
      std::iota(comb.begin(), comb.end(), 0);
      do {
        std::uint64_t mask = 0;
        for (int j : comb) mask |= std::uint64_t{1} << j;
        bool contains_smaller = false;
        for (std::uint64_t fm : found_masks)
          if ((fm & mask) == fm) {
            contains_smaller = true;
            break;
          }
        if (contains_smaller) continue;
        if (restricted_nullity(mask) == 0) continue;

        // Minimal support reached: solve for the (unique up to scale) member.
        std::vector<int> outside;
        for (int j = 0; j < ground_size_; ++j)
          if (!(mask >> j & 1)) outside.push_back(j);
        RatVector coeff;
        if (outside.empty()) {
          coeff.assign(d, Rational(0));
          coeff[0] = 1;
        } else {
          RatMatrix c(static_cast<int>(outside.size()), d);
          for (std::size_t i = 0; i < outside.size(); ++i)
            for (int k = 0; k < d; ++k) c(static_cast<int>(i), k) = basis_[k][outside[i]];
          auto ker = kernel_basis(c);
          if (ker.size() != 1)
            throw InvariantError("circuit scan: support " + format_support(mask) +
                                 " yields a " + std::to_string(ker.size()) +
                                 "-dimensional member set; enumeration order violated");
          coeff = ker[0];
        }
        RatVector y(ground_size_, Rational(0));
        for (int k = 0; k < d; ++k)
          if (coeff[k] != 0)
            for (int j = 0; j < ground_size_; ++j)
              if (basis_[k][j] != 0) y[j] += coeff[k] * basis_[k][j];
        for (const Rational& x : y) {
          if (x != 0) {
            if (x != 1) {
              Rational lead = x;
              for (Rational& z : y) z /= lead;
            }
            break;
          }
        }
        for (const Rational& x : y)
          if (x != 0 && x != 1 && x != -1)
            throw InvariantError(
                "space is not regular: the elementary vector with support " +
                format_support(mask) + " does not scale to {-1,0,+1} (entry " +
                to_string(x) + ")");
        SignedVector sv = SignedVector::from_rational(y);
        if (sv.support_mask() != mask)
          throw InvariantError("circuit scan: extracted support differs from scanned support " +
                               format_support(mask));
        circuits_.push_back(std::move(sv));
        found_masks.push_back(mask);
      } while (next_combination(comb, ground_size_));
    }
  });
  return circuits_;
}

void RegularSpace::require_member(const RatVector& v, const char* op) const {
  bool zero = true;
  for (const Rational& x : v)
    if (x != 0) {
      zero = false;
      break;
    }
  if (zero) throw ValidationError(std::string(op) + ": zero vector");
  if (!contains(v)) throw ValidationError(std::string(op) + ": vector is not a member of the space");
}

bool RegularSpace::is_elementary(const RatVector& v) const {
  require_member(v, "is_elementary");
  std::uint64_t mask = 0;
  for (int j = 0; j < ground_size_; ++j)
    if (v[j] != 0) mask |= std::uint64_t{1} << j;
  // A strictly smaller nonzero support would avoid some index of |v|.
  for (int j = 0; j < ground_size_; ++j) {
    if (!(mask >> j & 1)) continue;
    std::uint64_t sub = mask & ~(std::uint64_t{1} << j);
    if (restricted_nullity(sub) > 0) return false;
  }
  return true;
}

SignedVector RegularSpace::conforming_circuit(const RatVector& x) const {
  std::uint64_t xmask = 0;
  for (int j = 0; j < ground_size_; ++j)
    if (x[j] != 0) xmask |= std::uint64_t{1} << j;
  for (const SignedVector& c : circuits()) {
    if ((c.support_mask() & xmask) != c.support_mask()) continue;
    if (conforms_to(c, x)) return c;
    SignedVector neg = c.negated();
    if (conforms_to(neg, x)) return neg;
  }
  throw InvariantError("no conforming primitive vector inside support " + format_support(xmask) +
                       "; input space is not regular or membership was not checked");
}

SignedVector RegularSpace::find_conforming_elementary(const RatVector& x) const {
  require_member(x, "find_conforming_elementary");
  return conforming_circuit(x);
}

std::vector<DecompTerm> RegularSpace::conformal_decomposition(const RatVector& x) const {
  if (static_cast<int>(x.size()) != ground_size_)
    throw ValidationError("conformal_decomposition: dimension mismatch");
  for (const Rational& v : x)
    if (!is_integer(v))
      throw ValidationError("conformal_decomposition: vector is not integral (entry " +
                            to_string(v) + ")");
  bool zero = true;
  for (const Rational& v : x)
    if (v != 0) {
      zero = false;
      break;
    }
  if (zero) return {};
  require_member(x, "conformal_decomposition");

  std::vector<DecompTerm> terms;
  RatVector residual = x;
  while (true) {
    bool residual_zero = true;
    for (const Rational& v : residual)
      if (v != 0) {
        residual_zero = false;
        break;
      }
    if (residual_zero) break;
    SignedVector p = conforming_circuit(residual);
    // Step size: largest multiple of p that stays conforming; at least one
    // component of the residual zeroes out.
    Int step = 0;
    for (const auto& [index, sign] : p.support()) {
      Int mag = abs(numerator(residual[index]));
      if (step == 0 || mag < step) step = mag;
    }
    for (const auto& [index, sign] : p.support()) residual[index] -= Rational(step) * sign;
    terms.push_back({std::move(p), step});
  }
  return terms;
}

RatVector decomposition_sum(const std::vector<DecompTerm>& terms, int ground_size) {
  RatVector sum(ground_size, Rational(0));
  for (const DecompTerm& t : terms)
    for (const auto& [index, sign] : t.vec.support()) sum[index] += Rational(t.count) * sign;
  return sum;
}

Int decomposition_size(const std::vector<DecompTerm>& terms) {
  Int k = 0;
  for (const DecompTerm& t : terms) k += t.count;
  return k;
}

}  // namespace regflow
