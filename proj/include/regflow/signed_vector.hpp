#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "regflow/rational.hpp"

namespace regflow {

/// Sparse {-1,+1} vector over a ground set of size n: the representation for
/// primitive vectors and r-paths. Support is kept sorted by index.
class SignedVector {
public:
  using Entry = std::pair<int, int>;  // (0-based index, sign in {-1,+1})

  SignedVector(int ground_size, std::vector<Entry> support);

  /// Requires every entry of v in {-1,0,+1} and v != 0.
  static SignedVector from_rational(const RatVector& v);

  int ground_size() const { return ground_size_; }
  const std::vector<Entry>& support() const { return support_; }
  int support_size() const { return static_cast<int>(support_.size()); }

  int sign_at(int index) const;  // 0 when index is off the support
  bool contains(int index) const { return sign_at(index) != 0; }

  std::uint64_t support_mask() const;  // requires ground_size <= 64
  SignedVector negated() const;
  RatVector to_rational() const;

  bool operator==(const SignedVector&) const = default;

private:
  int ground_size_;
  std::vector<Entry> support_;
};

/// Deterministic ordering used for all path tie-breaking: smaller support
/// first, then lexicographic support, then sign pattern with +1 preferred at
/// the first differing index.
bool path_order_less(const SignedVector& a, const SignedVector& b);

}  // namespace regflow
