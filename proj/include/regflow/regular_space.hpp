#pragma once
#include <memory>
#include <mutex>
#include <vector>

#include "regflow/signed_vector.hpp"
#include "regflow/tu_matrix.hpp"

namespace regflow {

enum class SpaceMode { Kernel, RowSpace };

/// One term of a conformal decomposition: `count` copies of a primitive
/// vector.
struct DecompTerm {
  SignedVector vec;
  Int count;
};

/// A regular space: the kernel or row space of a (claimed) totally unimodular
/// generator, held as an exact rational basis. Immutable after construction;
/// the circuit cache fills once behind a call_once barrier, so all queries
/// are safe for concurrent use.
class RegularSpace {
public:
  static constexpr int kDefaultEnumerationGuard = 20;

  RegularSpace(TuMatrix generator, SpaceMode mode);

  int ground_size() const { return ground_size_; }
  SpaceMode mode() const { return mode_; }
  const TuMatrix& generator() const { return generator_; }
  const std::vector<RatVector>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  /// Exact membership test against the stored basis.
  bool contains(const RatVector& v) const;

  /// All primitive vectors up to global negation, one canonical representative
  /// each (first nonzero component +1), ordered by support size then
  /// lexicographic support. Computed once by scanning supports in increasing
  /// cardinality; throws ValidationError when ground_size exceeds the guard
  /// and InvariantError when an elementary vector fails to scale to {-1,0,+1}
  /// (the runtime witness that the input was not regular).
  const std::vector<SignedVector>& circuits(int guard = kDefaultEnumerationGuard) const;

  /// True iff no nonzero member of the space has support strictly inside |v|.
  /// Requires v in the space and v != 0.
  bool is_elementary(const RatVector& v) const;

  /// A primitive vector p with support inside |x| and p_j x_j > 0 on its
  /// support. Requires x in the space, x != 0.
  SignedVector find_conforming_elementary(const RatVector& x) const;

  /// Writes an integral member x as a sum of conforming primitive vectors
  /// with multiplicities; the flattened summand count is at most |x|_1.
  std::vector<DecompTerm> conformal_decomposition(const RatVector& x) const;

private:
  void require_member(const RatVector& v, const char* op) const;
  SignedVector conforming_circuit(const RatVector& x) const;
  /// Dimension of { y in space : y_j = 0 for all j outside the mask }.
  int restricted_nullity(std::uint64_t support_mask) const;

  int ground_size_;
  SpaceMode mode_;
  TuMatrix generator_;
  std::vector<RatVector> basis_;
  // Row-reduced copy of the basis, for O(d*n) membership tests.
  std::vector<RatVector> reduced_rows_;
  std::vector<int> reduced_pivots_;

  mutable std::once_flag circuits_once_;
  mutable std::vector<SignedVector> circuits_;
};

inline RegularSpace build_space(const TuMatrix& generator, SpaceMode mode) {
  return RegularSpace(generator, mode);
}

/// Sum of the decomposition, for checking reconstruction.
RatVector decomposition_sum(const std::vector<DecompTerm>& terms, int ground_size);

/// Flattened summand count (sum of multiplicities).
Int decomposition_size(const std::vector<DecompTerm>& terms);

}  // namespace regflow
