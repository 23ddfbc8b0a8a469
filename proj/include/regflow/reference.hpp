#pragma once
#include "regflow/solver.hpp"

namespace regflow {

struct ReferenceResult {
  bool unbounded = false;
  Rational value;
};

/// Exact optimum of max f_r over f in the space with 0 <= f_j <= c_j (j != r),
/// by two-phase rational simplex with Bland's rule. Shares nothing with the
/// augmenting-path machinery beyond the space's basis.
ReferenceResult lp_reference_solve(const Instance& inst);

}  // namespace regflow
