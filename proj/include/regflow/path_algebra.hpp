#pragma once
#include <vector>

#include "regflow/regular_space.hpp"

namespace regflow {

/// A primitive vector with component +1 at the distinguished index r.
class RPath {
public:
  RPath(SignedVector vec, int r);

  const SignedVector& vec() const { return vec_; }
  int r() const { return r_; }
  int length() const { return vec_.support_size(); }

  bool operator==(const RPath&) const = default;

private:
  SignedVector vec_;
  int r_;
};

/// 1-norm length.
Rational one_norm(const RatVector& x);
inline int one_norm(const SignedVector& x) { return x.support_size(); }

/// False iff P_j Q_j = -1 for some index j. Requires matching ground set and r.
bool are_conformal(const RPath& p, const RPath& q);

/// The two r-paths of a conformal decomposition of P+Q. The paper assigns no
/// distinct semantics to meet versus join, so the pair is unordered with a
/// canonical presentation (path_order_less smaller member first).
struct PathPair {
  RPath first;
  RPath second;
};

PathPair conformal_pair(const RegularSpace& space, const RPath& p, const RPath& q);

/// conformal_pair plus the full decomposition of P+Q (the r-free summands
/// that conformal_pair discards).
struct PairDecomposition {
  PathPair pair;
  std::vector<DecompTerm> summands;
};

PairDecomposition conformal_pair_full(const RegularSpace& space, const RPath& p, const RPath& q);

/// Pointwise checks on a conformal pair, per index j:
///   (a) each nonzero entry of the first member equals P_j or Q_j
///   (b) same for the second member
///   (c) P_j Q_j = -1 implies both members are 0 at j
///   (d) both members nonzero at j implies all four values agree at j
struct PairPropertyReport {
  bool a = true, b = true, c = true, d = true;
  std::vector<int> bad_a, bad_b, bad_c, bad_d;
  bool all_pass() const { return a && b && c && d; }
};

PairPropertyReport check_pair_properties(const RPath& p, const RPath& q, const PathPair& pair);

/// |P^Q| + |PvQ| versus |P| + |Q|; lhs <= rhs always, strict when P and Q
/// are nonconformal.
struct LengthInequality {
  Rational lhs;
  Rational rhs;
  bool strict;
};

LengthInequality length_inequality(const RegularSpace& space, const RPath& p, const RPath& q);

}  // namespace regflow
