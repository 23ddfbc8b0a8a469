#include "regflow/path_algebra.hpp"

#include <string>

namespace regflow {
namespace {

void require_compatible(const RPath& p, const RPath& q) {
  if (p.vec().ground_size() != q.vec().ground_size())
    throw ValidationError("paths live on different ground sets");
  if (p.r() != q.r())
    throw ValidationError("paths have different distinguished indices");
}

}  // namespace

RPath::RPath(SignedVector vec, int r) : vec_(std::move(vec)), r_(r) {
  if (r < 0 || r >= vec_.ground_size()) throw ValidationError("r-path: r out of range");
  if (vec_.sign_at(r) != 1)
    throw ValidationError("r-path: component at r must be +1");
}

Rational one_norm(const RatVector& x) {
  Rational total = 0;
  for (const Rational& v : x) total += abs(v);
  return total;
}

bool are_conformal(const RPath& p, const RPath& q) {
  require_compatible(p, q);
  for (const auto& [index, sign] : p.vec().support())
    if (q.vec().sign_at(index) == -sign) return false;
  return true;
}

PairDecomposition conformal_pair_full(const RegularSpace& space, const RPath& p, const RPath& q) {
  require_compatible(p, q);
  RatVector sum = p.vec().to_rational();
  for (const auto& [index, sign] : q.vec().support()) sum[index] += sign;

  std::vector<DecompTerm> terms = space.conformal_decomposition(sum);
  std::vector<SignedVector> through_r;
  for (const DecompTerm& t : terms) {
    if (t.vec.sign_at(p.r()) != 1) continue;
    for (Int i = 0; i < t.count; ++i) through_r.push_back(t.vec);
  }
  if (through_r.size() != 2)
    throw InvariantError("conformal pair: decomposition of P+Q produced " +
                         std::to_string(through_r.size()) +
                         " summands with +1 at r instead of 2; input space is not regular "
                         "or the decomposition is faulty");
  if (path_order_less(through_r[1], through_r[0])) std::swap(through_r[0], through_r[1]);
  return {PathPair{RPath(std::move(through_r[0]), p.r()), RPath(std::move(through_r[1]), p.r())},
          std::move(terms)};
}

PathPair conformal_pair(const RegularSpace& space, const RPath& p, const RPath& q) {
  return conformal_pair_full(space, p, q).pair;
}

PairPropertyReport check_pair_properties(const RPath& p, const RPath& q, const PathPair& pair) {
  PairPropertyReport report;
  int n = p.vec().ground_size();
  for (int j = 0; j < n; ++j) {
    int pj = p.vec().sign_at(j), qj = q.vec().sign_at(j);
    int mj = pair.first.vec().sign_at(j), vj = pair.second.vec().sign_at(j);
    if (mj != 0 && mj != pj && mj != qj) {
      report.a = false;
      report.bad_a.push_back(j);
    }
    if (vj != 0 && vj != pj && vj != qj) {
      report.b = false;
      report.bad_b.push_back(j);
    }
    if (pj * qj == -1 && (mj != 0 || vj != 0)) {
      report.c = false;
      report.bad_c.push_back(j);
    }
    if (mj != 0 && vj != 0 && !(mj == vj && mj == pj && mj == qj)) {
      report.d = false;
      report.bad_d.push_back(j);
    }
  }
  return report;
}

LengthInequality length_inequality(const RegularSpace& space, const RPath& p, const RPath& q) {
  PathPair pair = conformal_pair(space, p, q);
  Rational lhs = Rational(pair.first.length()) + pair.second.length();
  Rational rhs = Rational(p.length()) + q.length();
  return {lhs, rhs, lhs < rhs};
}

}  // namespace regflow
