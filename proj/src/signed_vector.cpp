#include "regflow/signed_vector.hpp"

#include <algorithm>

namespace regflow {

SignedVector::SignedVector(int ground_size, std::vector<Entry> support)
    : ground_size_(ground_size), support_(std::move(support)) {
  if (ground_size_ < 1) throw ValidationError("signed vector needs a nonempty ground set");
  if (support_.empty()) throw ValidationError("signed vector needs a nonempty support");
  std::sort(support_.begin(), support_.end());
  int last = -1;
  for (const auto& [index, sign] : support_) {
    if (index < 0 || index >= ground_size_)
      throw ValidationError("signed vector index out of range");
    if (index == last) throw ValidationError("duplicate index in signed vector support");
    if (sign != 1 && sign != -1) throw ValidationError("signed vector sign must be -1 or +1");
    last = index;
  }
}

SignedVector SignedVector::from_rational(const RatVector& v) {
  std::vector<Entry> support;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (v[j] == 1)
      support.emplace_back(static_cast<int>(j), 1);
    else if (v[j] == -1)
      support.emplace_back(static_cast<int>(j), -1);
    else
      throw ValidationError("vector entry " + to_string(v[j]) + " is not in {-1,0,+1}");
  }
  return SignedVector(static_cast<int>(v.size()), std::move(support));
}

int SignedVector::sign_at(int index) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), index,
                             [](const Entry& e, int i) { return e.first < i; });
  return (it != support_.end() && it->first == index) ? it->second : 0;
}

std::uint64_t SignedVector::support_mask() const {
  std::uint64_t mask = 0;
  for (const auto& [index, sign] : support_) mask |= std::uint64_t{1} << index;
  return mask;
}

SignedVector SignedVector::negated() const {
  std::vector<Entry> flipped = support_;
  for (auto& [index, sign] : flipped) sign = -sign;
  return SignedVector(ground_size_, std::move(flipped));
}

RatVector SignedVector::to_rational() const {
  RatVector v(ground_size_, Rational(0));
  for (const auto& [index, sign] : support_) v[index] = sign;
  return v;
}

bool path_order_less(const SignedVector& a, const SignedVector& b) {
  if (a.support_size() != b.support_size()) return a.support_size() < b.support_size();
  for (int i = 0; i < a.support_size(); ++i) {
    int ai = a.support()[i].first, bi = b.support()[i].first;
    if (ai != bi) return ai < bi;
  }
  for (int i = 0; i < a.support_size(); ++i) {
    int as = a.support()[i].second, bs = b.support()[i].second;
    if (as != bs) return as > bs;  // +1 sorts before -1
  }
  return false;
}

}  // namespace regflow
