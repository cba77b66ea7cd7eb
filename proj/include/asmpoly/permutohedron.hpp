#pragma once

#include "asmpoly/matrix.hpp"

#include <vector>

namespace asmpoly {

using RationalVector = std::vector<Rational>;

/// Weight vector z with pairwise distinct entries. `decreasing()` reports
/// strict decrease; constructing with require_decreasing rejects anything
/// else. Entries are never reordered.
class WeightVector {
public:
  explicit WeightVector(RationalVector entries, bool require_decreasing = false);

  [[nodiscard]] const RationalVector &entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool decreasing() const { return decreasing_; }

private:
  RationalVector entries_;
  bool decreasing_;
};

/// Row-vector product zX: component j is sum_i z_i x_ij.
RationalVector project(const WeightVector &z, const RationalMatrix &x);

/// u is majorized by v: prefix sums of u sorted decreasingly never exceed
/// those of v, and the totals agree exactly.
bool majorizes(const RationalVector &u, const RationalVector &v);

/// Membership of p in the convex hull of the permutations of z, decided by
/// majorization.
bool in_permutohedron(const WeightVector &z, const RationalVector &p);

} // namespace asmpoly
