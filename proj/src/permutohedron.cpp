#include "asmpoly/permutohedron.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace asmpoly {

WeightVector::WeightVector(RationalVector entries, bool require_decreasing)
    : entries_(std::move(entries)), decreasing_(true) {
  if (entries_.empty())
    throw std::invalid_argument("weight vector must be nonempty");
  auto sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("weight vector entries must be distinct");
  for (std::size_t k = 1; k < entries_.size(); ++k)
    if (!(entries_[k - 1] > entries_[k]))
      decreasing_ = false;
  if (require_decreasing && !decreasing_)
    throw std::invalid_argument("weight vector must be strictly decreasing");
}

RationalVector project(const WeightVector &z, const RationalMatrix &x) {
  const auto n = x.order();
  if (z.size() != n)
    throw std::invalid_argument("weight vector length " + std::to_string(z.size()) +
                                " does not match matrix order " + std::to_string(n));
  RationalVector out(n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i)
      out[j - 1] += z.entries()[i - 1] * x(i, j);
  return out;
}

bool majorizes(const RationalVector &u, const RationalVector &v) {
  if (u.size() != v.size())
    throw std::invalid_argument("majorization needs vectors of equal length");
  auto su = u;
  auto sv = v;
  std::sort(su.begin(), su.end(), std::greater<>());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  Rational pu = 0, pv = 0;
  for (std::size_t k = 0; k < su.size(); ++k) {
    pu += su[k];
    pv += sv[k];
    if (pu > pv)
      return false;
  }
  return pu == pv;
}

bool in_permutohedron(const WeightVector &z, const RationalVector &p) {
  return majorizes(p, z.entries());
}

} // namespace asmpoly
