#include "asmpoly/partial_sums.hpp"

#include <algorithm>

namespace asmpoly {

PartialSumTableau::PartialSumTableau(const RationalMatrix &x)
    : n_(x.order()), rows_(n_ * (n_ + 1)), cols_((n_ + 1) * n_) {
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) {
      rows_[(i - 1) * (n_ + 1) + j] = row(i, j - 1) + x(i, j);
      cols_[i * n_ + (j - 1)] = col(i - 1, j) + x(i, j);
    }
}

std::size_t PartialSumTableau::non_inner_count() const {
  auto outer = [](const Rational &v) { return !is_inner(v); };
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), outer) +
      std::count_if(cols_.begin(), cols_.end(), outer));
}

bool PartialSumTableau::has_inner() const {
  return std::any_of(rows_.begin(), rows_.end(), is_inner) ||
         std::any_of(cols_.begin(), cols_.end(), is_inner);
}

} // namespace asmpoly
