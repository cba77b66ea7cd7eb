#include "asmpoly/membership.hpp"

#include "asmpoly/partial_sums.hpp"

namespace asmpoly {

std::string kind_name(ConstraintViolation::Kind kind) {
  using K = ConstraintViolation::Kind;
  switch (kind) {
  case K::RowPrefixBelowZero:
    return "row-prefix-below-0";
  case K::RowPrefixAboveOne:
    return "row-prefix-above-1";
  case K::ColumnPrefixBelowZero:
    return "column-prefix-below-0";
  case K::ColumnPrefixAboveOne:
    return "column-prefix-above-1";
  case K::RowTotal:
    return "row-total";
  case K::ColumnTotal:
    return "column-total";
  }
  return "unknown";
}

std::string ConstraintViolation::describe() const {
  return kind_name(kind) + " (" + std::to_string(i) + "," + std::to_string(j) +
         ")";
}

MembershipVerdict check_membership(const RationalMatrix &x) {
  using K = ConstraintViolation::Kind;
  const auto n = x.order();
  const PartialSumTableau t(x);
  auto verdict = [](K kind, std::size_t i, std::size_t j) {
    return MembershipVerdict{ConstraintViolation{kind, i, j}};
  };

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (t.row(i, j) < 0)
        return verdict(K::RowPrefixBelowZero, i, j);
      if (t.row(i, j) > 1)
        return verdict(K::RowPrefixAboveOne, i, j);
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (t.col(i, j) < 0)
        return verdict(K::ColumnPrefixBelowZero, i, j);
      if (t.col(i, j) > 1)
        return verdict(K::ColumnPrefixAboveOne, i, j);
    }
  for (std::size_t i = 1; i <= n; ++i)
    if (t.row(i, n) != 1)
      return verdict(K::RowTotal, i, 0);
  for (std::size_t j = 1; j <= n; ++j)
    if (t.col(n, j) != 1)
      return verdict(K::ColumnTotal, 0, j);
  return {};
}

} // namespace asmpoly
