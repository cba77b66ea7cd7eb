#pragma once

#include "asmpoly/matrix.hpp"

#include <optional>
#include <string>

namespace asmpoly {

/// One violated defining constraint of the ASM polytope.
///
/// Prefix kinds carry (i, j): for rows the sum x_i1 + ... + x_ij, for
/// columns the sum x_1j + ... + x_ij. RowTotal uses i only, ColumnTotal
/// uses j only; the unused index is 0.
struct ConstraintViolation {
  enum class Kind {
    RowPrefixBelowZero,
    RowPrefixAboveOne,
    ColumnPrefixBelowZero,
    ColumnPrefixAboveOne,
    RowTotal,
    ColumnTotal,
  };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;

  /// e.g. "row-prefix-below-0 (1,1)", "column-total (0,3)".
  [[nodiscard]] std::string describe() const;
  friend bool operator==(const ConstraintViolation &,
                         const ConstraintViolation &) = default;
};

std::string kind_name(ConstraintViolation::Kind kind);

struct MembershipVerdict {
  std::optional<ConstraintViolation> violated;
  [[nodiscard]] bool member() const { return !violated.has_value(); }
};

/// Exact test of all 2n^2 two-sided prefix bounds and 2n total equalities.
/// Reports the first violation, scanning row prefixes (row-major), then
/// column prefixes (row-major over (i, j)), then row totals, then column
/// totals.
MembershipVerdict check_membership(const RationalMatrix &x);

} // namespace asmpoly
