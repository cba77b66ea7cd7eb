#pragma once

#include "asmpoly/matrix.hpp"

namespace asmpoly {

/// Row and column prefix sums of a square matrix.
///
///   row(i, j) = x_i1 + ... + x_ij    for 1 <= i <= n, 0 <= j <= n
///   col(i, j) = x_1j + ... + x_ij    for 0 <= i <= n, 1 <= j <= n
///
/// with row(i, 0) = col(0, j) = 0. In the interleaved picture, row(i, j)
/// sits between x_ij and x_i,j+1 and col(i, j) sits between x_ij and
/// x_i+1,j.
class PartialSumTableau {
public:
  explicit PartialSumTableau(const RationalMatrix &x);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] const Rational &row(std::size_t i, std::size_t j) const {
    return rows_[(i - 1) * (n_ + 1) + j];
  }
  [[nodiscard]] const Rational &col(std::size_t i, std::size_t j) const {
    return cols_[i * n_ + (j - 1)];
  }

  /// x_ij recovered from row differences.
  [[nodiscard]] Rational entry(std::size_t i, std::size_t j) const {
    return row(i, j) - row(i, j - 1);
  }

  /// Number of prefix sums (boundary ones included) that are not inner.
  [[nodiscard]] std::size_t non_inner_count() const;
  [[nodiscard]] bool has_inner() const;

private:
  std::size_t n_;
  std::vector<Rational> rows_;
  std::vector<Rational> cols_;
};

inline PartialSumTableau partial_sums(const RationalMatrix &x) {
  return PartialSumTableau(x);
}

} // namespace asmpoly
