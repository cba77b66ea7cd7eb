#pragma once

#include "asmpoly/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmpoly {

/// Square matrix of exact rationals, 1-indexed to match the usual x_ij
/// notation. Storage is row-major.
class RationalMatrix {
public:
  /// Zero matrix of order n (n >= 1).
  explicit RationalMatrix(std::size_t n);
  RationalMatrix(std::size_t n, std::vector<Rational> row_major);

  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t order() const { return n_; }

  [[nodiscard]] const Rational &operator()(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * n_ + (j - 1)];
  }
  Rational &operator()(std::size_t i, std::size_t j) {
    return entries_[(i - 1) * n_ + (j - 1)];
  }

  [[nodiscard]] std::span<const Rational> entries() const { return entries_; }

  RationalMatrix &operator+=(const RationalMatrix &other);
  friend RationalMatrix operator*(const Rational &scale, RationalMatrix m);

  friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;
  /// Lexicographic on (order, row-major entries).
  friend bool operator<(const RationalMatrix &a, const RationalMatrix &b);

private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Why an integer matrix is not an alternating sign matrix. `index` is the
/// offending row or column (1-based); `column` is set for entry violations.
struct AsmViolation {
  enum class Kind {
    NonSquare,
    EntryOutOfRange,
    RowSum,
    ColumnSum,
    RowAlternation,
    ColumnAlternation,
  };
  Kind kind;
  std::size_t index = 0;
  std::size_t column = 0;

  [[nodiscard]] std::string describe() const;
  friend bool operator==(const AsmViolation &, const AsmViolation &) = default;
};

class InvalidAsm : public std::invalid_argument {
public:
  explicit InvalidAsm(AsmViolation v)
      : std::invalid_argument(v.describe()), violation_(v) {}
  [[nodiscard]] const AsmViolation &violation() const { return violation_; }

private:
  AsmViolation violation_;
};

/// A validated n x n alternating sign matrix. Instances can only be obtained
/// through validate_asm or the enumeration kernels, so the ASM conditions
/// always hold.
class AsmMatrix {
public:
  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] int operator()(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * n_ + (j - 1)];
  }
  [[nodiscard]] std::span<const std::int8_t> entries() const { return entries_; }

  [[nodiscard]] RationalMatrix to_rational() const;
  [[nodiscard]] bool is_permutation() const;
  /// Number of 1's among the four corner entries.
  [[nodiscard]] int corner_ones() const;

  friend auto operator<=>(const AsmMatrix &, const AsmMatrix &) = default;
  friend bool operator==(const AsmMatrix &, const AsmMatrix &) = default;

private:
  friend class AsmBuilder;
  AsmMatrix(std::size_t n, std::vector<std::int8_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_;
  std::vector<std::int8_t> entries_;
};

/// Construction back door for code that guarantees validity by
/// construction (enumeration, grid decoding). Not for general use.
class AsmBuilder {
public:
  static AsmMatrix trusted(std::size_t n, std::vector<std::int8_t> entries) {
    return AsmMatrix(n, std::move(entries));
  }
};

using IntMatrix = std::vector<std::vector<long>>;

/// First violated ASM condition in the order: shape, entry range (row-major),
/// row sums, column sums, row alternation, column alternation.
std::optional<AsmViolation> find_asm_violation(const IntMatrix &m);

/// Throws InvalidAsm on the first violated condition.
AsmMatrix validate_asm(const IntMatrix &m);
/// As above; non-integer entries are reported as EntryOutOfRange.
AsmMatrix validate_asm(const RationalMatrix &m);

IntMatrix to_int_matrix(const AsmMatrix &a);

} // namespace asmpoly
