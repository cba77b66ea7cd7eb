#include "asmpoly/matrix.hpp"

#include <algorithm>

namespace asmpoly {

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0)
    throw std::invalid_argument("matrix order must be at least 1");
}

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Rational> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n == 0)
    throw std::invalid_argument("matrix order must be at least 1");
  if (entries_.size() != n * n)
    throw std::invalid_argument("expected " + std::to_string(n * n) +
                                " entries, got " +
                                std::to_string(entries_.size()));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix &RationalMatrix::operator+=(const RationalMatrix &other) {
  if (other.n_ != n_)
    throw std::invalid_argument("matrix order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += other.entries_[k];
  return *this;
}

RationalMatrix operator*(const Rational &scale, RationalMatrix m) {
  for (auto &x : m.entries_)
    x *= scale;
  return m;
}

bool operator<(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.n_ != b.n_)
    return a.n_ < b.n_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                      b.entries_.begin(), b.entries_.end());
}

std::string AsmViolation::describe() const {
  switch (kind) {
  case Kind::NonSquare:
    return "matrix is not square";
  case Kind::EntryOutOfRange:
    return "entry (" + std::to_string(index) + "," + std::to_string(column) +
           ") is not in {-1,0,1}";
  case Kind::RowSum:
    return "row " + std::to_string(index) + " does not sum to 1";
  case Kind::ColumnSum:
    return "column " + std::to_string(index) + " does not sum to 1";
  case Kind::RowAlternation:
    return "nonzero entries of row " + std::to_string(index) +
           " do not alternate in sign";
  case Kind::ColumnAlternation:
    return "nonzero entries of column " + std::to_string(index) +
           " do not alternate in sign";
  }
  return "unknown violation";
}

RationalMatrix AsmMatrix::to_rational() const {
  std::vector<Rational> xs(entries_.begin(), entries_.end());
  return RationalMatrix(n_, std::move(xs));
}

bool AsmMatrix::is_permutation() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](std::int8_t v) { return v < 0; });
}

int AsmMatrix::corner_ones() const {
  const auto &a = *this;
  if (n_ == 1)
    return a(1, 1) == 1 ? 1 : 0;
  return (a(1, 1) == 1) + (a(1, n_) == 1) + (a(n_, 1) == 1) + (a(n_, n_) == 1);
}

namespace {

// Alternation with total 1 is the same as every prefix sum lying in {0,1}.
bool alternates(std::span<const long> line) {
  long prefix = 0;
  for (long v : line) {
    prefix += v;
    if (prefix < 0 || prefix > 1)
      return false;
  }
  return true;
}

} // namespace

std::optional<AsmViolation> find_asm_violation(const IntMatrix &m) {
  using K = AsmViolation::Kind;
  const std::size_t n = m.size();
  if (n == 0)
    return AsmViolation{K::NonSquare};
  for (const auto &row : m)
    if (row.size() != n)
      return AsmViolation{K::NonSquare};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] < -1 || m[i][j] > 1)
        return AsmViolation{K::EntryOutOfRange, i + 1, j + 1};

  std::vector<std::vector<long>> cols(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cols[j][i] = m[i][j];

  auto total = [](const std::vector<long> &line) {
    long s = 0;
    for (long v : line)
      s += v;
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (total(m[i]) != 1)
      return AsmViolation{K::RowSum, i + 1};
  for (std::size_t j = 0; j < n; ++j)
    if (total(cols[j]) != 1)
      return AsmViolation{K::ColumnSum, j + 1};
  for (std::size_t i = 0; i < n; ++i)
    if (!alternates(m[i]))
      return AsmViolation{K::RowAlternation, i + 1};
  for (std::size_t j = 0; j < n; ++j)
    if (!alternates(cols[j]))
      return AsmViolation{K::ColumnAlternation, j + 1};
  return std::nullopt;
}

AsmMatrix validate_asm(const IntMatrix &m) {
  if (auto v = find_asm_violation(m))
    throw InvalidAsm(*v);
  const std::size_t n = m.size();
  std::vector<std::int8_t> entries;
  entries.reserve(n * n);
  for (const auto &row : m)
    for (long v : row)
      entries.push_back(static_cast<std::int8_t>(v));
  return AsmBuilder::trusted(n, std::move(entries));
}

AsmMatrix validate_asm(const RationalMatrix &m) {
  const std::size_t n = m.order();
  IntMatrix ints(n, std::vector<long>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational &x = m(i, j);
      if (x.get_den() != 1 || x < -1 || x > 1)
        throw InvalidAsm(
            AsmViolation{AsmViolation::Kind::EntryOutOfRange, i, j});
      ints[i - 1][j - 1] = x.get_num().get_si();
    }
  return validate_asm(ints);
}

IntMatrix to_int_matrix(const AsmMatrix &a) {
  const std::size_t n = a.order();
  IntMatrix out(n, std::vector<long>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      out[i - 1][j - 1] = a(i, j);
  return out;
}

} // namespace asmpoly
