#pragma once

#include "asmpoly/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace asmpoly {

inline constexpr std::size_t kDefaultEnumerationCap = 6;
/// 218348 matrices at n = 7; nothing larger is ever materialized.
inline constexpr std::size_t kMaxEnumerationOrder = 7;

class CapExceeded : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Throws CapExceeded unless 1 <= n <= min(cap, kMaxEnumerationOrder).
void check_enumeration_order(std::size_t n,
                             std::size_t cap = kDefaultEnumerationCap);

/// All n x n ASMs in row-major lexicographic order (-1 < 0 < 1).
std::vector<AsmMatrix> enumerate_asms(std::size_t n,
                                      std::size_t cap = kDefaultEnumerationCap);

/// prod_{j=0}^{n-1} (3j+1)! / (n+j)!, exactly.
BigInt count_asms(std::size_t n);

} // namespace asmpoly
