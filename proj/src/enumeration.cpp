#include "asmpoly/enumeration.hpp"

#include "asmpoly/kernels.hpp"

#include <algorithm>
#include <string>

namespace asmpoly {

void check_enumeration_order(std::size_t n, std::size_t cap) {
  if (n == 0)
    throw std::invalid_argument("order must be at least 1");
  const auto limit = std::min(cap, kMaxEnumerationOrder);
  if (n > limit)
    throw CapExceeded("order " + std::to_string(n) +
                      " exceeds the enumeration cap " + std::to_string(limit));
}

std::vector<AsmMatrix> enumerate_asms(std::size_t n, std::size_t cap) {
  check_enumeration_order(n, cap);
  return kernels::enumerate_asms(n);
}

BigInt count_asms(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("order must be at least 1");
  BigInt numerator = 1;
  BigInt denominator = 1;
  BigInt f;
  for (std::size_t j = 0; j < n; ++j) {
    mpz_fac_ui(f.get_mpz_t(), 3 * j + 1);
    numerator *= f;
    mpz_fac_ui(f.get_mpz_t(), n + j);
    denominator *= f;
  }
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
  return quotient;
}

} // namespace asmpoly
