#include "asmpoly/rational.hpp"

#include <cctype>

namespace asmpoly {
namespace {

bool all_digits(std::string_view s) {
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

[[noreturn]] void reject(std::string_view text) {
  throw ParseError("malformed rational: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty())
    reject(text);
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty())
    reject(text);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
      reject(text);
    BigInt d(std::string(den), 10);
    if (d == 0)
      throw ParseError("zero denominator: '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !all_digits(whole) ||
        !all_digits(frac))
      reject(text);
    std::string digits = std::string(whole) + std::string(frac);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(BigInt(digits.empty() ? "0" : digits, 10), scale);
    value.canonicalize();
  } else {
    if (!all_digits(body))
      reject(text);
    value = Rational(BigInt(std::string(body), 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational &value) { return value.get_str(10); }

} // namespace asmpoly
