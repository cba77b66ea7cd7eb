#include "oracles.hpp"

#include "asmpoly/enumeration.hpp"
#include "asmpoly/kernels.hpp"
#include "asmpoly/matrix.hpp"
#include "asmpoly/partial_sums.hpp"
#include "asmpoly/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace asmpoly;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows)
    m.emplace_back(r);
  return m;
}

} // namespace

TEST_SUITE("matrix_core") {

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("2/5") == Rational(2, 5));
  CHECK(parse_rational(".4") == Rational(2, 5));
  CHECK(parse_rational("-.3") == Rational(-3, 10));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("+7") == 7);
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(to_string(ratio(4, 6)) == "2/3");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("validate_asm accepts the example ASMs") {
  CHECK(validate_asm(int_matrix({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})).order() == 3);
  CHECK(validate_asm(int_matrix({{1}})).is_permutation());
  const auto fancy = validate_asm(int_matrix({{0, 1, 0, 0, 0},
                                              {1, -1, 1, 0, 0},
                                              {0, 0, 0, 1, 0},
                                              {0, 1, -1, 0, 1},
                                              {0, 0, 1, 0, 0}}));
  CHECK_FALSE(fancy.is_permutation());
  CHECK(fancy.corner_ones() == 0);
  CHECK(validate_asm(int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).corner_ones() == 2);
}

TEST_CASE("validate_asm names the first failed condition") {
  auto kind = [](const IntMatrix &m) { return find_asm_violation(m)->kind; };
  using K = AsmViolation::Kind;
  CHECK(kind(int_matrix({{1, 0}, {0}})) == K::NonSquare);
  CHECK(kind(IntMatrix{}) == K::NonSquare);
  CHECK(kind(int_matrix({{2, -1}, {-1, 2}})) == K::EntryOutOfRange);
  CHECK(kind(int_matrix({{1, 1}, {0, 0}})) == K::RowSum);
  CHECK(kind(int_matrix({{1, 0}, {1, 0}})) == K::ColumnSum);
  // all line sums are 1 but a row starts with -1
  CHECK(kind(int_matrix({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}})) == K::RowAlternation);
  CHECK(kind(int_matrix({{1, -1, 1}, {0, 1, 0}, {0, 1, 0}})) == K::ColumnAlternation);
  CHECK(kind(int_matrix({{0, 1, 0}, {1, 1, -1}, {0, -1, 2}})) == K::EntryOutOfRange);
  CHECK(kind(int_matrix({{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}})) == K::RowAlternation);
  {
    const auto v = *find_asm_violation(int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(v.kind == K::NonSquare);
  }
  CHECK_THROWS_AS(validate_asm(int_matrix({{0, 1}, {0, 1}})), InvalidAsm);
  CHECK_THROWS_AS(validate_asm(RationalMatrix(2, {Rational(1, 2), Rational(1, 2),
                                                  Rational(1, 2), Rational(1, 2)})),
                  InvalidAsm);
}

TEST_CASE("validate_asm agrees with the brute-force ASM set on all small sign matrices") {
  // every {-1,0,1} matrix of order 3
  const auto asms = oracle::brute_force_asms(3);
  const std::set<IntMatrix> expected(asms.begin(), asms.end());
  std::size_t accepted = 0;
  std::vector<long> digits(9, -1);
  for (;;) {
    IntMatrix m(3, std::vector<long>(3));
    for (std::size_t k = 0; k < 9; ++k)
      m[k / 3][k % 3] = digits[k];
    const bool valid = !find_asm_violation(m).has_value();
    CHECK(valid == (expected.count(m) == 1));
    accepted += valid;
    std::size_t k = 9;
    while (k > 0 && digits[k - 1] == 1)
      digits[--k] = -1;
    if (k == 0)
      break;
    ++digits[k - 1];
  }
  CHECK(accepted == 7);
}

TEST_CASE("count_asms matches the product formula evaluated independently") {
  const long expected[] = {1, 2, 7, 42, 429, 7436, 218348, 10850216};
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(count_asms(n) == expected[n - 1]);
    CHECK(Rational(count_asms(n)) == oracle::product_formula(n));
  }
  for (std::size_t n = 9; n <= 20; ++n)
    CHECK(Rational(count_asms(n)) == oracle::product_formula(n));
}

TEST_CASE("enumeration equals brute force, in lexicographic order") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto got = enumerate_asms(n);
    const auto want = oracle::brute_force_asms(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k)
      CHECK(to_int_matrix(got[k]) == want[k]);
  }
}

TEST_CASE("enumeration size matches the formula up to the hard limit") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_asms(n);
    CHECK(BigInt(all.size()) == count_asms(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  CHECK(enumerate_asms(7, 7).size() == 218348);
}

TEST_CASE("permutation matrices among the ASMs number n!") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_asms(n);
    CHECK(std::count_if(all.begin(), all.end(), [](const AsmMatrix &a) {
            return a.is_permutation();
          }) == static_cast<long>(oracle::factorial(n)));
  }
}

TEST_CASE("the seven 3x3 ASMs") {
  const std::set<IntMatrix> figure{
      int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      int_matrix({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
      int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
      int_matrix({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}),
      int_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
      int_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
      int_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),
  };
  std::set<IntMatrix> got;
  for (const auto &a : enumerate_asms(3))
    got.insert(to_int_matrix(a));
  CHECK(got == figure);
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_asms(7), CapExceeded);
  CHECK_THROWS_AS(enumerate_asms(8, 100), CapExceeded);
  CHECK_THROWS_AS((void)enumerate_asms(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_asms(5, 4), CapExceeded);
  CHECK_NOTHROW(check_enumeration_order(7, 7));
}

TEST_CASE("partial sums of the circuit example") {
  const std::vector<std::string> text{".0", ".4", ".5", ".1", "0",  ".4", "-.4", ".5", "0",
                                      ".5", ".6", ".4", "-.3", "-.1", ".4", "0",  ".3", "-.3",
                                      ".9", ".1", "0",  ".3", ".6", ".1", "0"};
  std::vector<Rational> xs;
  for (const auto &t : text)
    xs.push_back(parse_rational(t));
  const RationalMatrix x(5, xs);
  const auto t = partial_sums(x);
  auto r = [](const char *s) { return parse_rational(s); };
  // row partial sums, left to right
  const char *rows[5][6] = {{"0", "0", ".4", ".9", "1", "1"},
                            {"0", ".4", "0", ".5", ".5", "1"},
                            {"0", ".6", "1", ".7", ".6", "1"},
                            {"0", "0", ".3", "0", ".9", "1"},
                            {"0", "0", ".3", ".9", "1", "1"}};
  // column partial sums, top to bottom
  const char *cols[6][5] = {{"0", "0", "0", "0", "0"},
                            {"0", ".4", ".5", ".1", "0"},
                            {".4", "0", "1", ".1", ".5"},
                            {"1", ".4", ".7", "0", ".9"},
                            {"1", ".7", ".4", ".9", "1"},
                            {"1", "1", "1", "1", "1"}};
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = 0; j <= 5; ++j)
      CHECK(t.row(i, j) == r(rows[i - 1][j]));
  for (std::size_t i = 0; i <= 5; ++i)
    for (std::size_t j = 1; j <= 5; ++j)
      CHECK(t.col(i, j) == r(cols[i][j - 1]));
  CHECK(t.has_inner());
  CHECK(t.non_inner_count() == oracle::non_inner_sums(x));
}

TEST_CASE("partial sums: entry relation and ASM tableaus have no inner sums") {
  std::mt19937_64 rng(0x51ab);
  const auto pool = oracle::brute_force_asms(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = oracle::random_member(rng, pool, 1 + trial % 5);
    const auto t = partial_sums(x);
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = 1; j <= 4; ++j) {
        CHECK(t.entry(i, j) == x(i, j));
        // x_ij = r_ij - r_i,j-1 = c_ij - c_i-1,j
        CHECK(t.row(i, j) - t.row(i, j - 1) == t.col(i, j) - t.col(i - 1, j));
      }
    CHECK(t.non_inner_count() == oracle::non_inner_sums(x));
  }
  for (const auto &a : enumerate_asms(4)) {
    const auto t = partial_sums(a.to_rational());
    CHECK_FALSE(t.has_inner());
    CHECK(t.non_inner_count() == 2 * 4 * 5);
  }
}

TEST_CASE("matrix arithmetic") {
  auto m = RationalMatrix::identity(3);
  m += RationalMatrix::identity(3);
  CHECK(m(2, 2) == 2);
  CHECK(m(1, 2) == 0);
  const auto half = Rational(1, 2) * m;
  CHECK(half == RationalMatrix::identity(3));
  CHECK(RationalMatrix(2) < RationalMatrix::identity(2));
  CHECK_THROWS(RationalMatrix(2, std::vector<Rational>(3)));
}

} // TEST_SUITE
