#include "fixtures.hpp"
#include "oracles.hpp"

#include "asmpoly/enumeration.hpp"
#include "asmpoly/membership.hpp"

#include <doctest.h>

#include <random>
#include <tuple>

using namespace asmpoly;

namespace {

// Position of a constraint in the documented scan order.
std::tuple<int, std::size_t, std::size_t> scan_key(const oracle::Constraint &c) {
  if (c.kind.starts_with("row-prefix"))
    return {0, c.i, c.j};
  if (c.kind.starts_with("column-prefix"))
    return {1, c.i, c.j};
  if (c.kind == "row-total")
    return {2, c.i, 0};
  return {3, 0, c.j};
}

std::string describe(const oracle::Constraint &c) {
  return c.kind + " (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

RationalMatrix from_ints(const IntMatrix &m) { return oracle::to_rational(m); }

} // namespace

TEST_SUITE("membership") {

TEST_CASE("every ASM is a member") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto &a : enumerate_asms(n))
      CHECK(check_membership(a.to_rational()).member());
}

TEST_CASE("the circuit example is a member") {
  CHECK(check_membership(fixture::circuit_example()).member());
}

TEST_CASE("descriptors") {
  using K = ConstraintViolation::Kind;
  CHECK(ConstraintViolation{K::RowPrefixBelowZero, 1, 1}.describe() == "row-prefix-below-0 (1,1)");
  CHECK(ConstraintViolation{K::ColumnPrefixAboveOne, 2, 3}.describe() ==
        "column-prefix-above-1 (2,3)");
  CHECK(ConstraintViolation{K::ColumnTotal, 0, 3}.describe() == "column-total (0,3)");
  CHECK(kind_name(K::RowTotal) == "row-total");
}

TEST_CASE("hand-made non-members") {
  using K = ConstraintViolation::Kind;
  // row starts with -1
  auto v = check_membership(from_ints({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
  REQUIRE_FALSE(v.member());
  CHECK(*v.violated == ConstraintViolation{K::RowPrefixBelowZero, 1, 1});
  // doubly stochastic scaled wrong: totals only
  RationalMatrix half(2);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j)
      half(i, j) = Rational(1, 4);
  v = check_membership(half);
  REQUIRE_FALSE(v.member());
  CHECK(*v.violated == ConstraintViolation{K::RowTotal, 1, 0});
  // column prefix above one: two ones stacked, rows still fine
  v = check_membership(from_ints({{1, 0}, {1, 0}}));
  REQUIRE_FALSE(v.member());
  CHECK(*v.violated == ConstraintViolation{K::ColumnPrefixAboveOne, 2, 1});
}

TEST_CASE("random convex combinations are members") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto pool = oracle::brute_force_asms(n);
    for (int trial = 0; trial < 100; ++trial)
      CHECK(check_membership(oracle::random_member(rng, pool, 1 + trial % 7)).member());
  }
}

TEST_CASE("first violation agrees with a direct scan on random perturbations") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> noise(-30, 30);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto pool = oracle::brute_force_asms(n);
    for (int trial = 0; trial < 200; ++trial) {
      auto x = oracle::random_member(rng, pool, 1 + trial % 4);
      const std::size_t touched = trial % 3;
      for (std::size_t k = 0; k < touched; ++k)
        x(1 + rng() % n, 1 + rng() % n) += ratio(noise(rng), 20);
      const auto all = oracle::violated_constraints(x);
      const auto verdict = check_membership(x);
      REQUIRE(verdict.member() == all.empty());
      if (all.empty())
        continue;
      auto first = *std::min_element(all.begin(), all.end(), [](const auto &a, const auto &b) {
        return scan_key(a) < scan_key(b);
      });
      CHECK(verdict.violated->describe() == describe(first));
    }
  }
}

TEST_CASE("single-constraint violations are reported exactly") {
  // at n = 2 every rectangle moves x_11 as both a row and a column prefix
  std::mt19937_64 rng(2024);
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto pool = oracle::brute_force_asms(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto [x, c] = oracle::single_violation(rng, pool);
      const auto verdict = check_membership(x);
      REQUIRE_FALSE(verdict.member());
      CHECK(verdict.violated->describe() == describe(c));
    }
  }
}

} // TEST_SUITE
