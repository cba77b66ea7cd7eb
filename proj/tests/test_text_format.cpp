#include "fixtures.hpp"
#include "oracles.hpp"

#include "asmpoly/decomposition.hpp"
#include "asmpoly/enumeration.hpp"
#include "asmpoly/face_lattice.hpp"
#include "asmpoly/text_format.hpp"

#include <doctest.h>

#include <random>

using namespace asmpoly;

TEST_SUITE("text_format") {

TEST_CASE("matrix round trip") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto pool = oracle::brute_force_asms(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = oracle::random_member(rng, pool, 1 + trial % 4);
      const auto text = format_matrix(x);
      CHECK(parse_matrix(text) == x);
      CHECK(format_matrix(parse_matrix(text)) == text);
    }
  }
  CHECK(format_matrix(fixture::circuit_example()).substr(0, 16) == "5\n0 2/5 1/2 1/10");
}

TEST_CASE("matrix parsing") {
  CHECK(parse_matrix("2\n1 0\n0 1\n") == RationalMatrix::identity(2));
  CHECK(parse_matrix("2\r\n 1\t0 \r\n0 1\r\n\n\n") == RationalMatrix::identity(2));
  CHECK(parse_matrix("1\n.5") == RationalMatrix(1, {Rational(1, 2)}));
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 0 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 x\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1.5\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1\n1\n1\n"), ParseError);
  const auto many = parse_matrices("1\n1\n\n2\n1 0\n0 1\n2\n0 1\n1 0\n");
  CHECK(many.size() == 3);
  CHECK_THROWS_AS(parse_matrices("\n\n"), ParseError);
}

TEST_CASE("grid round trip") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &a : enumerate_asms(n)) {
      const auto g = asm_to_grid(a).grid();
      const auto text = format_grid(g);
      CHECK(parse_grid(text) == g);
    }
  const auto c = complete_flow_grid(3);
  CHECK(parse_grid(format_grid(c)) == c);
  CHECK(parse_grid(format_grid(FlowGrid(2))) == FlowGrid(2));
  CHECK(format_grid(asm_to_grid(validate_asm(IntMatrix{{1}})).grid()) ==
        "1\n(1,1)->(0,1)\n(1,1)->(1,0)\n(1,1)->(1,2)\n(1,1)->(2,1)\n");
}

TEST_CASE("grid parsing errors") {
  CHECK_THROWS_AS(parse_grid(""), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(1,1)->(1,1)\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(1,1)->(3,3)\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(1,1)-(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(1,1)->(1,2)\n(1,1)->(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(a,1)->(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(1,1)->(1,2) (1,2)->(1,1)\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("2\n(0,1)->(1,1)\n"), ParseError);
}

TEST_CASE("grid hash is stable") {
  CHECK(grid_hash(FlowGrid(1)) == grid_hash(FlowGrid(1)));
  CHECK(grid_hash(FlowGrid(1)) != grid_hash(FlowGrid(2)));
  // FNV-1a 64 of "1\n"
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : std::string("1\n")) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  CHECK(grid_hash(FlowGrid(1)) == h);
}

TEST_CASE("vector round trip") {
  const RationalVector v{Rational(1, 2), Rational(-3), Rational(7, 9)};
  CHECK(format_vector(v) == "1/2 -3 7/9\n");
  CHECK(parse_vector(format_vector(v)) == v);
  CHECK(parse_vector("\n 1  .25\n\n") == RationalVector{1, Rational(1, 4)});
  CHECK_THROWS_AS(parse_vector(""), ParseError);
  CHECK_THROWS_AS(parse_vector("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_vector("1 2/0\n"), ParseError);
}

TEST_CASE("decomposition round trip") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto pool = oracle::brute_force_asms(n);
    for (int trial = 0; trial < 15; ++trial) {
      const auto x = oracle::random_member(rng, pool, 2 + trial % 4);
      const auto c = decompose(x);
      for (bool checksum : {false, true}) {
        const auto text = format_decomposition(c, checksum);
        const auto back = parse_decomposition(text);
        CHECK(back.recombine() == x);
        CHECK(format_decomposition(back, checksum) == text);
      }
    }
  }
}

TEST_CASE("decomposition parsing rejects bad input") {
  const std::string good = "1/2\n2\n0 1\n1 0\n1/2\n2\n1 0\n0 1\n";
  CHECK_NOTHROW(parse_decomposition(good));
  CHECK_NOTHROW(parse_decomposition(good + "recombined\n2\n1/2 1/2\n1/2 1/2\n"));
  CHECK_THROWS_AS(parse_decomposition(good + "recombined\n2\n1 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("1/2\n2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("1\n2\n1 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("1/2\n2\n0 1\n1 0\n1/2\n2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition(""), ParseError);
  CHECK_THROWS_AS(parse_decomposition("1/2 1/2\n"), ParseError);
}

TEST_CASE("lattice format") {
  const AsmPolytope p(2);
  const auto text = format_lattice(p.enumerate_faces());
  CHECK(text.starts_with("lattice 2\nf-vector 1 2 1\nfaces 4\n-1 0 "));
  CHECK(text.ends_with("covers 4\n0 1\n0 2\n1 3\n2 3\n"));
}

} // TEST_SUITE
