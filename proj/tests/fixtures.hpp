#pragma once

#include "asmpoly/matrix.hpp"
#include "asmpoly/rational.hpp"

#include <string>
#include <vector>

namespace asmpoly::fixture {

/// The 5x5 member of P(5) whose circuit is drawn in the paper's first
/// worked example.
inline RationalMatrix circuit_example() {
  const char *text[] = {"0",  ".4", ".5",  ".1",  "0",  ".4", "-.4", ".5", "0",
                        ".5", ".6", ".4",  "-.3", "-.1", ".4", "0",   ".3", "-.3",
                        ".9", ".1", "0",   ".3",  ".6", ".1", "0"};
  std::vector<Rational> xs;
  for (const char *t : text)
    xs.push_back(parse_rational(t));
  return RationalMatrix(5, std::move(xs));
}

/// The two 5x5 ASMs spanning an edge of ASM_5.
inline IntMatrix edge_first() {
  return {{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, -1, 0, 1}, {0, 0, 1, 0, 0}};
}
inline IntMatrix edge_second() {
  return {{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
}

inline IntMatrix minus_one_3() { return {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}; }

} // namespace asmpoly::fixture
