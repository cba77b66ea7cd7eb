#include "asmpoly/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace asmpoly {
namespace {

enum class Step { Right, Down, Left, Up };
constexpr Step kStepOrder[] = {Step::Right, Step::Down, Step::Left, Step::Up};

Step reverse(Step s) {
  switch (s) {
  case Step::Right:
    return Step::Left;
  case Step::Left:
    return Step::Right;
  case Step::Down:
    return Step::Up;
  case Step::Up:
    return Step::Down;
  }
  return s;
}

bool horizontal(Step s) { return s == Step::Right || s == Step::Left; }

struct Entry {
  std::size_t row;
  std::size_t col;
  friend auto operator<=>(const Entry &, const Entry &) = default;
};

Entry advance(Entry e, Step s) {
  switch (s) {
  case Step::Right:
    return {e.row, e.col + 1};
  case Step::Left:
    return {e.row, e.col - 1};
  case Step::Down:
    return {e.row + 1, e.col};
  case Step::Up:
    return {e.row - 1, e.col};
  }
  return e;
}

// The prefix sum lying between e and its neighbour in direction s.
TraversedSum crossed_sum(Entry e, Step s) {
  using A = TraversedSum::Axis;
  switch (s) {
  case Step::Right:
    return {A::Row, e.row, e.col, 0};
  case Step::Left:
    return {A::Row, e.row, e.col - 1, 0};
  case Step::Down:
    return {A::Column, e.row, e.col, 0};
  case Step::Up:
    return {A::Column, e.row - 1, e.col, 0};
  }
  return {};
}

const Rational &value_of(const PartialSumTableau &t, const TraversedSum &s) {
  return s.axis == TraversedSum::Axis::Row ? t.row(s.i, s.j) : t.col(s.i, s.j);
}

bool can_step(const PartialSumTableau &t, Entry e, Step s) {
  const auto n = t.order();
  switch (s) {
  case Step::Right:
    if (e.col == n)
      return false;
    break;
  case Step::Left:
    if (e.col == 1)
      return false;
    break;
  case Step::Down:
    if (e.row == n)
      return false;
    break;
  case Step::Up:
    if (e.row == 1)
      return false;
    break;
  }
  return is_inner(value_of(t, crossed_sum(e, s)));
}

void check_tableau(const PartialSumTableau &t) {
  const auto n = t.order();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (t.row(i, j) < 0 || t.row(i, j) > 1)
        throw DecompositionLogicError("row prefix sum outside [0,1]");
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (t.col(i, j) < 0 || t.col(i, j) > 1)
        throw DecompositionLogicError("column prefix sum outside [0,1]");
  for (std::size_t k = 1; k <= n; ++k)
    if (is_inner(t.row(k, n)) || is_inner(t.col(n, k)))
      throw DecompositionLogicError("inner total sum");
}

} // namespace

std::optional<Circuit> find_circuit(const PartialSumTableau &t) {
  check_tableau(t);
  const auto n = t.order();

  std::optional<std::pair<Entry, Step>> start;
  for (std::size_t i = 1; i <= n && !start; ++i)
    for (std::size_t j = 1; j <= n && !start; ++j) {
      if (j < n && is_inner(t.row(i, j)))
        start = {{i, j}, Step::Right};
      else if (i < n && is_inner(t.col(i, j)))
        start = {{i, j}, Step::Down};
    }
  if (!start)
    return std::nullopt;

  // path[k] -> path[k+1] is taken with steps[k].
  std::vector<Entry> path{start->first};
  std::vector<Step> steps{start->second};
  std::map<Entry, std::size_t> seen{{start->first, 0}};
  Entry here = advance(start->first, start->second);
  std::size_t loop_start = 0;
  for (;;) {
    if (auto it = seen.find(here); it != seen.end()) {
      loop_start = it->second;
      break;
    }
    seen.emplace(here, path.size());
    path.push_back(here);
    const Step back = reverse(steps.back());
    std::optional<Step> next;
    for (Step s : kStepOrder)
      if (s != back && can_step(t, here, s)) {
        next = s;
        break;
      }
    // Each entry touches zero or at least two inner sums, because the four
    // sums around it satisfy right + up = down + left.
    if (!next)
      throw DecompositionLogicError("dead end on an inner-sum path");
    steps.push_back(*next);
    here = advance(here, *next);
  }

  const std::vector<Entry> loop(path.begin() + static_cast<std::ptrdiff_t>(loop_start),
                                path.end());
  const std::vector<Step> moves(steps.begin() + static_cast<std::ptrdiff_t>(loop_start),
                                steps.end());
  const std::size_t len = loop.size();
  if (len < 4)
    throw DecompositionLogicError("circuit shorter than four entries");

  std::vector<std::size_t> corner_at;
  for (std::size_t k = 0; k < len; ++k)
    if (moves[(k + len - 1) % len] != moves[k])
      corner_at.push_back(k);
  if (corner_at.size() < 4 || corner_at.size() % 2 != 0)
    throw DecompositionLogicError("circuit has an odd number of corners");

  Circuit c;
  std::map<std::size_t, int> label;
  for (std::size_t q = 0; q < corner_at.size(); ++q) {
    const int sign = q % 2 == 0 ? 1 : -1;
    const auto &e = loop[corner_at[q]];
    c.corners.push_back({e.row, e.col, sign});
    label[corner_at[q]] = sign;
  }
  for (std::size_t q = 0; q < corner_at.size(); ++q) {
    const auto from = corner_at[q];
    const auto to = corner_at[(q + 1) % corner_at.size()];
    const Step s = moves[from];
    // Left/upper end of the segment decides the direction of change.
    const bool forward = s == Step::Right || s == Step::Down;
    const int shift = forward ? label[from] : label[to];
    for (std::size_t k = from; k != to; k = (k + 1) % len) {
      auto sum = crossed_sum(loop[k], s);
      sum.shift = shift;
      c.traversed.push_back(sum);
    }
  }

  for (std::size_t q = 0; q < c.corners.size(); ++q) {
    const auto &a = c.corners[q];
    const auto &b = c.corners[(q + 1) % c.corners.size()];
    const bool same_row = a.row == b.row;
    if (same_row != horizontal(moves[corner_at[q]]) || a.sign == b.sign)
      throw DecompositionLogicError("malformed circuit");
  }
  return c;
}

CircuitSplit split_on_circuit(const RationalMatrix &x, const Circuit &c) {
  const PartialSumTableau t(x);
  if (c.traversed.empty() || c.corners.size() < 4)
    throw DecompositionLogicError("degenerate circuit");

  Rational k_plus, k_minus;
  bool first = true;
  for (const auto &s : c.traversed) {
    const Rational &v = value_of(t, s);
    if (!is_inner(v))
      throw DecompositionLogicError("circuit crosses a non-inner sum");
    Rational up = 1 - v;
    const Rational &room_plus = s.shift > 0 ? up : v;
    const Rational &room_minus = s.shift > 0 ? v : up;
    if (first || room_plus < k_plus)
      k_plus = room_plus;
    if (first || room_minus < k_minus)
      k_minus = room_minus;
    first = false;
  }
  if (k_plus <= 0 || k_minus <= 0)
    throw DecompositionLogicError("degenerate circuit: zero step");

  CircuitSplit out{k_plus, x, k_minus, x};
  for (const auto &corner : c.corners) {
    if (corner.sign > 0) {
      out.raised(corner.row, corner.col) += k_plus;
      out.lowered(corner.row, corner.col) -= k_minus;
    } else {
      out.raised(corner.row, corner.col) -= k_plus;
      out.lowered(corner.row, corner.col) += k_minus;
    }
  }
  return out;
}

ConvexCombination::ConvexCombination(std::vector<ConvexTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::invalid_argument("convex combination needs at least one term");
  std::sort(terms_.begin(), terms_.end(),
            [](const ConvexTerm &a, const ConvexTerm &b) { return a.matrix < b.matrix; });
  Rational total = 0;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto &term = terms_[k];
    if (term.coefficient <= 0)
      throw std::invalid_argument("coefficients must be positive");
    if (term.matrix.order() != terms_.front().matrix.order())
      throw std::invalid_argument("terms have different orders");
    if (k > 0 && term.matrix == terms_[k - 1].matrix)
      throw std::invalid_argument("repeated matrix in convex combination");
    total += term.coefficient;
  }
  if (total != 1)
    throw std::invalid_argument("coefficients sum to " + to_string(total) +
                                ", not 1");
}

RationalMatrix ConvexCombination::recombine() const {
  if (terms_.empty())
    throw std::logic_error("empty convex combination");
  RationalMatrix sum(terms_.front().matrix.order());
  for (const auto &term : terms_)
    sum += term.coefficient * term.matrix.to_rational();
  return sum;
}

ConvexCombination decompose(const RationalMatrix &x, DecompositionStats *stats) {
  if (auto v = check_membership(x).violated)
    throw NotAMember(*v);

  struct Pending {
    Rational coefficient;
    std::size_t depth;
  };
  // Keyed by (non-inner count, matrix): children always have a larger count,
  // so a node has received all of its mass by the time it is popped.
  std::map<std::pair<std::size_t, RationalMatrix>, Pending> work;
  std::map<AsmMatrix, Rational> leaves;
  DecompositionStats local;

  work.emplace(std::make_pair(PartialSumTableau(x).non_inner_count(), x),
               Pending{1, 0});
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const RationalMatrix &m = node.key().second;
    const Pending &p = node.mapped();
    local.max_depth = std::max(local.max_depth, p.depth);

    const PartialSumTableau t(m);
    auto circuit = find_circuit(t);
    if (!circuit) {
      AsmMatrix a = [&] {
        try {
          return validate_asm(m);
        } catch (const InvalidAsm &e) {
          throw DecompositionLogicError(std::string("leaf is not an ASM: ") + e.what());
        }
      }();
      leaves[a] += p.coefficient;
      continue;
    }

    auto split = split_on_circuit(m, *circuit);
    ++local.splits;
    const std::pair<Rational, RationalMatrix *> children[] = {
        {p.coefficient * split.weight_raised(), &split.raised},
        {p.coefficient * split.weight_lowered(), &split.lowered}};
    for (const auto &[weight, child] : children) {
      const auto count = PartialSumTableau(*child).non_inner_count();
      if (count <= node.key().first)
        throw DecompositionLogicError("split did not reduce inner sums");
      auto [it, inserted] = work.try_emplace(std::make_pair(count, std::move(*child)),
                                             Pending{weight, p.depth + 1});
      if (!inserted) {
        it->second.coefficient += weight;
        it->second.depth = std::max(it->second.depth, p.depth + 1);
      }
    }
  }

  std::vector<ConvexTerm> terms;
  terms.reserve(leaves.size());
  for (auto &[a, c] : leaves)
    terms.push_back({c, a});
  if (stats)
    *stats = local;
  return ConvexCombination(std::move(terms));
}

} // namespace asmpoly
