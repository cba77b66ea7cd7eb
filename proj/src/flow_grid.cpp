#include "asmpoly/flow_grid.hpp"

#include "asmpoly/enumeration.hpp"
#include "asmpoly/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace asmpoly {

GridVertex step(GridVertex v, Direction d) {
  switch (d) {
  case Direction::Up:
    return {v.row - 1, v.col};
  case Direction::Left:
    return {v.row, v.col - 1};
  case Direction::Right:
    return {v.row, v.col + 1};
  case Direction::Down:
    return {v.row + 1, v.col};
  }
  return v;
}

Direction opposite(Direction d) {
  return static_cast<Direction>(3 - static_cast<int>(d));
}

FlowGrid::FlowGrid(std::size_t n) : n_(n), bits_(4 * n * n) {
  if (n == 0)
    throw std::invalid_argument("grid order must be at least 1");
}

FlowGrid FlowGrid::complete(std::size_t n) {
  FlowGrid g(n);
  g.bits_.set();
  return g;
}

std::size_t FlowGrid::edge_index(const GridEdge &e) const {
  auto where = [](const GridEdge &x) {
    return "(" + std::to_string(x.tail.row) + "," + std::to_string(x.tail.col) +
           ")->(" + std::to_string(x.head.row) + "," +
           std::to_string(x.head.col) + ")";
  };
  if (!e.tail.is_internal(n_))
    throw InvalidFlowGrid("edge " + where(e) +
                          " does not leave an internal vertex");
  for (Direction d : kAllDirections)
    if (step(e.tail, d) == e.head)
      return edge_index(e.tail.row, e.tail.col, d);
  throw InvalidFlowGrid("edge " + where(e) + " joins non-adjacent vertices");
}

GridEdge FlowGrid::edge_at(std::size_t index) const {
  const auto cell = index / 4;
  const GridVertex tail{static_cast<int>(cell / n_) + 1,
                        static_cast<int>(cell % n_) + 1};
  return {tail, step(tail, static_cast<Direction>(index % 4))};
}

std::vector<GridEdge> FlowGrid::edges() const {
  std::vector<GridEdge> out;
  out.reserve(bits_.count());
  for (auto k = bits_.find_first(); k != Bits::npos; k = bits_.find_next(k))
    out.push_back(edge_at(k));
  return out;
}

FlowGrid &FlowGrid::operator|=(const FlowGrid &other) {
  if (other.n_ != n_)
    throw std::invalid_argument("grid order mismatch");
  bits_ |= other.bits_;
  return *this;
}

FlowGrid &FlowGrid::operator&=(const FlowGrid &other) {
  if (other.n_ != n_)
    throw std::invalid_argument("grid order mismatch");
  bits_ &= other.bits_;
  return *this;
}

bool operator<(const FlowGrid &a, const FlowGrid &b) {
  if (a.n_ != b.n_)
    return a.n_ < b.n_;
  using Bits = FlowGrid::Bits;
  auto x = a.bits_.find_first();
  auto y = b.bits_.find_first();
  while (x != Bits::npos && y != Bits::npos) {
    if (x != y)
      return x < y;
    x = a.bits_.find_next(x);
    y = b.bits_.find_next(y);
  }
  return x == Bits::npos && y != Bits::npos;
}

SimpleFlowGrid::SimpleFlowGrid(FlowGrid grid) : grid_(std::move(grid)) {
  const auto &g = grid_;
  const int n = static_cast<int>(g.order());
  auto at = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int k = 1; k <= n; ++k) {
    if (!g.has(k, 1, Direction::Left) || !g.has(k, n, Direction::Right) ||
        !g.has(1, k, Direction::Up) || !g.has(n, k, Direction::Down))
      throw InvalidFlowGrid("missing boundary edge in row or column " +
                            std::to_string(k));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < n && g.has(i, j, Direction::Right) == g.has(i, j + 1, Direction::Left))
        throw InvalidFlowGrid("need exactly one edge between " + at(i, j) +
                              " and " + at(i, j + 1));
      if (i < n && g.has(i, j, Direction::Down) == g.has(i + 1, j, Direction::Up))
        throw InvalidFlowGrid("need exactly one edge between " + at(i, j) +
                              " and " + at(i + 1, j));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool up = g.has(i, j, Direction::Up);
      const bool left = g.has(i, j, Direction::Left);
      const bool right = g.has(i, j, Direction::Right);
      const bool down = g.has(i, j, Direction::Down);
      const bool all_out = up && left && right && down;
      const bool all_in = !up && !left && !right && !down;
      const bool through = left != right && up != down;
      if (!all_out && !all_in && !through)
        throw InvalidFlowGrid("vertex " + at(i, j) +
                              " is neither a source, a sink nor straight-through");
    }
}

SimpleFlowGrid asm_to_grid(const AsmMatrix &a) {
  const int n = static_cast<int>(a.order());
  const auto un = a.order();
  // row_prefix[i][j] = a_i1 + ... + a_ij, col_prefix[i][j] = a_1j + ... + a_ij
  std::vector<std::vector<int>> row_prefix(un + 1, std::vector<int>(un + 1, 0));
  std::vector<std::vector<int>> col_prefix(un + 1, std::vector<int>(un + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      row_prefix[i][j] = row_prefix[i][j - 1] + a(i, j);
      col_prefix[i][j] = col_prefix[i - 1][j] + a(i, j);
    }
  FlowGrid g(un);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (row_prefix[i][j] == 1)
        g.insert(i, j, Direction::Right);
      if (row_prefix[i][j - 1] == 0)
        g.insert(i, j, Direction::Left);
      if (col_prefix[i][j] == 1)
        g.insert(i, j, Direction::Down);
      if (col_prefix[i - 1][j] == 0)
        g.insert(i, j, Direction::Up);
    }
  return SimpleFlowGrid(std::move(g));
}

AsmMatrix grid_to_asm(const SimpleFlowGrid &sg) {
  const auto &g = sg.grid();
  const int n = static_cast<int>(g.order());
  std::vector<std::int8_t> entries;
  entries.reserve(g.order() * g.order());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int out = 0;
      for (Direction d : kAllDirections)
        out += g.has(i, j, d);
      entries.push_back(out == 4 ? 1 : out == 0 ? -1 : 0);
    }
  auto a = AsmBuilder::trusted(g.order(), std::move(entries));
  if (auto v = find_asm_violation(to_int_matrix(a)))
    throw InvalidFlowGrid("grid decodes to a non-ASM: " + v->describe());
  if (!(asm_to_grid(a) == sg))
    throw InvalidFlowGrid("grid is not the flow grid of its decoded ASM");
  return a;
}

AsmMatrix grid_to_asm(const FlowGrid &g) { return grid_to_asm(SimpleFlowGrid(g)); }

FlowGrid complete_flow_grid(std::size_t n) { return FlowGrid::complete(n); }

VertexPool VertexPool::build(std::size_t n, std::size_t cap) {
  VertexPool pool;
  pool.n = n;
  pool.asms = enumerate_asms(n, cap);
  pool.grids.reserve(pool.asms.size());
  for (const auto &a : pool.asms)
    pool.grids.push_back(asm_to_grid(a).grid());
  return pool;
}

std::size_t VertexPool::index_of(const AsmMatrix &a) const {
  if (a.order() != n)
    throw std::invalid_argument("ASM order " + std::to_string(a.order()) +
                                " does not match pool order " + std::to_string(n));
  auto it = std::lower_bound(asms.begin(), asms.end(), a);
  if (it == asms.end() || !(*it == a))
    throw std::invalid_argument("ASM missing from vertex pool");
  return static_cast<std::size_t>(it - asms.begin());
}

ElementaryCheck is_elementary(const FlowGrid &g, const VertexPool &pool) {
  if (g.order() != pool.n)
    throw std::invalid_argument("grid order does not match vertex pool");
  ElementaryCheck result;
  result.witness = kernels::contained_grids(g, pool.grids);
  FlowGrid cover(g.order());
  for (auto k : result.witness)
    cover |= pool.grids[k];
  result.elementary = cover == g;
  return result;
}

ElementaryFlowGrid::ElementaryFlowGrid(FlowGrid g, const VertexPool &pool)
    : grid_(std::move(g)) {
  auto check = is_elementary(grid_, pool);
  if (!check.elementary)
    throw InvalidFlowGrid("grid is not a union of simple flow grids");
  witness_ = std::move(check.witness);
}

std::size_t doubly_directed_regions(const FlowGrid &g) {
  const int n = static_cast<int>(g.order());
  const auto cells = g.order() * g.order();
  std::vector<std::size_t> parent(cells);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> touched(cells, false);
  std::size_t doubled = 0;
  std::size_t components = 0;
  auto link = [&](std::size_t u, std::size_t v) {
    ++doubled;
    for (auto w : {u, v})
      if (!touched[w]) {
        touched[w] = true;
        ++components;
      }
    auto ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  };
  auto id = [n](int i, int j) {
    return static_cast<std::size_t>((i - 1) * n + (j - 1));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < n && g.has(i, j, Direction::Right) && g.has(i, j + 1, Direction::Left))
        link(id(i, j), id(i, j + 1));
      if (i < n && g.has(i, j, Direction::Down) && g.has(i + 1, j, Direction::Up))
        link(id(i, j), id(i + 1, j));
    }
  const auto vertices = static_cast<std::size_t>(
      std::count(touched.begin(), touched.end(), true));
  return doubled + components - vertices;
}

} // namespace asmpoly
