#include "asmpoly/kernels.hpp"

#include <cstdint>

namespace asmpoly::kernels {
namespace {

// Backtracking runs over column-prefix states: bit j of the state is the
// running sum of column j (always 0 or 1 for an ASM prefix). Every state
// admits the rows listed in `steps[state]`, in lexicographic order.
struct RowStep {
  std::vector<std::int8_t> row;
  std::uint32_t next;
};

class RowTable {
public:
  explicit RowTable(std::size_t n) : n_(n), steps_(std::size_t{1} << n) {
    std::vector<std::int8_t> row(n);
    for (std::uint32_t s = 0; s < steps_.size(); ++s)
      fill(s, 0, 0, s, row);
  }

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] const std::vector<RowStep> &from(std::uint32_t s) const {
    return steps_[s];
  }

private:
  void fill(std::uint32_t state, std::size_t j, int prefix, std::uint32_t next,
            std::vector<std::int8_t> &row) {
    if (j == n_) {
      if (prefix == 1)
        steps_[state].push_back({row, next});
      return;
    }
    const int column = (state >> j) & 1U;
    for (int v = -1; v <= 1; ++v) {
      const int c = column + v;
      const int r = prefix + v;
      if (c < 0 || c > 1 || r < 0 || r > 1)
        continue;
      row[j] = static_cast<std::int8_t>(v);
      const auto bit = std::uint32_t{1} << j;
      fill(state, j + 1, r, c ? (next | bit) : (next & ~bit), row);
    }
  }

  std::size_t n_;
  std::vector<std::vector<RowStep>> steps_;
};

// Rows placed so far always sum to their count, so a state after n rows is
// necessarily all ones and every branch completes.
void extend(const RowTable &table, std::uint32_t state,
            std::vector<std::int8_t> &prefix, std::vector<AsmMatrix> &out) {
  const auto n = table.order();
  if (prefix.size() == n * n) {
    out.push_back(AsmBuilder::trusted(n, prefix));
    return;
  }
  for (const auto &step : table.from(state)) {
    prefix.insert(prefix.end(), step.row.begin(), step.row.end());
    extend(table, step.next, prefix, out);
    prefix.resize(prefix.size() - n);
  }
}

struct Prefix {
  std::vector<std::int8_t> entries;
  std::uint32_t state;
};

std::vector<Prefix> split_points(const RowTable &table, std::size_t rows) {
  std::vector<Prefix> frontier{{{}, 0}};
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Prefix> next;
    for (const auto &p : frontier)
      for (const auto &step : table.from(p.state)) {
        auto entries = p.entries;
        entries.insert(entries.end(), step.row.begin(), step.row.end());
        next.push_back({std::move(entries), step.next});
      }
    frontier = std::move(next);
  }
  return frontier;
}

bool contained(const FlowGrid &inner, const FlowGrid &outer) {
  return inner.order() == outer.order() && inner.is_subset_of(outer);
}

} // namespace

std::vector<AsmMatrix> enumerate_asms(std::size_t n) {
  const RowTable table(n);
  const auto prefixes = split_points(table, std::min<std::size_t>(n, 2));
  std::vector<std::vector<AsmMatrix>> parts(prefixes.size());
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    auto entries = prefixes[k].entries;
    extend(table, prefixes[k].state, entries, parts[k]);
  }

  std::size_t total = 0;
  for (const auto &p : parts)
    total += p.size();
  std::vector<AsmMatrix> out;
  out.reserve(total);
  for (auto &p : parts)
    for (auto &a : p)
      out.push_back(std::move(a));
  return out;
}

std::vector<std::size_t> contained_grids(const FlowGrid &grid,
                                         std::span<const FlowGrid> pool) {
  const auto count = static_cast<std::ptrdiff_t>(pool.size());
  std::vector<char> hit(pool.size(), 0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k)
    hit[k] = contained(pool[k], grid);

  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < hit.size(); ++k)
    if (hit[k])
      out.push_back(k);
  return out;
}

std::vector<std::vector<std::size_t>>
contained_grids_batch(std::span<const FlowGrid> grids,
                      std::span<const FlowGrid> pool) {
  std::vector<std::vector<std::size_t>> out(grids.size());
  const auto count = static_cast<std::ptrdiff_t>(grids.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t g = 0; g < count; ++g)
    out[g] = serial::contained_grids(grids[g], pool);
  return out;
}

namespace serial {

std::vector<AsmMatrix> enumerate_asms(std::size_t n) {
  const RowTable table(n);
  std::vector<AsmMatrix> out;
  std::vector<std::int8_t> prefix;
  prefix.reserve(n * n);
  extend(table, 0, prefix, out);
  return out;
}

std::vector<std::size_t> contained_grids(const FlowGrid &grid,
                                         std::span<const FlowGrid> pool) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pool.size(); ++k)
    if (contained(pool[k], grid))
      out.push_back(k);
  return out;
}

std::vector<std::vector<std::size_t>>
contained_grids_batch(std::span<const FlowGrid> grids,
                      std::span<const FlowGrid> pool) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(grids.size());
  for (const auto &g : grids)
    out.push_back(contained_grids(g, pool));
  return out;
}

} // namespace serial
} // namespace asmpoly::kernels
