#pragma once

#include "asmpoly/matrix.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace asmpoly {

/// Grid vertex (row, col) with 0 <= row, col <= n+1. Internal when both
/// coordinates are in 1..n; boundary when exactly one is 0 or n+1.
struct GridVertex {
  int row = 0;
  int col = 0;

  [[nodiscard]] bool is_internal(std::size_t n) const {
    const int m = static_cast<int>(n);
    return row >= 1 && row <= m && col >= 1 && col <= m;
  }
  friend auto operator<=>(const GridVertex &, const GridVertex &) = default;
};

/// Neighbor directions, numbered so that sorting edges by (tail, direction)
/// matches sorting by (tail row, tail col, head row, head col).
enum class Direction : std::uint8_t { Up = 0, Left = 1, Right = 2, Down = 3 };

inline constexpr Direction kAllDirections[] = {Direction::Up, Direction::Left,
                                               Direction::Right,
                                               Direction::Down};

GridVertex step(GridVertex v, Direction d);
Direction opposite(Direction d);

struct GridEdge {
  GridVertex tail;
  GridVertex head;
  friend auto operator<=>(const GridEdge &, const GridEdge &) = default;
};

class InvalidFlowGrid : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A subgraph of the complete flow grid C_n, stored as a bitset over its
/// 4n^2 directed edges (every edge of C_n leaves an internal vertex).
class FlowGrid {
public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  /// Empty grid of order n.
  explicit FlowGrid(std::size_t n);
  static FlowGrid complete(std::size_t n);

  [[nodiscard]] std::size_t order() const { return n_; }

  /// Throws InvalidFlowGrid unless the edge belongs to C_n.
  [[nodiscard]] std::size_t edge_index(const GridEdge &e) const;
  [[nodiscard]] std::size_t edge_index(int row, int col, Direction d) const {
    return 4 * (static_cast<std::size_t>(row - 1) * n_ +
                static_cast<std::size_t>(col - 1)) +
           static_cast<std::size_t>(d);
  }
  [[nodiscard]] GridEdge edge_at(std::size_t index) const;

  [[nodiscard]] bool has(int row, int col, Direction d) const {
    return bits_.test(edge_index(row, col, d));
  }
  [[nodiscard]] bool contains(const GridEdge &e) const {
    return bits_.test(edge_index(e));
  }
  void insert(int row, int col, Direction d) { bits_.set(edge_index(row, col, d)); }
  void insert(const GridEdge &e) { bits_.set(edge_index(e)); }
  void erase(const GridEdge &e) { bits_.reset(edge_index(e)); }

  [[nodiscard]] std::size_t edge_count() const { return bits_.count(); }
  [[nodiscard]] bool empty() const { return bits_.none(); }
  /// Edges in canonical order.
  [[nodiscard]] std::vector<GridEdge> edges() const;

  [[nodiscard]] bool is_subset_of(const FlowGrid &other) const {
    return bits_.is_subset_of(other.bits_);
  }
  FlowGrid &operator|=(const FlowGrid &other);
  FlowGrid &operator&=(const FlowGrid &other);
  friend FlowGrid operator|(FlowGrid a, const FlowGrid &b) { return a |= b; }
  friend FlowGrid operator&(FlowGrid a, const FlowGrid &b) { return a &= b; }

  [[nodiscard]] const Bits &bits() const { return bits_; }

  friend bool operator==(const FlowGrid &a, const FlowGrid &b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  /// Canonical order: lexicographic on the sorted edge lists.
  friend bool operator<(const FlowGrid &a, const FlowGrid &b);

private:
  std::size_t n_;
  Bits bits_;
};

/// A flow grid in which every internal vertex is all-in, all-out, or passes
/// flow straight through in both axes, with exactly one direction on each
/// internal adjacency and every boundary edge present.
class SimpleFlowGrid {
public:
  /// Throws InvalidFlowGrid describing the first failed condition.
  explicit SimpleFlowGrid(FlowGrid grid);

  [[nodiscard]] const FlowGrid &grid() const { return grid_; }
  [[nodiscard]] std::size_t order() const { return grid_.order(); }
  friend bool operator==(const SimpleFlowGrid &, const SimpleFlowGrid &) = default;

private:
  FlowGrid grid_;
};

/// Edge from v towards w exactly when the prefix sum from the border up to
/// v, in the direction of w, equals 1.
SimpleFlowGrid asm_to_grid(const AsmMatrix &a);
/// Sources become 1, sinks -1.
AsmMatrix grid_to_asm(const SimpleFlowGrid &g);
/// Validates `g` as a simple flow grid first.
AsmMatrix grid_to_asm(const FlowGrid &g);

FlowGrid complete_flow_grid(std::size_t n);

/// The n x n ASMs together with their simple flow grids, index-aligned.
struct VertexPool {
  std::size_t n = 0;
  std::vector<AsmMatrix> asms;
  std::vector<FlowGrid> grids;

  static VertexPool build(std::size_t n, std::size_t cap);
  /// Index of `a` in the (sorted) pool; throws if absent or of wrong order.
  [[nodiscard]] std::size_t index_of(const AsmMatrix &a) const;
};

struct ElementaryCheck {
  bool elementary = false;
  /// Pool indices of every ASM whose grid lies inside the tested grid.
  std::vector<std::size_t> witness;
};

ElementaryCheck is_elementary(const FlowGrid &g, const VertexPool &pool);

/// A flow grid certified to be a union of simple flow grids.
class ElementaryFlowGrid {
public:
  /// Throws InvalidFlowGrid if `g` is not elementary.
  ElementaryFlowGrid(FlowGrid g, const VertexPool &pool);

  [[nodiscard]] const FlowGrid &grid() const { return grid_; }
  [[nodiscard]] const std::vector<std::size_t> &witness() const { return witness_; }

private:
  FlowGrid grid_;
  std::vector<std::size_t> witness_;
};

/// Number of bounded faces of the planar graph formed by the internal
/// adjacencies present in both directions: E - V + C over that subgraph.
std::size_t doubly_directed_regions(const FlowGrid &g);

} // namespace asmpoly
