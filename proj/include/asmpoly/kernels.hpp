#pragma once

// Data-parallel kernels. Each kernel has an OpenMP version (used by the
// library) and a serial reference in `serial::` with identical output; the
// tests compare the two and bench/ times them.

#include "asmpoly/flow_grid.hpp"
#include "asmpoly/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace asmpoly::kernels {

/// All n x n ASMs, lexicographic. Parallel over two-row prefixes.
std::vector<AsmMatrix> enumerate_asms(std::size_t n);

/// Indices k (ascending) with pool[k] a subgraph of `grid`.
std::vector<std::size_t> contained_grids(const FlowGrid &grid,
                                         std::span<const FlowGrid> pool);

/// contained_grids for a batch of grids; parallel over the batch.
std::vector<std::vector<std::size_t>>
contained_grids_batch(std::span<const FlowGrid> grids,
                      std::span<const FlowGrid> pool);

namespace serial {
std::vector<AsmMatrix> enumerate_asms(std::size_t n);
std::vector<std::size_t> contained_grids(const FlowGrid &grid,
                                         std::span<const FlowGrid> pool);
std::vector<std::vector<std::size_t>>
contained_grids_batch(std::span<const FlowGrid> grids,
                      std::span<const FlowGrid> pool);
} // namespace serial

} // namespace asmpoly::kernels
