#pragma once

// Plain-text formats. All indices are 1-based; every emitter ends each line
// with '\n' and never writes decimals.
//
//   matrix         line 1: n; then n lines of n space-separated rationals
//   grid           line 1: n; then one "(i,j)->(k,l)" edge per line, sorted
//   vector         one line of space-separated rationals
//   decomposition  per term: coefficient line, then the ASM as a matrix;
//                  optionally "recombined" followed by the summed matrix
//   lattice        see format_lattice

#include "asmpoly/decomposition.hpp"
#include "asmpoly/face_lattice.hpp"
#include "asmpoly/flow_grid.hpp"
#include "asmpoly/permutohedron.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asmpoly {

std::string format_matrix(const RationalMatrix &m);
std::string format_matrix(const AsmMatrix &a);
/// Exactly one matrix; trailing blank lines are allowed.
RationalMatrix parse_matrix(std::string_view text);
/// One or more matrices back to back, optionally separated by blank lines.
std::vector<RationalMatrix> parse_matrices(std::string_view text);

std::string format_grid(const FlowGrid &g);
FlowGrid parse_grid(std::string_view text);
/// FNV-1a 64 of format_grid(g).
std::uint64_t grid_hash(const FlowGrid &g);

std::string format_vector(const RationalVector &v);
RationalVector parse_vector(std::string_view text);

std::string format_decomposition(const ConvexCombination &c, bool with_checksum = false);
/// Validates the convex-combination invariants and, when present, that the
/// checksum matrix equals the recombined sum.
ConvexCombination parse_decomposition(std::string_view text);

/// "lattice n", "f-vector f_-1 f_0 ...", "faces N", then one line per face
/// (in lattice order): dimension, vertex count, 16-hex-digit grid hash and
/// the grid edges; then "covers M" and one "lower upper" index pair per line.
std::string format_lattice(const FaceLattice &lattice);

} // namespace asmpoly
