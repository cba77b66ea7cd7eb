#pragma once

#include "asmpoly/enumeration.hpp"
#include "asmpoly/flow_grid.hpp"
#include "asmpoly/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace asmpoly {

inline constexpr std::size_t kDefaultLatticeCap = 4;

/// A face of ASM_n: its elementary flow grid, the pool indices of its
/// vertices (ascending, hence lexicographic) and its dimension. The empty
/// face has an empty grid, no vertices and dimension -1.
struct Face {
  FlowGrid grid;
  std::vector<std::size_t> vertex_ids;
  int dimension = -1;

  [[nodiscard]] bool is_empty() const { return vertex_ids.empty(); }
  friend bool operator==(const Face &a, const Face &b) {
    return a.grid == b.grid && a.vertex_ids == b.vertex_ids &&
           a.dimension == b.dimension;
  }
};

/// Facets of ASM_n for n >= 3. The four partial families vanish a partial
/// line sum ending next to interior position (i, j), 2 <= i, j <= n-1:
///
///   TopPartial     x_1j + ... + x_{i-1,j} = 0
///   LeftPartial    x_i1 + ... + x_{i,j-1} = 0
///   BottomPartial  x_{i+1,j} + ... + x_nj = 0
///   RightPartial   x_{i,j+1} + ... + x_in = 0
///
/// Corner fixes x_ij = 0 at one of the four corners. Order 2 is a segment;
/// its two facets are the vertices, family Vertex with i = pool index + 1.
struct FacetDescriptor {
  enum class Family { TopPartial, LeftPartial, BottomPartial, RightPartial, Corner, Vertex };
  Family family;
  std::size_t i;
  std::size_t j;
  friend bool operator==(const FacetDescriptor &, const FacetDescriptor &) = default;
};

std::string family_name(FacetDescriptor::Family f);

/// All 4(n-2)^2 + 4 descriptors (n >= 3) in a fixed order: the partial
/// families in the order above with (i, j) row-major, then the corners
/// (1,1), (1,n), (n,1), (n,n).
std::vector<FacetDescriptor> facet_descriptors(std::size_t n);

/// The linear form that is >= 0 on ASM_n and vanishes exactly on the facet.
Rational facet_form(const FacetDescriptor &f, const RationalMatrix &x);
bool facet_contains(const FacetDescriptor &f, const AsmMatrix &a);

/// Edges of C_n whose removal cuts out the facet: one edge for partial
/// families, two for corners.
std::vector<GridEdge> facet_removed_edges(const FacetDescriptor &f, std::size_t n);

/// Facets on which `a` lies (n >= 3), in facet_descriptors order.
std::vector<FacetDescriptor> facets_containing(const AsmMatrix &a);

/// Linear functional sum_ij coefficient_ij * x_ij: for every directed edge of
/// g(A), the prefix sum from the border in that edge's direction.
struct SeparatingHyperplane {
  std::vector<std::vector<long>> coefficients; // n x n, 0-based storage
  Rational threshold;

  [[nodiscard]] Rational evaluate(const RationalMatrix &x) const;
  [[nodiscard]] Rational evaluate(const AsmMatrix &a) const;
};

SeparatingHyperplane separating_hyperplane(const AsmMatrix &a);

struct Facet {
  FacetDescriptor descriptor;
  Face face;
};

struct FaceLattice {
  std::size_t n = 0;
  /// Sorted by (dimension, grid); faces.front() is the empty face and
  /// faces.back() the whole polytope.
  std::vector<Face> faces;
  /// (lower, upper) index pairs, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  /// f_vector()[k] = number of faces of dimension k - 1.
  [[nodiscard]] std::vector<std::size_t> f_vector() const;
};

/// ASM_n with its vertex pool; entry point for every face computation.
class AsmPolytope {
public:
  explicit AsmPolytope(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

  [[nodiscard]] std::size_t order() const { return pool_.n; }
  [[nodiscard]] int dimension() const {
    const int m = static_cast<int>(pool_.n) - 1;
    return m * m;
  }
  [[nodiscard]] const VertexPool &pool() const { return pool_; }
  [[nodiscard]] std::vector<AsmMatrix> vertices_of(const Face &f) const;

  [[nodiscard]] Face empty_face() const;
  [[nodiscard]] Face whole() const;
  /// f(G): the face spanned by every ASM whose grid lies in g. Empty face if
  /// there is none.
  [[nodiscard]] Face face_of_grid(const FlowGrid &g) const;
  /// Smallest face containing every matrix in s (s nonempty).
  [[nodiscard]] Face face_closure(std::span<const AsmMatrix> s) const;
  [[nodiscard]] Face face_closure_ids(std::span<const std::size_t> ids) const;
  [[nodiscard]] bool is_edge(const AsmMatrix &a, const AsmMatrix &b) const;

  /// Union of grids; throws std::logic_error if the union is not elementary.
  [[nodiscard]] Face join(const Face &a, const Face &b) const;
  /// Face spanned by the ASMs whose grids lie in both grids.
  [[nodiscard]] Face meet(const Face &a, const Face &b) const;

  /// Facets with their faces, taken from the equality description and
  /// checked against the removed-edge grids. Order >= 2.
  [[nodiscard]] std::vector<Facet> enumerate_facets() const;

  /// Join-closure of the vertices plus the empty face, with covering
  /// relations. Throws CapExceeded above `lattice_cap`.
  [[nodiscard]] FaceLattice enumerate_faces(std::size_t lattice_cap = kDefaultLatticeCap) const;

private:
  [[nodiscard]] Face make_face(FlowGrid grid, std::vector<std::size_t> ids) const;
  void check_order(std::size_t n) const;

  VertexPool pool_;
};

} // namespace asmpoly
