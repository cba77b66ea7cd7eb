#include "asmpoly/face_lattice.hpp"

#include "asmpoly/kernels.hpp"
#include "asmpoly/partial_sums.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace asmpoly {

std::string family_name(FacetDescriptor::Family f) {
  using F = FacetDescriptor::Family;
  switch (f) {
  case F::TopPartial:
    return "top-partial";
  case F::LeftPartial:
    return "left-partial";
  case F::BottomPartial:
    return "bottom-partial";
  case F::RightPartial:
    return "right-partial";
  case F::Corner:
    return "corner";
  case F::Vertex:
    return "vertex";
  }
  return "unknown";
}

std::vector<FacetDescriptor> facet_descriptors(std::size_t n) {
  using F = FacetDescriptor::Family;
  if (n < 3)
    throw std::invalid_argument("facet descriptors need order >= 3");
  std::vector<FacetDescriptor> out;
  for (F family : {F::TopPartial, F::LeftPartial, F::BottomPartial, F::RightPartial})
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t j = 2; j < n; ++j)
        out.push_back({family, i, j});
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, n}, {n, 1}, {n, n}})
    out.push_back({F::Corner, i, j});
  return out;
}

Rational facet_form(const FacetDescriptor &f, const RationalMatrix &x) {
  using F = FacetDescriptor::Family;
  const auto n = x.order();
  Rational s = 0;
  switch (f.family) {
  case F::TopPartial:
    for (std::size_t r = 1; r < f.i; ++r)
      s += x(r, f.j);
    break;
  case F::LeftPartial:
    for (std::size_t c = 1; c < f.j; ++c)
      s += x(f.i, c);
    break;
  case F::BottomPartial:
    for (std::size_t r = f.i + 1; r <= n; ++r)
      s += x(r, f.j);
    break;
  case F::RightPartial:
    for (std::size_t c = f.j + 1; c <= n; ++c)
      s += x(f.i, c);
    break;
  case F::Corner:
    s = x(f.i, f.j);
    break;
  case F::Vertex:
    throw std::invalid_argument("vertex facets have no linear form");
  }
  return s;
}

bool facet_contains(const FacetDescriptor &f, const AsmMatrix &a) {
  return facet_form(f, a.to_rational()) == 0;
}

std::vector<GridEdge> facet_removed_edges(const FacetDescriptor &f, std::size_t n) {
  if (f.family != FacetDescriptor::Family::Vertex && (f.i > n || f.j > n))
    throw std::invalid_argument("facet index outside the grid");
  using F = FacetDescriptor::Family;
  const int i = static_cast<int>(f.i);
  const int j = static_cast<int>(f.j);
  const GridVertex at{i, j};
  switch (f.family) {
  case F::TopPartial:
    return {{{i - 1, j}, at}};
  case F::LeftPartial:
    return {{{i, j - 1}, at}};
  case F::BottomPartial:
    return {{{i + 1, j}, at}};
  case F::RightPartial:
    return {{{i, j + 1}, at}};
  case F::Corner: {
    // The two edges pointing from the corner into the matrix.
    const int dr = i == 1 ? 1 : -1;
    const int dc = j == 1 ? 1 : -1;
    return {{at, {i, j + dc}}, {at, {i + dr, j}}};
  }
  case F::Vertex:
    break;
  }
  throw std::invalid_argument("vertex facets have no removed edges");
}

std::vector<FacetDescriptor> facets_containing(const AsmMatrix &a) {
  std::vector<FacetDescriptor> out;
  const auto x = a.to_rational();
  for (const auto &f : facet_descriptors(a.order()))
    if (facet_form(f, x) == 0)
      out.push_back(f);
  return out;
}

Rational SeparatingHyperplane::evaluate(const RationalMatrix &x) const {
  Rational total = 0;
  const auto n = x.order();
  if (coefficients.size() != n)
    throw std::invalid_argument("hyperplane order mismatch");
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (auto c = coefficients[i - 1][j - 1])
        total += Rational(c) * x(i, j);
  return total;
}

Rational SeparatingHyperplane::evaluate(const AsmMatrix &a) const {
  return evaluate(a.to_rational());
}

SeparatingHyperplane separating_hyperplane(const AsmMatrix &a) {
  const auto n = a.order();
  SeparatingHyperplane h;
  h.coefficients.assign(n, std::vector<long>(n, 0));
  auto &c = h.coefficients;
  for (const auto &e : asm_to_grid(a).grid().edges()) {
    const auto i = static_cast<std::size_t>(e.tail.row - 1);
    const auto j = static_cast<std::size_t>(e.tail.col - 1);
    if (e.head.col > e.tail.col)
      for (std::size_t k = 0; k <= j; ++k)
        ++c[i][k];
    else if (e.head.col < e.tail.col)
      for (std::size_t k = j; k < n; ++k)
        ++c[i][k];
    else if (e.head.row > e.tail.row)
      for (std::size_t k = 0; k <= i; ++k)
        ++c[k][j];
    else
      for (std::size_t k = i; k < n; ++k)
        ++c[k][j];
  }
  const long edges = 2 * static_cast<long>(n) * static_cast<long>(n + 1);
  h.threshold = Rational(edges) - Rational(1, 2);
  return h;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto &face : faces) {
    const auto k = static_cast<std::size_t>(face.dimension + 1);
    if (f.size() <= k)
      f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

AsmPolytope::AsmPolytope(std::size_t n, std::size_t cap)
    : pool_(VertexPool::build(n, cap)) {}

void AsmPolytope::check_order(std::size_t n) const {
  if (n != pool_.n)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " does not match polytope order " +
                                std::to_string(pool_.n));
}

std::vector<AsmMatrix> AsmPolytope::vertices_of(const Face &f) const {
  std::vector<AsmMatrix> out;
  out.reserve(f.vertex_ids.size());
  for (auto k : f.vertex_ids)
    out.push_back(pool_.asms.at(k));
  return out;
}

Face AsmPolytope::make_face(FlowGrid grid, std::vector<std::size_t> ids) const {
  if (ids.empty())
    return empty_face();
  const int dim = static_cast<int>(doubly_directed_regions(grid));
  return Face{std::move(grid), std::move(ids), dim};
}

Face AsmPolytope::empty_face() const { return Face{FlowGrid(pool_.n), {}, -1}; }

Face AsmPolytope::whole() const { return face_of_grid(FlowGrid::complete(pool_.n)); }

Face AsmPolytope::face_of_grid(const FlowGrid &g) const {
  check_order(g.order());
  auto ids = kernels::contained_grids(g, pool_.grids);
  FlowGrid cover(pool_.n);
  for (auto k : ids)
    cover |= pool_.grids[k];
  return make_face(std::move(cover), std::move(ids));
}

Face AsmPolytope::face_closure_ids(std::span<const std::size_t> ids) const {
  if (ids.empty())
    throw std::invalid_argument("face closure of an empty set");
  FlowGrid grid(pool_.n);
  for (auto k : ids)
    grid |= pool_.grids.at(k);
  auto witness = kernels::contained_grids(grid, pool_.grids);
  return make_face(std::move(grid), std::move(witness));
}

Face AsmPolytope::face_closure(std::span<const AsmMatrix> s) const {
  std::vector<std::size_t> ids;
  ids.reserve(s.size());
  for (const auto &a : s) {
    check_order(a.order());
    ids.push_back(pool_.index_of(a));
  }
  return face_closure_ids(ids);
}

bool AsmPolytope::is_edge(const AsmMatrix &a, const AsmMatrix &b) const {
  if (a == b)
    throw std::invalid_argument("is_edge needs two distinct ASMs");
  const AsmMatrix pair[] = {a, b};
  const auto f = face_closure(pair);
  return f.dimension == 1 && f.vertex_ids.size() == 2;
}

Face AsmPolytope::join(const Face &a, const Face &b) const {
  check_order(a.grid.order());
  check_order(b.grid.order());
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  FlowGrid grid = a.grid | b.grid;
  auto witness = kernels::contained_grids(grid, pool_.grids);
  FlowGrid cover(pool_.n);
  for (auto k : witness)
    cover |= pool_.grids[k];
  if (!(cover == grid))
    throw std::logic_error("join of elementary flow grids is not elementary");
  return make_face(std::move(grid), std::move(witness));
}

Face AsmPolytope::meet(const Face &a, const Face &b) const {
  check_order(a.grid.order());
  check_order(b.grid.order());
  auto ids = kernels::contained_grids(a.grid & b.grid, pool_.grids);
  FlowGrid grid(pool_.n);
  for (auto k : ids)
    grid |= pool_.grids[k];
  return make_face(std::move(grid), std::move(ids));
}

std::vector<Facet> AsmPolytope::enumerate_facets() const {
  const auto n = pool_.n;
  std::vector<Facet> out;
  if (n < 2)
    throw std::invalid_argument("ASM_1 is a point and has no facets");
  if (n == 2) {
    for (std::size_t k = 0; k < pool_.asms.size(); ++k) {
      const std::size_t id[] = {k};
      out.push_back({{FacetDescriptor::Family::Vertex, k + 1, 0}, face_closure_ids(id)});
    }
    return out;
  }
  for (const auto &d : facet_descriptors(n)) {
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < pool_.asms.size(); ++k)
      if (facet_contains(d, pool_.asms[k]))
        ids.push_back(k);

    FlowGrid cut = FlowGrid::complete(n);
    for (const auto &e : facet_removed_edges(d, n))
      cut.erase(e);
    if (kernels::contained_grids(cut, pool_.grids) != ids)
      throw std::logic_error("facet " + family_name(d.family) +
                             " disagrees with its removed-edge grid");

    FlowGrid grid(n);
    for (auto k : ids)
      grid |= pool_.grids[k];
    out.push_back({d, make_face(std::move(grid), std::move(ids))});
  }
  return out;
}

FaceLattice AsmPolytope::enumerate_faces(std::size_t lattice_cap) const {
  const auto n = pool_.n;
  if (n > lattice_cap)
    throw CapExceeded("order " + std::to_string(n) + " exceeds the lattice cap " +
                      std::to_string(lattice_cap));

  std::vector<Face> faces;
  std::map<FlowGrid, std::size_t> index;
  std::vector<std::vector<std::size_t>> joins; // joins[f] = faces f v {vertex}

  std::vector<std::size_t> frontier;
  for (std::size_t k = 0; k < pool_.asms.size(); ++k) {
    const std::size_t id[] = {k};
    Face f = face_closure_ids(id);
    index.emplace(f.grid, faces.size());
    frontier.push_back(faces.size());
    faces.push_back(std::move(f));
  }
  joins.resize(faces.size());

  while (!frontier.empty()) {
    std::vector<FlowGrid> fresh;
    std::map<FlowGrid, std::size_t> fresh_slot;
    // (face, grid key) pairs whose target index is resolved after the batch.
    std::vector<std::pair<std::size_t, FlowGrid>> pending;
    for (auto f : frontier) {
      const auto &ids = faces[f].vertex_ids;
      for (std::size_t v = 0; v < pool_.asms.size(); ++v) {
        if (std::binary_search(ids.begin(), ids.end(), v))
          continue;
        FlowGrid g = faces[f].grid | pool_.grids[v];
        if (!index.contains(g) && !fresh_slot.contains(g)) {
          fresh_slot.emplace(g, fresh.size());
          fresh.push_back(g);
        }
        pending.emplace_back(f, std::move(g));
      }
    }

    const auto witnesses = kernels::contained_grids_batch(fresh, pool_.grids);
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < fresh.size(); ++s) {
      FlowGrid cover(n);
      for (auto k : witnesses[s])
        cover |= pool_.grids[k];
      if (!(cover == fresh[s]))
        throw std::logic_error("join of elementary flow grids is not elementary");
      index.emplace(fresh[s], faces.size());
      next.push_back(faces.size());
      faces.push_back(make_face(fresh[s], witnesses[s]));
    }
    joins.resize(faces.size());
    for (auto &[f, g] : pending)
      joins[f].push_back(index.at(g));
    frontier = std::move(next);
  }

  // Upper covers of f are the inclusion-minimal faces among f v {vertex}:
  // any face strictly above f contains one of these joins.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto &cand = joins[f];
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto c : cand) {
      const bool minimal = std::none_of(cand.begin(), cand.end(), [&](std::size_t d) {
        return d != c && faces[d].grid.is_subset_of(faces[c].grid);
      });
      if (minimal)
        covers.emplace_back(f, c);
    }
  }

  // Prepend the empty face; it is covered by every vertex.
  const std::size_t vertex_count = pool_.asms.size();
  faces.insert(faces.begin(), empty_face());
  for (auto &[lo, hi] : covers) {
    ++lo;
    ++hi;
  }
  for (std::size_t k = 0; k < vertex_count; ++k)
    covers.emplace_back(0, k + 1);

  std::vector<std::size_t> order(faces.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (faces[a].dimension != faces[b].dimension)
      return faces[a].dimension < faces[b].dimension;
    return faces[a].grid < faces[b].grid;
  });
  std::vector<std::size_t> rank(faces.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[order[k]] = k;

  FaceLattice lattice;
  lattice.n = n;
  lattice.faces.reserve(faces.size());
  for (auto k : order)
    lattice.faces.push_back(std::move(faces[k]));
  for (auto [lo, hi] : covers)
    lattice.covers.emplace_back(rank[lo], rank[hi]);
  std::sort(lattice.covers.begin(), lattice.covers.end());
  return lattice;
}

} // namespace asmpoly
