#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyslice/rational.hpp"

namespace polyslice {

using Edge = std::pair<int, int>;  // always first < second
using Facet = std::vector<int>;

/// A convex polytope given by its vertices and 1-skeleton, optionally with
/// facets (as vertex-index lists). Immutable once built.
class VPolytope {
 public:
  VPolytope(std::string name, std::size_t dim, std::vector<RVector> vertices, std::vector<Edge> edges,
            std::optional<std::vector<Facet>> facets = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<RVector>& vertices() const { return vertices_; }
  const RVector& vertex(std::size_t i) const { return vertices_[i]; }
  /// Sorted, each pair (i, j) with i < j.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& neighbors() const { return adjacency_; }
  const std::optional<std::vector<Facet>>& facets() const { return facets_; }
  bool has_edge(int i, int j) const;

  VPolytope renamed(std::string name) const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<RVector> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<std::vector<Facet>> facets_;
};

/// Parameters of the cyclic polytope conv(gamma(t_1), ..., gamma(t_n)) with
/// gamma(t) = (t, t^2, ..., t^d).
struct CyclicSpec {
  std::size_t d;
  std::size_t n;
  std::vector<Rational> params;  // strictly increasing, size n

  /// Default parameters t_i = i for i = 1..n.
  static CyclicSpec standard(std::size_t d, std::size_t n);
  void validate() const;
};

RVector moment_point(const Rational& t, std::size_t d);

// Families. All throw InputError on out-of-range parameters.
VPolytope hypercube(std::size_t d);
VPolytope cyclic(const CyclicSpec& spec);
VPolytope simplex(std::size_t d);
VPolytope cross_polytope(std::size_t d);
VPolytope tetrahedron();
VPolytope cube3();
VPolytope octahedron();
/// Icosahedron with the golden ratio replaced by 987/610; its face lattice is
/// checked against the regular icosahedron at construction.
VPolytope icosahedron_rational();

/// Gale's evenness condition for a d-subset S of {0, ..., n-1} (0-based).
/// Throws InputError when |S| != d or an index is out of range.
bool gale_facet_check(const std::vector<int>& subset, const CyclicSpec& spec);

/// Exact 1-skeleton of conv(vertices): {i, j} is an edge iff some c has
/// c.v_i = c.v_j >= c.v_k + 1 for every other k. Throws InputError if a
/// vertex is not extreme.
std::vector<Edge> compute_edges(const std::vector<RVector>& vertices);

/// True iff vertices[i] is not in the convex hull of the others.
bool is_extreme(const std::vector<RVector>& vertices, std::size_t i);

/// Facets found by testing every d-subset for a strictly supporting
/// hyperplane. Only meaningful for simplicial polytopes in general position;
/// used to cross-check Gale evenness.
std::vector<Facet> supporting_simplex_facets(const std::vector<RVector>& vertices, std::size_t dim);

/// Facets of a 3-polytope by exact gift wrapping. Each facet is a cyclically
/// ordered vertex list, counter-clockwise seen from outside. Throws
/// InputError on planar or lower-dimensional input.
std::vector<Facet> facets_3d(const std::vector<RVector>& vertices);

/// Builds a 3-polytope from vertices via gift wrapping (edges from facets).
VPolytope polytope_3d(std::string name, std::vector<RVector> vertices);

/// Outward normal (primitive integer) and offset of a facet of a 3-polytope.
std::pair<RVector, Rational> facet_plane(const VPolytope& p, const Facet& f);

/// All-facets stacking: a pyramid erected over every facet. 3-polytopes only.
VPolytope stack_all_facets(const VPolytope& p);

}  // namespace polyslice
