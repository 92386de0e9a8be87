// Slices of a V-polytope by affine hyperplanes.
//
// A slice H n P has one vertex for every polytope vertex on H and one for
// every edge whose endpoints lie strictly on opposite sides of H, so
// cv(P, H) = |on| + |crossed|.

#pragma once

#include <vector>

#include "polyslice/linalg.hpp"
#include "polyslice/polytope.hpp"

namespace polyslice {

struct SlicePartition {
  std::vector<int> below;     // u.v < t
  std::vector<int> on;        // u.v = t
  std::vector<int> above;     // u.v > t
  std::vector<Edge> crossed;  // one endpoint below, one above

  int count() const { return static_cast<int>(on.size() + crossed.size()); }
  bool meets() const { return !(below.empty() && on.empty()) && !(above.empty() && on.empty()); }
};

/// Counts of a fixed direction at every threshold. levels holds the distinct
/// values u.v in increasing order; at_level[k] is cv at t = levels[k] and
/// between[k] is cv anywhere strictly between levels[k] and levels[k+1].
struct SweepProfile {
  RVector direction;
  std::vector<Rational> levels;
  std::vector<int> at_level;
  std::vector<int> between;

  /// Offset of between[k]: the midpoint of the two levels.
  Rational midpoint(std::size_t k) const { return (levels[k] + levels[k + 1]) / 2; }
};

/// Throws InputError on dimension mismatch.
SlicePartition classify(const VPolytope& p, const Hyperplane& h);

/// Throws NoIntersectionError when h misses p.
int cv(const VPolytope& p, const Hyperplane& h);

SweepProfile sweep(const VPolytope& p, const RVector& u);

/// A hyperplane with the same normal, no vertex of p on it and at least as
/// many slice vertices as h. When vertices lie strictly on both sides, the
/// offset moves halfway toward the next level on the side holding more
/// vertices (ties go to the positive side); a tangent h moves into p.
/// Throws DegenerateError when p lies inside h and NoIntersectionError when h
/// misses p.
Hyperplane nudge_off_vertices(const VPolytope& p, const Hyperplane& h);

/// The values u.v for every vertex.
std::vector<Rational> vertex_levels(const VPolytope& p, const RVector& u);

}  // namespace polyslice
