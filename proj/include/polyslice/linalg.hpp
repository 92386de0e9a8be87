#pragma once

#include <cstddef>
#include <vector>

#include "polyslice/rational.hpp"

namespace polyslice {

/// The affine hyperplane {x : u.x = t}.
///
/// Directions are unnormalized: only the signs of u.x - t matter anywhere in
/// the library. Construct through `canonical` to get the deduplicating form
/// (u integer, coprime, first nonzero coordinate positive).
struct Hyperplane {
  RVector u;
  Rational t;

  static Hyperplane canonical(const RVector& u, const Rational& t);

  std::size_t dim() const { return u.dim(); }
  /// Sign of u.x - t.
  int side(const RVector& x) const;

  bool operator==(const Hyperplane& o) const { return u == o.u && t == o.t; }
  bool operator<(const Hyperplane& o) const {
    if (u != o.u) return u < o.u;
    return t < o.t;
  }
};

/// Rank of the row span, by fraction-free (Bareiss) elimination.
/// Throws InputError when rows disagree in dimension.
std::size_t rank(const std::vector<RVector>& rows);

/// Determinant of a square matrix given by rows.
Rational determinant(const std::vector<RVector>& rows);

/// The unique hyperplane through `points` (d affinely independent points in
/// dimension d), in canonical form. Throws DegenerateError otherwise.
Hyperplane hyperplane_through(const std::vector<RVector>& points, std::size_t dim);

/// Basis of the right nullspace of the matrix given by rows.
std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t cols);

}  // namespace polyslice
