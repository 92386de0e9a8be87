// Exact feasibility of mixed strict / weak / equality linear systems.
//
// Solved by Fourier-Motzkin elimination over the rationals. Equalities are
// substituted away first; strict rows a.x < b are rewritten as a.x + s <= b
// with a slack s that must end up positive. Derived rows are pruned by
// Chernikov's history criterion and by coefficient-vector deduplication, and
// the row count is capped.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyslice/rational.hpp"

namespace polyslice {

enum class Relation { Less, LessEqual, Equal };

struct Constraint {
  RVector a;
  Relation rel;
  Rational b;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& rows() const { return rows_; }

  /// a.x < b
  LinearSystem& less(RVector a, Rational b);
  /// a.x <= b
  LinearSystem& less_equal(RVector a, Rational b);
  /// a.x > b
  LinearSystem& greater(const RVector& a, const Rational& b);
  /// a.x >= b
  LinearSystem& greater_equal(const RVector& a, const Rational& b);
  /// a.x = b
  LinearSystem& equal(RVector a, Rational b);

  /// True when x satisfies every row exactly.
  bool satisfied_by(const RVector& x) const;

 private:
  LinearSystem& add(RVector a, Relation rel, Rational b);

  std::size_t dim_;
  std::vector<Constraint> rows_;
};

struct FeasibilityOptions {
  /// Upper bound on live rows during elimination; exceeding it throws CapExceeded.
  std::size_t max_rows = 200000;
};

/// A rational point satisfying every row, or nullopt when none exists.
std::optional<RVector> solve(const LinearSystem& sys, const FeasibilityOptions& opts = {});

inline bool feasible(const LinearSystem& sys, const FeasibilityOptions& opts = {}) {
  return solve(sys, opts).has_value();
}

}  // namespace polyslice
