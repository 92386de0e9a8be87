// Closed forms for vertex counts of slices, and the reference table of
// hypercube slice sequences these are checked against.

#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "polyslice/rational.hpp"

namespace polyslice {

using CountSet = std::set<long>;

/// {1, ..., n}.
CountSet interval(long n);

/// Realized slice counts of the cyclic polytope C_d(n). For d = 3 this is
/// {1, ..., 2(n-2)}; for d > 3 it is {a*b + i : a + b = n - i, 0 <= a, b <= n-1,
/// 0 <= i <= d}. Throws InputError unless 3 <= d < n.
CountSet cyclic_vss(long d, long n);

/// Largest slice count over all d-polytopes with n vertices: 2(n-2) for
/// d = 3, floor(n/2) * ceil(n/2) for d > 3.
long nu_max(long d, long n);

/// [4d-10] minus ({2^i : i < d} u {d, 2d-2, 3d-5, 3d-4}). Requires d >= 4.
CountSet hypercube_first_gaps(long d);

/// (d/2) C(d, d/2) - 1 for even d > 4.
long hypercube_penultimate_gap(long d);

/// ceil(d/2) C(d, floor(d/2)), the largest slice count of Q_d.
long hypercube_width(long d);

/// Possible counts when the lighter open side of the hyperplane holds k
/// vertices of Q_d (d >= 4, 0 <= k <= 4).
CountSet small_cut_values(long d, long k);

/// Side of gamma(t) relative to the hyperplane through gamma(p_1), ...,
/// gamma(p_d) (params sorted increasingly): +1 when t lies in an odd-indexed
/// interval I_1 = (-inf, p_1), I_3, ..., -1 in an even-indexed one, 0 when t
/// is one of the p_i. "+1" is the side containing gamma(t) for t < p_1.
int gale_sign_pattern(const std::vector<Rational>& params, const Rational& t);

struct GoldenRow {
  long nu;
  CountSet gaps;
};

/// Hypercube slice sequences for 2 <= d <= 7: VSS(Q_d) = [nu] \ gaps.
///
///   d=2: [2]        d=3: [6]        d=4: [12] \ {3,5}
///   d=5: [30] \ {3,6,7,9}
///   d=6: [60] \ {3,5,7,9,11,12,59}
///   d=7: [140] \ {3,5,6,9,10,11,13,14,15,18}
GoldenRow golden_table(long d);

long binomial(long n, long k);

}  // namespace polyslice
