#include "polyslice/theory.hpp"

#include <algorithm>

#include "polyslice/errors.hpp"

namespace polyslice {

CountSet interval(long n) {
  CountSet s;
  for (long i = 1; i <= n; ++i) s.insert(i);
  return s;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CountSet cyclic_vss(long d, long n) {
  if (d < 3 || n <= d) throw InputError("cyclic_vss: need 3 <= d < n");
  if (d == 3) return interval(2 * (n - 2));
  CountSet s;
  for (long i = 0; i <= d; ++i) {
    for (long a = 0; a <= n - 1; ++a) {
      const long b = n - i - a;
      if (b < 0 || b > n - 1) continue;
      s.insert(a * b + i);
    }
  }
  return s;
}

long nu_max(long d, long n) {
  if (d < 3 || n <= d) throw InputError("nu_max: need 3 <= d < n");
  if (d == 3) return 2 * (n - 2);
  return (n / 2) * ((n + 1) / 2);
}

CountSet hypercube_first_gaps(long d) {
  if (d < 4) throw InputError("hypercube_first_gaps: need d >= 4");
  CountSet realized{d, 2 * d - 2, 3 * d - 5, 3 * d - 4};
  for (long i = 0; i <= d - 1; ++i) realized.insert(1L << i);
  CountSet gaps;
  for (long m = 1; m <= 4 * d - 10; ++m) {
    if (!realized.count(m)) gaps.insert(m);
  }
  return gaps;
}

long hypercube_penultimate_gap(long d) {
  if (d <= 4 || d % 2 != 0) throw InputError("hypercube_penultimate_gap: need even d > 4");
  return (d / 2) * binomial(d, d / 2) - 1;
}

long hypercube_width(long d) {
  if (d < 1) throw InputError("hypercube_width: need d >= 1");
  return ((d + 1) / 2) * binomial(d, d / 2);
}

CountSet small_cut_values(long d, long k) {
  if (d < 4) throw InputError("small_cut_values: need d >= 4");
  switch (k) {
    case 0: {
      CountSet s;
      for (long r = 0; r <= d - 1; ++r) s.insert(1L << r);
      return s;
    }
    case 1:
      return {d};
    case 2:
      return {2 * d - 2};
    case 3:
      return {3 * d - 5, 3 * d - 4};
    case 4:
      return {4 * d - 9, 4 * d - 8, 4 * d - 7, 4 * d - 6};
    default:
      throw InputError("small_cut_values: need 0 <= k <= 4");
  }
}

int gale_sign_pattern(const std::vector<Rational>& params, const Rational& t) {
  long below = 0;  // number of p_i < t; t lies in interval I_{below + 1}
  for (const auto& p : params) {
    if (p == t) return 0;
    if (p < t) ++below;
  }
  return (below % 2 == 0) ? 1 : -1;
}

GoldenRow golden_table(long d) {
  switch (d) {
    case 2:
      return {2, {}};
    case 3:
      return {6, {}};
    case 4:
      return {12, {3, 5}};
    case 5:
      return {30, {3, 6, 7, 9}};
    case 6:
      return {60, {3, 5, 7, 9, 11, 12, 59}};
    case 7:
      return {140, {3, 5, 6, 9, 10, 11, 13, 14, 15, 18}};
    default:
      throw InputError("golden_table: dimension must be in [2, 7]");
  }
}

}  // namespace polyslice
