#include "polyslice/linalg.hpp"

#include <utility>

#include "polyslice/errors.hpp"

namespace polyslice {

Hyperplane Hyperplane::canonical(const RVector& u, const Rational& t) {
  if (u.is_zero()) throw InputError("hyperplane normal must be nonzero");
  RVector p = primitive_integer(u);
  // p = u * (p_k / u_k) for any nonzero coordinate k.
  std::size_t k = 0;
  while (sgn(u[k]) == 0) ++k;
  Rational scale = p[k] / u[k];
  Rational off = t * scale;
  if (sgn(p[k]) < 0) {
    p = p * Rational(-1);
    off = -off;
  }
  return Hyperplane{std::move(p), std::move(off)};
}

int Hyperplane::side(const RVector& x) const { return sgn(dot(u, x) - t); }

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_integer_rows(const std::vector<RVector>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    RVector p = primitive_integer(r);
    std::vector<Integer> row(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) row[i] = p[i].get_num();
    m.push_back(std::move(row));
  }
  return m;
}

void check_dims(const std::vector<RVector>& rows) {
  for (const auto& r : rows) {
    if (r.dim() != rows.front().dim()) throw InputError("rank: rows differ in dimension");
  }
}

}  // namespace

std::size_t rank(const std::vector<RVector>& rows) {
  if (rows.empty()) return 0;
  check_dims(rows);
  IntMatrix m = to_integer_rows(rows);
  const std::size_t n_rows = m.size();
  const std::size_t n_cols = m.front().size();
  Integer prev_pivot(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t piv = r;
    while (piv < n_rows && m[piv][c] == 0) ++piv;
    if (piv == n_rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev_pivot;
      }
      m[i][c] = 0;
    }
    prev_pivot = m[r][c];
    ++r;
  }
  return r;
}

Rational determinant(const std::vector<RVector>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.dim() != n) throw InputError("determinant: matrix is not square");
  }
  if (n == 0) return Rational(1);
  std::vector<RVector> m = rows;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t cols) {
  std::vector<RVector> m = rows;
  for (const auto& r : m) {
    if (r.dim() != cols) throw InputError("nullspace: row dimension mismatch");
  }
  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Hyperplane hyperplane_through(const std::vector<RVector>& points, std::size_t dim) {
  if (points.size() != dim) {
    throw InputError("hyperplane_through: expected " + std::to_string(dim) + " points");
  }
  std::vector<RVector> rows;
  rows.reserve(dim);
  for (const auto& p : points) {
    if (p.dim() != dim) throw InputError("hyperplane_through: point dimension mismatch");
    RVector row(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) row[i] = p[i];
    row[dim] = -1;
    rows.push_back(std::move(row));
  }
  auto ns = nullspace(rows, dim + 1);
  if (ns.size() != 1) throw DegenerateError("hyperplane_through: points are affinely dependent");
  RVector u(dim);
  for (std::size_t i = 0; i < dim; ++i) u[i] = ns[0][i];
  if (u.is_zero()) throw DegenerateError("hyperplane_through: points are affinely dependent");
  return Hyperplane::canonical(u, ns[0][dim]);
}

}  // namespace polyslice
