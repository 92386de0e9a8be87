// Exact gift wrapping in dimension 3 and the all-facets stacking operator.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polyslice/errors.hpp"
#include "polyslice/linalg.hpp"
#include "polyslice/polytope.hpp"

namespace polyslice {

namespace {

RVector cross(const RVector& a, const RVector& b) {
  return RVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Sign of det[b - a, c - a, p - a]: positive when p is on the side of the
// plane (a, b, c) that its right-handed normal points to.
int orient(const RVector& a, const RVector& b, const RVector& c, const RVector& p) {
  return sgn(dot(cross(b - a, c - a), p - a));
}

bool collinear(const RVector& a, const RVector& b, const RVector& c) { return cross(b - a, c - a).is_zero(); }

struct HullFace {
  RVector normal;  // outward
  Rational offset;
  Facet cycle;  // counter-clockwise seen from outside
};

// Orders the points of a facet counter-clockwise about the outward normal and
// checks that they form a strictly convex polygon.
Facet order_facet(const std::vector<RVector>& pts, std::vector<int> ids, const RVector& normal) {
  RVector centroid(3);
  for (int i : ids) centroid = centroid + pts[i];
  centroid = centroid * Rational(1, static_cast<long>(ids.size()));
  const RVector ref = pts[ids[0]] - centroid;
  auto half = [&](const RVector& w) {
    const int c = sgn(dot(cross(ref, w), normal));
    if (c > 0) return 0;
    if (c == 0 && sgn(dot(ref, w)) > 0) return 0;
    return 1;
  };
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    const RVector wx = pts[x] - centroid, wy = pts[y] - centroid;
    const int hx = half(wx), hy = half(wy);
    if (hx != hy) return hx < hy;
    return sgn(dot(cross(wx, wy), normal)) > 0;
  });
  const std::size_t m = ids.size();
  for (std::size_t k = 0; k < m; ++k) {
    const RVector& a = pts[ids[k]];
    const RVector& b = pts[ids[(k + 1) % m]];
    const RVector& c = pts[ids[(k + 2) % m]];
    if (sgn(dot(cross(b - a, c - b), normal)) <= 0) {
      throw InputError("facets_3d: a point on a facet is not a vertex of that facet");
    }
  }
  return ids;
}

HullFace make_face(const std::vector<RVector>& pts, int a, int b, int c) {
  RVector normal = primitive_integer(cross(pts[b] - pts[a], pts[c] - pts[a]));
  Rational offset = dot(normal, pts[a]);
  std::vector<int> on;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const int s = sgn(dot(normal, pts[i]) - offset);
    if (s > 0) throw Error("facets_3d: wrapped plane is not supporting");
    if (s == 0) on.push_back(i);
  }
  Facet cycle = order_facet(pts, std::move(on), normal);
  return HullFace{std::move(normal), std::move(offset), std::move(cycle)};
}

std::vector<HullFace> gift_wrap(const std::vector<RVector>& pts) {
  const int n = static_cast<int>(pts.size());
  for (const auto& p : pts) {
    if (p.dim() != 3) throw InputError("facets_3d: points must be 3-dimensional");
  }
  if (n < 4) throw InputError("facets_3d: need at least 4 points");
  {
    std::vector<RVector> diffs;
    for (int i = 1; i < n; ++i) diffs.push_back(pts[i] - pts[0]);
    if (rank(diffs) != 3) throw InputError("facets_3d: points are coplanar");
  }

  // Initial facet: first triple whose plane supports the point set.
  std::optional<HullFace> first;
  for (int a = 0; a < n && !first; ++a) {
    for (int b = a + 1; b < n && !first; ++b) {
      for (int c = b + 1; c < n && !first; ++c) {
        if (collinear(pts[a], pts[b], pts[c])) continue;
        int pos = 0, neg = 0;
        for (int p = 0; p < n && !(pos && neg); ++p) {
          const int s = orient(pts[a], pts[b], pts[c], pts[p]);
          pos += (s > 0);
          neg += (s < 0);
        }
        if (pos && neg) continue;
        first = pos ? make_face(pts, a, c, b) : make_face(pts, a, b, c);
      }
    }
  }

  std::vector<HullFace> faces;
  std::set<std::vector<int>> known;
  std::vector<std::size_t> queue;
  auto add = [&](HullFace f) {
    std::vector<int> key = f.cycle;
    std::sort(key.begin(), key.end());
    if (!known.insert(key).second) return;
    faces.push_back(std::move(f));
    queue.push_back(faces.size() - 1);
  };
  add(std::move(*first));
  while (!queue.empty()) {
    const std::size_t fi = queue.back();
    queue.pop_back();
    const Facet cycle = faces[fi].cycle;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % cycle.size()];
      // The neighbour across a->b contains b->a; wrap around the line ab.
      int c = -1;
      for (int p = 0; p < n; ++p) {
        if (p != a && p != b && !collinear(pts[a], pts[b], pts[p])) {
          c = p;
          break;
        }
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (int p = 0; p < n; ++p) {
          if (p == a || p == b || p == c) continue;
          if (orient(pts[b], pts[a], pts[c], pts[p]) > 0) {
            c = p;
            changed = true;
          }
        }
      }
      add(make_face(pts, b, a, c));
    }
  }

  // Every point must be a hull vertex, and Euler's relation must hold.
  std::set<int> used;
  std::set<Edge> edges;
  for (const auto& f : faces) {
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      const int a = f.cycle[k], b = f.cycle[(k + 1) % f.cycle.size()];
      used.insert(a);
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  if (static_cast<int>(used.size()) != n) throw InputError("facets_3d: some input point is not extreme");
  const long euler = static_cast<long>(n) - static_cast<long>(edges.size()) + static_cast<long>(faces.size());
  if (euler != 2) throw Error("facets_3d: Euler relation violated");
  return faces;
}

std::vector<Edge> edges_of(const std::vector<Facet>& facets) {
  std::set<Edge> edges;
  for (const auto& f : facets) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int a = f[k], b = f[(k + 1) % f.size()];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace

std::vector<Facet> facets_3d(const std::vector<RVector>& vertices) {
  std::vector<Facet> out;
  for (auto& f : gift_wrap(vertices)) out.push_back(std::move(f.cycle));
  std::sort(out.begin(), out.end());
  return out;
}

VPolytope polytope_3d(std::string name, std::vector<RVector> vertices) {
  std::vector<Facet> facets = facets_3d(vertices);
  std::vector<Edge> edges = edges_of(facets);
  return VPolytope(std::move(name), 3, std::move(vertices), std::move(edges), std::move(facets));
}

std::pair<RVector, Rational> facet_plane(const VPolytope& p, const Facet& f) {
  if (p.dim() != 3) throw InputError("facet_plane: 3-polytopes only");
  const auto& pts = p.vertices();
  for (std::size_t k = 2; k < f.size(); ++k) {
    RVector normal = cross(pts[f[1]] - pts[f[0]], pts[f[k]] - pts[f[0]]);
    if (normal.is_zero()) continue;
    normal = primitive_integer(normal);
    Rational offset = dot(normal, pts[f[0]]);
    // Orient outward: every vertex must satisfy normal.x <= offset.
    for (const auto& v : pts) {
      if (dot(normal, v) > offset) {
        normal = normal * Rational(-1);
        offset = -offset;
        break;
      }
    }
    return {normal, offset};
  }
  throw DegenerateError("facet_plane: facet vertices are collinear");
}

VPolytope stack_all_facets(const VPolytope& p) {
  if (p.dim() != 3) throw InputError("stack_all_facets: only 3-polytopes are supported");
  if (!p.facets()) throw InputError("stack_all_facets: polytope has no facets");
  const auto& facets = *p.facets();
  const std::size_t nf = facets.size();
  const std::size_t nv = p.num_vertices();
  constexpr int kMaxExponent = 40;

  std::vector<std::pair<RVector, Rational>> planes;
  std::vector<RVector> centroids;
  for (const auto& f : facets) {
    planes.push_back(facet_plane(p, f));
    RVector c(3);
    for (int i : f) c = c + p.vertex(i);
    centroids.push_back(c * Rational(1, static_cast<long>(f.size())));
  }

  // Largest dyadic step that keeps each apex beneath all other facets of p.
  std::vector<int> exponent(nf, -1);
  for (std::size_t fi = 0; fi < nf; ++fi) {
    for (int k = 0; k <= kMaxExponent && exponent[fi] < 0; ++k) {
      const Rational eps(Integer(1), Integer(1) << k);
      const RVector apex = centroids[fi] + planes[fi].first * eps;
      bool ok = true;
      for (std::size_t g = 0; g < nf && ok; ++g) {
        if (g != fi) ok = dot(planes[g].first, apex) < planes[g].second;
      }
      if (ok) exponent[fi] = k;
    }
    if (exponent[fi] < 0) {
      throw GeometryError("stack_all_facets: no valid apex for facet " + std::to_string(fi));
    }
  }

  // Apexes placed together must also stay beneath each other's pyramids;
  // shrink all steps uniformly until the hull has the stacked face structure.
  const int max_exp = *std::max_element(exponent.begin(), exponent.end());
  for (int shift = 0; max_exp + shift <= kMaxExponent; ++shift) {
    std::vector<RVector> verts = p.vertices();
    for (std::size_t fi = 0; fi < nf; ++fi) {
      const Rational eps(Integer(1), Integer(1) << (exponent[fi] + shift));
      verts.push_back(centroids[fi] + planes[fi].first * eps);
    }
    std::vector<Facet> hull;
    try {
      hull = facets_3d(verts);
    } catch (const InputError&) {
      continue;
    }
    std::size_t expected = 0;
    for (const auto& f : facets) expected += f.size();
    if (hull.size() != expected) continue;
    bool ok = true;
    for (const auto& h : hull) {
      if (h.size() != 3) {
        ok = false;
        break;
      }
      int apex = -1;
      for (int i : h) {
        if (static_cast<std::size_t>(i) >= nv) apex = (apex < 0) ? i : -2;
      }
      if (apex < 0) {
        ok = false;
        break;
      }
      const Facet& base = facets[apex - nv];
      for (int i : h) {
        if (i != apex && std::find(base.begin(), base.end(), i) == base.end()) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Edge> edges = edges_of(hull);
    return VPolytope("sigma(" + p.name() + ")", 3, std::move(verts), std::move(edges), std::move(hull));
  }
  throw GeometryError("stack_all_facets: could not place apexes without merging faces");
}

}  // namespace polyslice
