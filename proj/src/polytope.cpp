#include "polyslice/polytope.hpp"

#include <algorithm>
#include <set>

#include "polyslice/errors.hpp"
#include "polyslice/feasibility.hpp"
#include "polyslice/linalg.hpp"

namespace polyslice {

VPolytope::VPolytope(std::string name, std::size_t dim, std::vector<RVector> vertices, std::vector<Edge> edges,
                     std::optional<std::vector<Facet>> facets)
    : name_(std::move(name)), dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (dim_ < 1) throw InputError("polytope dimension must be >= 1");
  const int n = static_cast<int>(vertices_.size());
  for (const auto& v : vertices_) {
    if (v.dim() != dim_) throw InputError("vertex dimension does not match polytope dimension");
  }
  {
    std::vector<RVector> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("polytope vertices must be pairwise distinct");
    }
  }
  std::set<Edge> es;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("edge index out of range");
    if (i == j) throw InputError("self-loop in edge list");
    es.insert({std::min(i, j), std::max(i, j)});
  }
  edges_.assign(es.begin(), es.end());
  adjacency_.assign(vertices_.size(), {});
  for (auto [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
  if (facets_) {
    for (const auto& f : *facets_) {
      for (int i : f) {
        if (i < 0 || i >= n) throw InputError("facet index out of range");
      }
    }
  }
}

bool VPolytope::has_edge(int i, int j) const {
  const auto& a = adjacency_[i];
  return std::binary_search(a.begin(), a.end(), j);
}

VPolytope VPolytope::renamed(std::string name) const {
  VPolytope p = *this;
  p.name_ = std::move(name);
  return p;
}

CyclicSpec CyclicSpec::standard(std::size_t d, std::size_t n) {
  CyclicSpec s{d, n, {}};
  for (std::size_t i = 1; i <= n; ++i) s.params.emplace_back(static_cast<long>(i));
  return s;
}

void CyclicSpec::validate() const {
  if (d < 2) throw InputError("cyclic polytope needs d >= 2");
  if (n <= d) throw InputError("cyclic polytope needs n > d");
  if (params.size() != n) throw InputError("cyclic polytope needs exactly n parameters");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(params[i - 1] < params[i])) throw InputError("cyclic parameters must be strictly increasing");
  }
}

RVector moment_point(const Rational& t, std::size_t d) {
  RVector p(d);
  Rational power = t;
  for (std::size_t i = 0; i < d; ++i) {
    p[i] = power;
    power *= t;
  }
  return p;
}

VPolytope hypercube(std::size_t d) {
  if (d < 1 || d > 16) throw InputError("hypercube dimension must be in [1, 16]");
  const int n = 1 << d;
  std::vector<RVector> verts;
  verts.reserve(n);
  for (int m = 0; m < n; ++m) {
    RVector v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = (m >> k) & 1;
    verts.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  for (int m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < d; ++k) {
      const int w = m ^ (1 << k);
      if (m < w) edges.emplace_back(m, w);
    }
  }
  std::vector<Facet> facets;
  for (std::size_t k = 0; k < d; ++k) {
    for (int bit = 0; bit <= 1; ++bit) {
      Facet f;
      for (int m = 0; m < n; ++m) {
        if (((m >> k) & 1) == bit) f.push_back(m);
      }
      facets.push_back(std::move(f));
    }
  }
  return VPolytope("hypercube" + std::to_string(d), d, std::move(verts), std::move(edges), std::move(facets));
}

bool gale_facet_check(const std::vector<int>& subset, const CyclicSpec& spec) {
  if (subset.size() != spec.d) throw InputError("gale_facet_check: subset must have exactly d elements");
  const int n = static_cast<int>(spec.n);
  std::vector<bool> in(n, false);
  for (int i : subset) {
    if (i < 0 || i >= n) throw InputError("gale_facet_check: index out of range");
    if (in[i]) throw InputError("gale_facet_check: repeated index");
    in[i] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (in[i]) continue;
    int between = 0;
    for (int j = i + 1; j < n; ++j) {
      if (in[j]) {
        ++between;
      } else if (between % 2 != 0) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Calls fn on every k-subset of {0, ..., n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VPolytope cyclic(const CyclicSpec& spec) {
  spec.validate();
  const int n = static_cast<int>(spec.n);
  const int d = static_cast<int>(spec.d);
  std::vector<RVector> verts;
  for (const auto& t : spec.params) verts.push_back(moment_point(t, spec.d));
  std::vector<Facet> facets;
  for_each_subset(n, d, [&](const std::vector<int>& s) {
    if (gale_facet_check(s, spec)) facets.push_back(s);
  });
  std::vector<Edge> edges;
  if (d == 2) {
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
  } else if (d == 3) {
    std::set<Edge> es;
    for (const auto& f : facets) {
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a + 1; b < f.size(); ++b) es.insert({f[a], f[b]});
      }
    }
    edges.assign(es.begin(), es.end());
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
  }
  return VPolytope("cyclic" + std::to_string(d) + "_" + std::to_string(n), spec.d, std::move(verts),
                   std::move(edges), std::move(facets));
}

VPolytope simplex(std::size_t d) {
  if (d < 1) throw InputError("simplex dimension must be >= 1");
  std::vector<RVector> verts;
  verts.emplace_back(d);
  for (std::size_t k = 0; k < d; ++k) {
    RVector v(d);
    v[k] = 1;
    verts.push_back(std::move(v));
  }
  const int n = static_cast<int>(d + 1);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  std::vector<Facet> facets;
  for_each_subset(n, static_cast<int>(d), [&](const std::vector<int>& s) { facets.push_back(s); });
  return VPolytope("simplex" + std::to_string(d), d, std::move(verts), std::move(edges), std::move(facets));
}

VPolytope cross_polytope(std::size_t d) {
  if (d < 1 || d > 16) throw InputError("cross-polytope dimension must be in [1, 16]");
  std::vector<RVector> verts;
  for (std::size_t k = 0; k < d; ++k) {
    RVector plus(d), minus(d);
    plus[k] = 1;
    minus[k] = -1;
    verts.push_back(std::move(plus));
    verts.push_back(std::move(minus));
  }
  const int n = static_cast<int>(2 * d);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i / 2 != j / 2) edges.emplace_back(i, j);
    }
  }
  std::vector<Facet> facets;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Facet f;
    for (std::size_t k = 0; k < d; ++k) f.push_back(static_cast<int>(2 * k + ((mask >> k) & 1)));
    facets.push_back(std::move(f));
  }
  return VPolytope("crosspolytope" + std::to_string(d), d, std::move(verts), std::move(edges),
                   std::move(facets));
}

VPolytope tetrahedron() {
  return polytope_3d("tetrahedron", {RVector::from_ints({1, 1, 1}), RVector::from_ints({1, -1, -1}),
                                     RVector::from_ints({-1, 1, -1}), RVector::from_ints({-1, -1, 1})});
}

VPolytope cube3() { return polytope_3d("cube", hypercube(3).vertices()); }

VPolytope octahedron() { return polytope_3d("octahedron", cross_polytope(3).vertices()); }

VPolytope icosahedron_rational() {
  const Rational phi(987, 610);
  std::vector<RVector> verts;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const Rational a(s1), b = phi * s2;
      verts.push_back(RVector{Rational(0), a, b});
      verts.push_back(RVector{a, b, Rational(0)});
      verts.push_back(RVector{b, Rational(0), a});
    }
  }
  VPolytope p = polytope_3d("icosahedron", std::move(verts));
  bool ok = p.num_vertices() == 12 && p.edges().size() == 30 && p.facets()->size() == 20;
  for (const auto& f : *p.facets()) ok = ok && f.size() == 3;
  for (const auto& nb : p.neighbors()) ok = ok && nb.size() == 5;
  if (!ok) throw Error("rational icosahedron does not have the icosahedral face lattice");
  return p;
}

bool is_extreme(const std::vector<RVector>& vertices, std::size_t i) {
  const std::size_t d = vertices[i].dim();
  LinearSystem sys(d);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k != i) sys.greater_equal(vertices[i] - vertices[k], Rational(1));
  }
  return feasible(sys);
}

std::vector<Edge> compute_edges(const std::vector<RVector>& vertices) {
  const std::size_t n = vertices.size();
  if (n == 0) return {};
  const std::size_t d = vertices[0].dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_extreme(vertices, i)) {
      throw InputError("compute_edges: vertex " + std::to_string(i) + " is not extreme");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      LinearSystem sys(d);
      sys.equal(vertices[i] - vertices[j], Rational(0));
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j) sys.greater_equal(vertices[i] - vertices[k], Rational(1));
      }
      if (feasible(sys)) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return edges;
}

std::vector<Facet> supporting_simplex_facets(const std::vector<RVector>& vertices, std::size_t dim) {
  const int n = static_cast<int>(vertices.size());
  std::vector<Facet> out;
  for_each_subset(n, static_cast<int>(dim), [&](const std::vector<int>& s) {
    std::vector<RVector> diffs;
    for (std::size_t k = 1; k < s.size(); ++k) diffs.push_back(vertices[s[k]] - vertices[s[0]]);
    if (rank(diffs) != dim - 1) return;
    // Unknowns (c, t): c.v = t on S, c.v <= t - 1 elsewhere.
    LinearSystem sys(dim + 1);
    auto row = [&](const RVector& v) {
      RVector r(dim + 1);
      for (std::size_t i = 0; i < dim; ++i) r[i] = v[i];
      r[dim] = -1;
      return r;
    };
    std::vector<bool> in(n, false);
    for (int i : s) {
      in[i] = true;
      sys.equal(row(vertices[i]), Rational(0));
    }
    for (int k = 0; k < n; ++k) {
      if (!in[k]) sys.less_equal(row(vertices[k]), Rational(-1));
    }
    if (feasible(sys)) out.push_back(s);
  });
  return out;
}

}  // namespace polyslice
