#include "polyslice/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <thread>

#include "polyslice/errors.hpp"
#include "polyslice/feasibility.hpp"
#include "polyslice/graph.hpp"
#include "polyslice/io.hpp"
#include "polyslice/slicer.hpp"

namespace polyslice {

bool VSSReport::operator==(const VSSReport& o) const {
  return polytope == o.polytope && polytope_hash == o.polytope_hash && realized == o.realized && nu == o.nu &&
         gaps == o.gaps && witnesses == o.witnesses && generator == o.generator && exhaustive == o.exhaustive;
}

std::string DirectionGenerator::describe() const {
  switch (kind) {
    case GeneratorKind::SubsetNormals:
      return "subset-normals";
    case GeneratorKind::PositiveGrid:
      return "positive-grid(B=" + std::to_string(bound) + ")";
    case GeneratorKind::FacetNormals:
      return "facet-normals";
    case GeneratorKind::ExplicitList:
      return "explicit-list(" + std::to_string(explicit_directions.size()) + ")";
  }
  return "unknown";
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

RVector canonical_direction(const RVector& u) { return Hyperplane::canonical(u, 0).u; }

// Normal of the affine hull of `points` when that hull is a hyperplane.
std::optional<RVector> hull_normal(const std::vector<RVector>& points, std::size_t d) {
  std::vector<RVector> rows;
  for (const auto& p : points) {
    RVector r(d + 1);
    for (std::size_t k = 0; k < d; ++k) r[k] = p[k];
    r[d] = -1;
    rows.push_back(std::move(r));
  }
  const auto ns = nullspace(rows, d + 1);
  if (ns.size() != 1) return std::nullopt;
  RVector u(d);
  for (std::size_t k = 0; k < d; ++k) u[k] = ns[0][k];
  if (u.is_zero()) return std::nullopt;
  return canonical_direction(u);
}

// Primitive normal of facet f pointing away from the rest of p.
std::optional<RVector> outward_normal(const VPolytope& p, const Facet& f) {
  std::vector<RVector> pts;
  for (int i : f) pts.push_back(p.vertex(i));
  auto u = hull_normal(pts, p.dim());
  if (!u) return std::nullopt;
  const Rational level = dot(*u, pts.front());
  for (const auto& v : p.vertices()) {
    const Rational x = dot(*u, v);
    if (x > level) return *u * Rational(-1);
    if (x < level) return u;
  }
  return std::nullopt;
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

void grid_rec(std::size_t d, long bound, std::vector<long>& cur, long lo, std::vector<RVector>& out) {
  if (cur.size() == d) {
    long g = 0;
    for (long x : cur) g = std::gcd(g, x);
    if (g == 1) out.push_back(RVector::from_ints(cur));
    return;
  }
  for (long x = lo; x <= bound; ++x) {
    cur.push_back(x);
    grid_rec(d, bound, cur, x, out);
    cur.pop_back();
  }
}

struct Hit {
  std::size_t order;  // position in the merge order; smaller wins
  Witness witness;
};

using HitMap = std::map<long, Hit>;

void record(HitMap& hits, long count, std::size_t order, const RVector& dir, const Rational& offset) {
  auto it = hits.find(count);
  if (it == hits.end()) {
    hits.emplace(count, Hit{order, Witness{dir, offset}});
  } else if (order < it->second.order) {
    it->second = Hit{order, Witness{dir, offset}};
  }
}

void merge_hits(HitMap& into, const HitMap& from) {
  for (const auto& [count, hit] : from) record(into, count, hit.order, hit.witness.direction, hit.witness.offset);
}

// Sweeps q along dirs; counts are multiplied by `scale` and witnesses carry
// the direction with `pad` leading zeros. Orders start at `base`.
HitMap sweep_hits(const VPolytope& q, const std::vector<RVector>& dirs, long scale, std::size_t pad,
                  std::size_t base, unsigned jobs) {
  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (dirs.size() + kBlock - 1) / kBlock;
  std::vector<HitMap> partial(blocks);
  parallel_for(blocks, jobs, [&](std::size_t b) {
    HitMap& hits = partial[b];
    const std::size_t end = std::min(dirs.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      const SweepProfile prof = sweep(q, dirs[i]);
      RVector wdir = dirs[i];
      if (pad) {
        std::vector<Rational> c(pad, Rational(0));
        c.insert(c.end(), dirs[i].begin(), dirs[i].end());
        wdir = RVector(std::move(c));
      }
      for (std::size_t k = 0; k < prof.levels.size(); ++k) {
        record(hits, scale * prof.at_level[k], base + i, wdir, prof.levels[k]);
        if (k + 1 < prof.levels.size()) record(hits, scale * prof.between[k], base + i, wdir, prof.midpoint(k));
      }
    }
  });
  HitMap all;
  for (const auto& h : partial) merge_hits(all, h);
  return all;
}

VSSReport finish(const VPolytope& p, const HitMap& hits, std::string generator, bool exhaustive) {
  VSSReport r;
  r.polytope = p.name();
  r.polytope_hash = content_hash(p);
  for (const auto& [count, hit] : hits) {
    r.realized.insert(count);
    r.witnesses.emplace(count, hit.witness);
  }
  r.nu = r.realized.empty() ? 0 : *r.realized.rbegin();
  r.gaps = gaps(r);
  r.generator = std::move(generator);
  r.exhaustive = exhaustive;
  return r;
}

// Hypercube grid sweep with zero-entry reduction: a direction with i leading
// zeros slices Q_d like the remaining entries slice Q_{d-i}, times 2^i.
HitMap hypercube_grid_hits(std::size_t d, long bound, unsigned jobs) {
  HitMap all;
  std::size_t base = 0;
  for (std::size_t k = d; k >= 1; --k) {
    const auto dirs = positive_grid_directions(k, bound);
    const VPolytope qk = hypercube(k);
    merge_hits(all, sweep_hits(qk, dirs, 1L << (d - k), d - k, base, jobs));
    base += dirs.size();
  }
  return all;
}

CountSet keys(const HitMap& h) {
  CountSet s;
  for (const auto& kv : h) s.insert(kv.first);
  return s;
}

}  // namespace

constexpr std::size_t kPairSumCap = 512;

DirectionSet subset_normal_directions(const VPolytope& p, std::size_t budget) {
  const std::size_t d = p.dim();
  const int n = static_cast<int>(p.num_vertices());
  std::set<RVector> found;
  DirectionSet out;
  if (static_cast<std::size_t>(n) >= d) {
    std::vector<int> c(d);
    std::iota(c.begin(), c.end(), 0);
    std::size_t tried = 0;
    std::vector<RVector> pts(d);
    do {
      if (tried == budget) {
        out.truncated = true;
        break;
      }
      ++tried;
      for (std::size_t k = 0; k < d; ++k) pts[k] = p.vertex(c[k]);
      if (auto u = hull_normal(pts, d)) found.insert(*u);
    } while (next_combination(c, n));
  }
  if (p.facets()) {
    const auto& fs = *p.facets();
    std::vector<std::optional<RVector>> normals;
    std::vector<std::vector<int>> sorted;
    for (const auto& f : fs) {
      sorted.push_back(sorted_copy(f));
      normals.push_back(outward_normal(p, f));
      if (normals.back()) found.insert(canonical_direction(*normals.back()));
    }
    // The sum of the outward normals of two facets meeting in a ridge is
    // maximized exactly on that ridge, so the tangent slice there is the ridge.
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        if (!normals[a] || !normals[b]) continue;
        std::vector<int> common;
        std::set_intersection(sorted[a].begin(), sorted[a].end(), sorted[b].begin(), sorted[b].end(),
                              std::back_inserter(common));
        if (common.size() + 1 < d) continue;
        std::vector<RVector> rows;
        for (int i : common) {
          RVector r(d + 1);
          for (std::size_t k = 0; k < d; ++k) r[k] = p.vertex(i)[k];
          r[d] = 1;
          rows.push_back(std::move(r));
        }
        if (rank(rows) + 1 != d) continue;
        found.insert(canonical_direction(*normals[a] + *normals[b]));
      }
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    RVector e(d);
    e[k] = 1;
    found.insert(e);
  }
  // Sums and differences of two normals reach directions strictly inside
  // the cones between vertex-spanned hyperplanes, e.g. the pentagonal
  // sections of Q_3.
  if (found.size() <= kPairSumCap) {
    const std::vector<RVector> base(found.begin(), found.end());
    for (std::size_t a = 0; a < base.size(); ++a) {
      for (std::size_t b = a + 1; b < base.size(); ++b) {
        found.insert(canonical_direction(base[a] + base[b]));
        found.insert(canonical_direction(base[a] - base[b]));
      }
    }
  }
  out.directions.assign(found.begin(), found.end());
  return out;
}

std::vector<RVector> positive_grid_directions(std::size_t d, long bound) {
  if (bound < 1) throw InputError("grid bound must be >= 1");
  std::vector<RVector> out;
  std::vector<long> cur;
  grid_rec(d, bound, cur, 1, out);
  return out;
}

bool is_unit_hypercube(const VPolytope& p) {
  const std::size_t d = p.dim();
  if (d >= 31 || p.num_vertices() != (std::size_t{1} << d)) return false;
  std::vector<char> seen(p.num_vertices(), 0);
  for (const auto& v : p.vertices()) {
    std::size_t mask = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (v[k] == 1) {
        mask |= std::size_t{1} << k;
      } else if (v[k] != 0) {
        return false;
      }
    }
    if (seen[mask]) return false;
    seen[mask] = 1;
  }
  return true;
}

VSSReport sweep_directions(const VPolytope& p, const std::vector<RVector>& dirs, const std::string& generator,
                           unsigned jobs) {
  return finish(p, sweep_hits(p, dirs, 1, 0, 0, jobs), generator, false);
}

VSSReport vss_by_sweep(const VPolytope& p, const DirectionGenerator& gen, const SweepOptions& opts) {
  switch (gen.kind) {
    case GeneratorKind::SubsetNormals: {
      const DirectionSet ds = subset_normal_directions(p, gen.budget);
      return sweep_directions(p, ds.directions, ds.truncated ? "subset-normals(truncated)" : "subset-normals",
                              opts.jobs);
    }
    case GeneratorKind::FacetNormals: {
      if (!p.facets()) throw InputError("facet-normals generator needs a polytope with facets");
      std::set<RVector> dirs;
      for (const auto& f : *p.facets()) {
        std::vector<RVector> pts;
        for (int i : f) pts.push_back(p.vertex(i));
        if (auto u = hull_normal(pts, p.dim())) dirs.insert(*u);
      }
      return sweep_directions(p, {dirs.begin(), dirs.end()}, gen.describe(), opts.jobs);
    }
    case GeneratorKind::ExplicitList: {
      std::vector<RVector> dirs;
      for (const auto& u : gen.explicit_directions) {
        if (u.dim() != p.dim() || u.is_zero()) throw InputError("explicit direction has wrong dimension or is zero");
        dirs.push_back(u);
      }
      return sweep_directions(p, dirs, gen.describe(), opts.jobs);
    }
    case GeneratorKind::PositiveGrid:
      break;
  }
  const bool cube = is_unit_hypercube(p);
  auto hits_for = [&](long b) {
    if (cube) return hypercube_grid_hits(p.dim(), b, opts.jobs);
    return sweep_hits(p, positive_grid_directions(p.dim(), b), 1, 0, 0, opts.jobs);
  };
  const std::string reduction = cube ? ",zero-entry-reduction" : "";
  if (gen.bound > 0) {
    return finish(p, hits_for(gen.bound), "positive-grid(B=" + std::to_string(gen.bound) + reduction + ")", false);
  }
  HitMap prev = hits_for(opts.min_bound);
  for (long b = opts.min_bound; b < opts.max_bound; ++b) {
    HitMap next = hits_for(b + 1);
    if (keys(next) == keys(prev)) {
      return finish(p, prev, "positive-grid(B=" + std::to_string(b) + reduction + ",stabilized)", false);
    }
    prev = std::move(next);
  }
  throw CapExceeded("positive grid did not stabilize up to B=" + std::to_string(opts.max_bound));
}

namespace {

struct OracleState {
  const VPolytope* p;
  std::vector<RVector> rows;  // (v_i, -1): sign of rows[i].x is the side of v_i
  std::vector<int> signs;
  std::set<SignCensus> census;
  HitMap hits;
  std::size_t leaves = 0;
  std::size_t order = 0;
};

int side_of(const RVector& row, const RVector& x) { return sign(dot(row, x)); }

LinearSystem with_sign(LinearSystem sys, const RVector& row, int s) {
  if (s > 0) {
    sys.greater(row, 0);
  } else if (s < 0) {
    sys.less(row, 0);
  } else {
    sys.equal(row, 0);
  }
  return sys;
}

void leaf(OracleState& st, const RVector& x) {
  const auto& sg = st.signs;
  const bool all_same = std::all_of(sg.begin(), sg.end(), [&](int s) { return s == sg.front(); });
  if (all_same) return;
  int below = 0, on = 0, above = 0;
  for (int s : sg) (s < 0 ? below : s == 0 ? on : above)++;
  int count = on;
  for (auto [i, j] : st.p->edges()) {
    if (sg[i] * sg[j] < 0) ++count;
  }
  st.census.emplace(below, on, above, count);
  st.census.emplace(above, on, below, count);
  ++st.leaves;
  const std::size_t d = st.p->dim();
  RVector a(d);
  for (std::size_t k = 0; k < d; ++k) a[k] = x[k];
  const Hyperplane h = Hyperplane::canonical(a, x[d]);
  record(st.hits, count, st.order++, h.u, h.t);
}

bool prefix_has_nonzero(const std::vector<int>& signs) {
  return std::any_of(signs.begin(), signs.end(), [](int s) { return s != 0; });
}

// Extends st.signs (realized by x within sys) by the next vertex.
void extend(OracleState& st, const LinearSystem& sys, const RVector& x) {
  const std::size_t k = st.signs.size();
  if (k == st.rows.size()) {
    leaf(st, x);
    return;
  }
  const RVector& row = st.rows[k];
  const bool free_sign = prefix_has_nonzero(st.signs);
  RVector wx = x;
  int ws = side_of(row, wx);
  if (!free_sign && ws < 0) {
    wx = wx * Rational(-1);
    ws = 1;
  }
  for (int s : {1, 0, -1}) {
    if (s < 0 && !free_sign) continue;
    LinearSystem child = with_sign(sys, row, s);
    st.signs.push_back(s);
    if (s == ws) {
      extend(st, child, wx);
    } else if (auto y = solve(child)) {
      extend(st, child, *y);
    }
    st.signs.pop_back();
  }
}

struct Prefix {
  std::vector<int> signs;
  LinearSystem sys;
  RVector x;
};

// All realizable sign prefixes of the given length, in DFS order.
void prefixes(const std::vector<RVector>& rows, std::size_t depth, Prefix cur, std::vector<Prefix>& out) {
  const std::size_t k = cur.signs.size();
  if (k == depth) {
    out.push_back(std::move(cur));
    return;
  }
  const bool free_sign = prefix_has_nonzero(cur.signs);
  for (int s : {1, 0, -1}) {
    if (s < 0 && !free_sign) continue;
    Prefix next{cur.signs, with_sign(cur.sys, rows[k], s), cur.x};
    next.signs.push_back(s);
    RVector wx = cur.x;
    if (!free_sign && side_of(rows[k], wx) < 0) wx = wx * Rational(-1);
    if (side_of(rows[k], wx) == s) {
      next.x = wx;
    } else if (auto y = solve(next.sys)) {
      next.x = *y;
    } else {
      continue;
    }
    prefixes(rows, depth, std::move(next), out);
  }
}

}  // namespace

OracleResult partition_oracle(const VPolytope& p, const OracleOptions& opts) {
  const std::size_t n = p.num_vertices(), d = p.dim();
  if (n > opts.max_vertices) {
    throw CapExceeded("partition oracle: " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(opts.max_vertices));
  }
  if (d > opts.max_dim) {
    throw CapExceeded("partition oracle: dimension " + std::to_string(d) + " exceeds the cap of " +
                      std::to_string(opts.max_dim));
  }
  std::vector<RVector> rows;
  for (const auto& v : p.vertices()) {
    RVector r(d + 1);
    for (std::size_t k = 0; k < d; ++k) r[k] = v[k];
    r[d] = -1;
    rows.push_back(std::move(r));
  }
  std::vector<Prefix> starts;
  prefixes(rows, std::min<std::size_t>(2, n), Prefix{{}, LinearSystem(d + 1), RVector(d + 1)}, starts);
  std::vector<OracleState> states(starts.size());
  parallel_for(starts.size(), opts.jobs, [&](std::size_t i) {
    OracleState& st = states[i];
    st.p = &p;
    st.rows = rows;
    st.signs = starts[i].signs;
    extend(st, starts[i].sys, starts[i].x);
  });
  OracleResult res;
  HitMap hits;
  std::size_t offset = 0;
  for (auto& st : states) {
    res.census.insert(st.census.begin(), st.census.end());
    res.sign_vectors += 2 * st.leaves;
    for (auto& [count, hit] : st.hits) record(hits, count, offset + hit.order, hit.witness.direction, hit.witness.offset);
    offset += st.order;
  }
  res.report = finish(p, hits, "partition-oracle", true);
  return res;
}

GapCertificate gap_certificate(const VPolytope& p, long r, long k) {
  if (p.dim() != 3) throw InputError("gap_certificate: face audit is implemented for 3-polytopes only");
  if (!p.facets()) throw InputError("gap_certificate: polytope carries no facets");
  GapCertificate cert;
  cert.r = r;
  cert.k = k;
  std::set<std::size_t> sizes{1, 2};
  for (const auto& f : *p.facets()) sizes.insert(f.size());
  cert.face_sizes.assign(sizes.begin(), sizes.end());
  cert.connectivity = vertex_connectivity(p.neighbors());
  if (k < static_cast<long>(p.dim())) {
    cert.reason = "k = " + std::to_string(k) + " is below the dimension";
  } else if (r >= k) {
    cert.reason = "r = " + std::to_string(r) + " is not below k = " + std::to_string(k);
  } else if (cert.connectivity < k) {
    cert.reason = "skeleton is only " + std::to_string(cert.connectivity) + "-connected";
  } else if (sizes.count(static_cast<std::size_t>(r))) {
    cert.reason = "some face has exactly " + std::to_string(r) + " vertices";
  } else {
    cert.certified = true;
  }
  return cert;
}

CountSet gaps(const VSSReport& report) {
  CountSet out;
  if (report.realized.empty()) return out;
  const long top = *report.realized.rbegin();
  for (long m = 1; m <= top; ++m) {
    if (!report.realized.count(m)) out.insert(m);
  }
  return out;
}

std::vector<long> failed_witnesses(const VPolytope& p, const VSSReport& report) {
  std::vector<long> bad;
  for (long c : report.realized) {
    auto it = report.witnesses.find(c);
    if (it == report.witnesses.end()) {
      bad.push_back(c);
      continue;
    }
    try {
      if (cv(p, Hyperplane{it->second.direction, it->second.offset}) != c) bad.push_back(c);
    } catch (const Error&) {
      bad.push_back(c);
    }
  }
  return bad;
}

}  // namespace polyslice
