// Vertex slice sequences: direction generators, sweep-based reports, and an
// exhaustive sign-vector oracle for small polytopes.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "polyslice/linalg.hpp"
#include "polyslice/polytope.hpp"
#include "polyslice/theory.hpp"

namespace polyslice {

struct Witness {
  RVector direction;
  Rational offset;
  bool operator==(const Witness& o) const { return direction == o.direction && offset == o.offset; }
};

struct VSSReport {
  std::string polytope;       // name
  std::string polytope_hash;  // content_hash of the geometry
  CountSet realized;
  long nu = 0;
  CountSet gaps;
  std::map<long, Witness> witnesses;
  std::string generator;
  bool exhaustive = false;

  bool operator==(const VSSReport& o) const;
};

enum class GeneratorKind { SubsetNormals, PositiveGrid, FacetNormals, ExplicitList };

struct DirectionGenerator {
  GeneratorKind kind = GeneratorKind::SubsetNormals;
  /// Grid bound; 0 asks vss_by_sweep to pick it by the stabilization rule.
  long bound = 0;
  /// Largest number of vertex subsets tried by subset-normals.
  std::size_t budget = 2000000;
  std::vector<RVector> explicit_directions;

  std::string describe() const;
};

struct DirectionSet {
  std::vector<RVector> directions;  // canonical and sorted
  bool truncated = false;
};

/// Canonical normals of all hyperplanes spanned by d affinely independent
/// vertices, plus facet normals, sums of facet normals across a ridge and the
/// coordinate directions. When there are at most 512 of these, the sums and
/// differences of every pair are added.
DirectionSet subset_normal_directions(const VPolytope& p, std::size_t budget = 2000000);

/// All integer vectors 1 <= u_1 <= ... <= u_d <= B with gcd 1.
std::vector<RVector> positive_grid_directions(std::size_t d, long bound);

/// True iff the vertex set of p is exactly {0,1}^d.
bool is_unit_hypercube(const VPolytope& p);

struct SweepOptions {
  unsigned jobs = 1;
  /// Smallest grid bound tried by the stabilization rule.
  long min_bound = 1;
  /// Largest grid bound tried by the stabilization rule.
  long max_bound = 64;
};

/// Union of all sweep counts over the generated directions. For the unit
/// hypercube with a positive grid, counts of directions with zero entries
/// are added as 2^i times the counts of the smaller cube. Never exhaustive.
VSSReport vss_by_sweep(const VPolytope& p, const DirectionGenerator& gen, const SweepOptions& opts = {});

/// Sweep over an explicit direction list; the building block of vss_by_sweep.
VSSReport sweep_directions(const VPolytope& p, const std::vector<RVector>& dirs, const std::string& generator,
                           unsigned jobs = 1);

struct OracleOptions {
  std::size_t max_vertices = 20;
  std::size_t max_dim = 4;
  unsigned jobs = 1;
};

/// (|below|, |on|, |above|, cv) of one realizable sign vector.
using SignCensus = std::tuple<int, int, int, int>;

struct OracleResult {
  std::set<SignCensus> census;
  std::size_t sign_vectors = 0;  // realizable assignments meeting p
  VSSReport report;
};

/// Enumerates every sign vector V -> {-, 0, +} realized by a hyperplane and
/// records its slice count. Throws CapExceeded beyond the caps.
OracleResult partition_oracle(const VPolytope& p, const OracleOptions& opts = {});

struct GapCertificate {
  bool certified = false;
  std::string reason;  // why a refusal was issued
  long r = 0;
  long k = 0;
  int connectivity = 0;
  std::vector<std::size_t> face_sizes;  // distinct vertex counts of faces
};

/// Certifies that r is a gap of p from a k-connected skeleton (k >= d) and
/// the absence of faces with exactly r vertices, r < k. Faces are audited
/// for 3-polytopes only; throws InputError for other dimensions or when p
/// carries no facets.
GapCertificate gap_certificate(const VPolytope& p, long r, long k);

/// [max(realized)] \ realized.
CountSet gaps(const VSSReport& report);

/// Replays every witness; returns the counts whose witness disagrees.
std::vector<long> failed_witnesses(const VPolytope& p, const VSSReport& report);

/// Runs fn(i) for i in [0, n) on `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace polyslice
