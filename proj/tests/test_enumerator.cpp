#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "polyslice/enumerator.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/slicer.hpp"

using namespace polyslice;

namespace {

RVector iv(std::initializer_list<long> xs) { return RVector::from_ints(std::vector<long>(xs)); }

bool contains(const std::vector<RVector>& dirs, const RVector& u) {
  return std::find(dirs.begin(), dirs.end(), u) != dirs.end();
}

// Nondecreasing vectors in [1, B]^d with gcd 1.
std::size_t count_grid(std::size_t d, long bound) {
  std::size_t total = 0;
  std::vector<long> u(d, 1);
  while (true) {
    long g = 0;
    for (long x : u) g = std::gcd(g, x);
    if (g == 1) ++total;
    std::size_t k = d;
    while (k > 0 && u[k - 1] == bound) --k;
    if (k == 0) break;
    ++u[k - 1];
    for (std::size_t j = k; j < d; ++j) u[j] = u[k - 1];
  }
  return total;
}

long power(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("enumerator") {
  TEST_CASE("positive grid examples") {
    CHECK(positive_grid_directions(2, 2) == std::vector<RVector>{iv({1, 1}), iv({1, 2})});
    CHECK(positive_grid_directions(3, 2).size() == 3);
    CHECK(positive_grid_directions(2, 1) == std::vector<RVector>{iv({1, 1})});
    for (std::size_t d : {2u, 3u, 5u}) {
      for (long b : {1L, 3L, 8L}) CHECK(positive_grid_directions(d, b).size() == count_grid(d, b));
    }
  }

  TEST_CASE("subset normals of a square and a tetrahedron") {
    const DirectionSet sq = subset_normal_directions(hypercube(2));
    for (const auto& u : {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1})}) CHECK(contains(sq.directions, u));
    CHECK_FALSE(sq.truncated);
    // Four facet normals and the three coordinate directions, which are also
    // the sums of adjacent facet normals; then sums and differences of pairs.
    const DirectionSet t = subset_normal_directions(tetrahedron());
    const VPolytope tet = tetrahedron();
    for (const auto& f : *tet.facets()) {
      std::vector<RVector> pts;
      for (int i : f) pts.push_back(tet.vertex(i));
      CHECK(contains(t.directions, hyperplane_through(pts, 3).u));
    }
    for (const auto& e : {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}) CHECK(contains(t.directions, e));
    CHECK(t.directions.size() > 7);
    CHECK(std::is_sorted(t.directions.begin(), t.directions.end()));
    CHECK(std::adjacent_find(t.directions.begin(), t.directions.end()) == t.directions.end());
  }

  TEST_CASE("subset normals respect the budget") {
    const DirectionSet d = subset_normal_directions(hypercube(4), 5);
    CHECK(d.truncated);
    DirectionGenerator g;
    g.budget = 5;
    CHECK(vss_by_sweep(hypercube(4), g).generator.find("truncated") != std::string::npos);
  }

  TEST_CASE("unit hypercube detection") {
    CHECK(is_unit_hypercube(hypercube(4)));
    CHECK_FALSE(is_unit_hypercube(cross_polytope(3)));
    const VPolytope q = hypercube(3);
    std::vector<RVector> doubled;
    for (const auto& v : q.vertices()) doubled.push_back(v * 2);
    CHECK_FALSE(is_unit_hypercube(VPolytope("2Q3", 3, doubled, q.edges())));
  }

  TEST_CASE("sweep reports for small hypercubes") {
    DirectionGenerator sub;
    CHECK(vss_by_sweep(hypercube(3), sub).realized == interval(6));
    DirectionGenerator grid{GeneratorKind::PositiveGrid, 0, 2000000, {}};
    const VSSReport q4 = vss_by_sweep(hypercube(4), grid);
    CHECK(q4.nu == 12);
    CHECK(q4.gaps == CountSet{3, 5});
    CHECK_FALSE(q4.exhaustive);
    CHECK(q4.generator.find("positive-grid") != std::string::npos);
    CHECK(failed_witnesses(hypercube(4), q4).empty());
    const VSSReport q5 = vss_by_sweep(hypercube(5), grid);
    CHECK(q5.gaps == CountSet{3, 6, 7, 9});
  }

  TEST_CASE("sweep reports for cyclic polytopes match the closed form") {
    DirectionGenerator sub;
    for (auto [d, n] : {std::pair{3, 6}, {3, 7}, {4, 7}, {4, 8}, {4, 10}}) {
      const VSSReport r = vss_by_sweep(cyclic(CyclicSpec::standard(d, n)), sub);
      CHECK(r.realized == cyclic_vss(d, n));
      CHECK(failed_witnesses(cyclic(CyclicSpec::standard(d, n)), r).empty());
    }
  }

  TEST_CASE("explicit direction lists") {
    DirectionGenerator g{GeneratorKind::ExplicitList, 0, 0, {iv({1, 1, 1})}};
    const VSSReport r = vss_by_sweep(hypercube(3), g);
    CHECK(r.realized == CountSet{1, 3, 6});
    CHECK(r.witnesses.at(6).offset == Rational(3, 2));
    CHECK(r.witnesses.at(6).direction == iv({1, 1, 1}));
  }

  TEST_CASE("results do not depend on the number of jobs") {
    DirectionGenerator sub;
    const VPolytope p = stack_all_facets(tetrahedron());
    CHECK(vss_by_sweep(p, sub, {1}) == vss_by_sweep(p, sub, {4}));
    const VSSReport a = partition_oracle(octahedron(), {20, 4, 1}).report;
    const VSSReport b = partition_oracle(octahedron(), {20, 4, 3}).report;
    CHECK(a == b);
  }

  TEST_CASE("oracle on simplices: every proper sign vector is realizable") {
    // d + 1 affinely independent points: the map x -> (u.v_i - t)_i is onto,
    // so every sign vector except all-plus, all-minus and all-zero is realized.
    CHECK(partition_oracle(simplex(2)).report.realized == CountSet{1, 2});
    CHECK(partition_oracle(simplex(2)).sign_vectors == static_cast<std::size_t>(power(3, 3) - 3));
    const OracleResult t = partition_oracle(tetrahedron());
    CHECK(t.report.realized == interval(4));
    CHECK(t.report.exhaustive);
    CHECK(t.report.generator == "partition-oracle");
    CHECK(t.sign_vectors == static_cast<std::size_t>(power(3, 4) - 3));
    CHECK(partition_oracle(simplex(4)).sign_vectors == static_cast<std::size_t>(power(3, 5) - 3));
  }

  TEST_CASE("oracle contains every sweep count") {
    DirectionGenerator sub;
    for (const VPolytope& p : {hypercube(3), octahedron(), cube3(), cyclic(CyclicSpec::standard(3, 6)),
                               cyclic(CyclicSpec::standard(4, 7)), stack_all_facets(tetrahedron())}) {
      const VSSReport o = partition_oracle(p).report;
      const VSSReport s = vss_by_sweep(p, sub);
      CHECK(std::includes(o.realized.begin(), o.realized.end(), s.realized.begin(), s.realized.end()));
      CHECK(failed_witnesses(p, o).empty());
      if (p.dim() == 3) CHECK(o.nu <= 2 * (static_cast<long>(p.num_vertices()) - 2));
    }
  }

  TEST_CASE("oracle census is consistent with each sign vector") {
    const OracleResult r = partition_oracle(hypercube(3));
    for (const auto& [below, on, above, count] : r.census) {
      CHECK(below + on + above == 8);
      CHECK(count >= on);
      if (on == 0) CHECK(count >= 3);
    }
    CHECK(r.report.realized == interval(6));
  }

  TEST_CASE("stacked tetrahedron misses four") {
    const VSSReport r = partition_oracle(stack_all_facets(tetrahedron())).report;
    CHECK(r.gaps == CountSet{4});
  }

  TEST_CASE("oracle caps") {
    CHECK_THROWS_AS(partition_oracle(hypercube(5)), CapExceeded);
    CHECK_THROWS_AS(partition_oracle(simplex(5)), CapExceeded);
    CHECK_THROWS_AS(partition_oracle(hypercube(4), {10, 4, 1}), CapExceeded);
  }

  TEST_CASE("gap certificates") {
    const GapCertificate ico = gap_certificate(icosahedron_rational(), 4, 5);
    CHECK(ico.certified);
    CHECK(ico.connectivity == 5);
    CHECK(ico.face_sizes == std::vector<std::size_t>{1, 2, 3});

    const GapCertificate cube = gap_certificate(cube3(), 4, 3);
    CHECK_FALSE(cube.certified);
    CHECK_FALSE(cube.reason.empty());

    CHECK_FALSE(gap_certificate(octahedron(), 3, 4).certified);  // triangles are faces
    CHECK_FALSE(gap_certificate(octahedron(), 5, 4).certified);  // r >= k
    CHECK_FALSE(gap_certificate(tetrahedron(), 2, 2).certified);  // k < d
    CHECK_THROWS_AS(gap_certificate(hypercube(4), 3, 4), InputError);
    const VPolytope bare("bare", 3, cube3().vertices(), cube3().edges());
    CHECK_THROWS_AS(gap_certificate(bare, 2, 3), InputError);
  }

  TEST_CASE("gaps of a report") {
    VSSReport r;
    r.realized = {1, 2, 4, 7};
    CHECK(gaps(r) == CountSet{3, 5, 6});
    r.realized = {};
    CHECK(gaps(r).empty());
  }

  TEST_CASE("tampered witnesses are caught") {
    DirectionGenerator sub;
    VSSReport r = vss_by_sweep(hypercube(3), sub);
    CHECK(failed_witnesses(hypercube(3), r).empty());
    r.witnesses.at(6).offset = Rational(1, 2);
    CHECK(failed_witnesses(hypercube(3), r) == std::vector<long>{6});
  }

  TEST_CASE("parallel_for visits every index once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}
