#include <random>

#include "doctest.h"
#include "polyslice/errors.hpp"
#include "polyslice/slicer.hpp"

using namespace polyslice;

namespace {

RVector iv(std::initializer_list<long> xs) { return RVector::from_ints(std::vector<long>(xs)); }

Rational q(long p, long den = 1) {
  Rational r(p, den);
  r.canonicalize();
  return r;
}

// cv on Q_d straight from bitmasks: vertices with u.m = t plus edges m, m^e_k
// whose endpoints lie strictly on opposite sides.
int cube_cv(std::size_t d, const std::vector<long>& u, const Rational& t) {
  auto level = [&](unsigned m) {
    long s = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if ((m >> k) & 1) s += u[k];
    }
    return Rational(s);
  };
  int count = 0;
  for (unsigned m = 0; m < (1u << d); ++m) {
    const int sm = sign(level(m) - t);
    if (sm == 0) ++count;
    for (std::size_t k = 0; k < d; ++k) {
      const unsigned w = m | (1u << k);
      if (w == m) continue;
      if (sm * sign(level(w) - t) < 0) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("slicer") {
  TEST_CASE("classify a square") {
    const SlicePartition s = classify(hypercube(2), {iv({1, 1}), q(1, 2)});
    CHECK(s.below == std::vector<int>{0});
    CHECK(s.on.empty());
    CHECK(s.above == std::vector<int>{1, 2, 3});
    CHECK(s.crossed.size() == 2);
    CHECK(s.count() == 2);
  }

  TEST_CASE("cv examples") {
    CHECK(cv(hypercube(3), {iv({1, 1, 1}), q(3, 2)}) == 6);
    CHECK(cv(hypercube(3), {iv({1, 1, 1}), q(1)}) == 3);
    CHECK(cv(hypercube(4), {iv({1, 0, 0, 0}), q(0)}) == 8);
    CHECK(cv(hypercube(5), {iv({1, 1, 1, 1, 1}), q(1, 2)}) == 5);
    CHECK(cv(tetrahedron(), {iv({0, 0, 1}), q(0)}) >= 1);
  }

  TEST_CASE("misses and dimension errors") {
    CHECK_THROWS_AS(cv(hypercube(3), {iv({1, 1, 1}), q(4)}), NoIntersectionError);
    CHECK_THROWS_AS(cv(hypercube(3), {iv({1, 1, 1}), q(-1, 2)}), NoIntersectionError);
    CHECK_THROWS_AS(classify(hypercube(3), {iv({1, 1}), q(0)}), InputError);
    CHECK_THROWS_AS(sweep(hypercube(3), iv({1, 1})), InputError);
  }

  TEST_CASE("sweep of Q_3 along the long diagonal") {
    const SweepProfile s = sweep(hypercube(3), iv({1, 1, 1}));
    CHECK(s.levels == std::vector<Rational>{q(0), q(1), q(2), q(3)});
    CHECK(s.at_level == std::vector<int>{1, 3, 3, 1});
    CHECK(s.between == std::vector<int>{3, 6, 3});
    for (std::size_t k = 0; k < s.levels.size(); ++k) CHECK(s.at_level[k] == cube_cv(3, {1, 1, 1}, s.levels[k]));
    for (std::size_t k = 0; k < s.between.size(); ++k) CHECK(s.between[k] == cube_cv(3, {1, 1, 1}, s.midpoint(k)));
  }

  TEST_CASE("sweep of a square along (1,2)") {
    // At t = 1 the vertex (1,0) is on the line and the edge (0,0)-(0,1) crosses it.
    const SweepProfile s = sweep(hypercube(2), iv({1, 2}));
    CHECK(s.at_level == std::vector<int>{1, 2, 2, 1});
    CHECK(s.between == std::vector<int>{2, 2, 2});
  }

  TEST_CASE("a facet normal gives the facet at its extreme level") {
    const SweepProfile s = sweep(cyclic(CyclicSpec::standard(3, 6)), iv({5, 4, -4}));
    CHECK(s.at_level.size() >= 2);
    const SweepProfile t = sweep(cube3(), iv({0, 0, 1}));
    CHECK(t.at_level.front() == 4);
    CHECK(t.at_level.back() == 4);
  }

  TEST_CASE("sweep agrees with the bitmask oracle at levels and inside gaps") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int i = 0; i < 300; ++i) {
      const std::size_t d = 2 + i % 5;
      std::vector<long> u(d);
      bool nonzero = false;
      for (auto& x : u) {
        x = entry(rng);
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) u[0] = 1;
      const SweepProfile s = sweep(hypercube(d), RVector::from_ints(u));
      for (std::size_t k = 0; k < s.levels.size(); ++k) CHECK(s.at_level[k] == cube_cv(d, u, s.levels[k]));
      for (std::size_t k = 0; k < s.between.size(); ++k) {
        // The count is constant on the whole open interval.
        const Rational a = s.levels[k], b = s.levels[k + 1];
        CHECK(s.between[k] == cube_cv(d, u, (2 * a + b) / 3));
        CHECK(s.between[k] == cube_cv(d, u, (a + 2 * b) / 3));
      }
    }
  }

  TEST_CASE("partitions cover every vertex once") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> entry(-4, 4);
    const VPolytope p = icosahedron_rational();
    for (int i = 0; i < 100; ++i) {
      const RVector u = iv({entry(rng), entry(rng), entry(rng) | 1});
      const auto levels = vertex_levels(p, u);
      const Rational t = levels[static_cast<std::size_t>(i) % levels.size()];
      const SlicePartition s = classify(p, {u, t});
      CHECK(s.below.size() + s.on.size() + s.above.size() == p.num_vertices());
      CHECK_FALSE(s.on.empty());
      for (const auto& [a, b] : s.crossed) CHECK(sign(dot(u, p.vertex(a)) - t) * sign(dot(u, p.vertex(b)) - t) < 0);
    }
  }

  TEST_CASE("nudge examples") {
    const VPolytope c = hypercube(3);
    const Hyperplane h = nudge_off_vertices(c, {iv({1, 1, 1}), q(1)});
    CHECK(h.u == iv({1, 1, 1}));
    CHECK(h.t == q(3, 2));
    CHECK(cv(c, h) == 6);

    const Hyperplane tangent = nudge_off_vertices(c, {iv({1, 1, 1}), q(0)});
    CHECK(tangent.t == q(1, 2));
    CHECK(cv(c, tangent) == 3);

    const Hyperplane mid = nudge_off_vertices(c, {iv({1, 0, 0}), q(1, 2)});
    CHECK(mid.t == q(1, 2));
  }

  TEST_CASE("nudging never lowers the count and clears every vertex") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (const VPolytope& p : {hypercube(4), octahedron(), stack_all_facets(tetrahedron())}) {
      for (int i = 0; i < 60; ++i) {
        RVector u(p.dim());
        for (std::size_t k = 0; k < p.dim(); ++k) u[k] = entry(rng);
        if (u.is_zero()) u[0] = 1;
        const auto levels = vertex_levels(p, u);
        const Hyperplane h{u, levels[static_cast<std::size_t>(i) % levels.size()]};
        const Hyperplane n = nudge_off_vertices(p, h);
        CHECK(n.u == h.u);
        CHECK(classify(p, n).on.empty());
        CHECK(cv(p, n) >= cv(p, h));
      }
    }
  }

  TEST_CASE("nudge failures") {
    const VPolytope flat("flat", 3, {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0})}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(nudge_off_vertices(flat, {iv({0, 0, 1}), q(0)}), DegenerateError);
    CHECK_THROWS_AS(nudge_off_vertices(hypercube(3), {iv({1, 1, 1}), q(5)}), NoIntersectionError);
  }
}
