#include <random>
#include <set>

#include "doctest.h"
#include "polyslice/errors.hpp"
#include "polyslice/linalg.hpp"
#include "polyslice/polytope.hpp"
#include "polyslice/theory.hpp"

using namespace polyslice;

namespace {

CountSet minus(CountSet a, const CountSet& b) {
  for (long x : b) a.erase(x);
  return a;
}

Rational q(long p, long den = 1) {
  Rational r(p, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("theory") {
  TEST_CASE("binomials and intervals") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(interval(3) == CountSet{1, 2, 3});
    CHECK(interval(0).empty());
  }

  TEST_CASE("cyclic slice counts") {
    CHECK(cyclic_vss(3, 6) == interval(8));
    CHECK(cyclic_vss(4, 10) == CountSet{1, 2, 3, 4, 9, 12, 13, 14, 15, 16, 17, 18, 19, 21, 24, 25});
    CHECK(cyclic_vss(4, 7) == minus(interval(12), {5, 11}));
    CHECK_THROWS_AS(cyclic_vss(3, 3), InputError);
    CHECK_THROWS_AS(cyclic_vss(2, 5), InputError);
  }

  TEST_CASE("cyclic slice counts by direct enumeration of a*b + i") {
    for (long d = 4; d <= 7; ++d) {
      for (long n = d + 1; n <= 12; ++n) {
        CountSet expect;
        for (long i = 0; i <= d; ++i) {
          for (long a = 0; a <= n - i; ++a) {
            const long b = n - i - a;
            if (a <= n - 1 && b <= n - 1) expect.insert(a * b + i);
          }
        }
        expect.erase(0);
        CHECK(cyclic_vss(d, n) == expect);
        CHECK(*cyclic_vss(d, n).rbegin() == nu_max(d, n));
      }
    }
  }

  TEST_CASE("upper bound") {
    CHECK(nu_max(3, 10) == 16);
    CHECK(nu_max(4, 10) == 25);
    CHECK(nu_max(5, 9) == 20);
    CHECK_THROWS_AS(nu_max(4, 4), InputError);
  }

  TEST_CASE("first hypercube gaps") {
    CHECK(hypercube_first_gaps(5) == CountSet{3, 6, 7, 9});
    CHECK(hypercube_first_gaps(6) == CountSet{3, 5, 7, 9, 11, 12});
    CHECK(hypercube_first_gaps(7) == CountSet{3, 5, 6, 9, 10, 11, 13, 14, 15, 18});
    CHECK_THROWS_AS(hypercube_first_gaps(3), InputError);
  }

  TEST_CASE("penultimate gap and width") {
    CHECK(hypercube_penultimate_gap(6) == 59);
    CHECK(hypercube_penultimate_gap(8) == 279);
    CHECK(hypercube_penultimate_gap(10) == 1259);
    CHECK_THROWS_AS(hypercube_penultimate_gap(7), InputError);
    CHECK_THROWS_AS(hypercube_penultimate_gap(4), InputError);
    CHECK(hypercube_width(2) == 2);
    CHECK(hypercube_width(6) == 60);
    CHECK(hypercube_width(7) == 140);
  }

  TEST_CASE("small cuts") {
    CHECK(small_cut_values(6, 0) == CountSet{1, 2, 4, 8, 16, 32});
    CHECK(small_cut_values(6, 1) == CountSet{6});
    CHECK(small_cut_values(6, 2) == CountSet{10});
    CHECK(small_cut_values(6, 3) == CountSet{13, 14});
    CHECK(small_cut_values(6, 4) == CountSet{15, 16, 17, 18});
    CHECK_THROWS_AS(small_cut_values(6, 5), InputError);
    CHECK_THROWS_AS(small_cut_values(3, 1), InputError);
  }

  TEST_CASE("reference table") {
    CHECK(golden_table(2).nu == 2);
    CHECK(golden_table(2).gaps.empty());
    CHECK(golden_table(4).gaps == CountSet{3, 5});
    CHECK(golden_table(6).gaps == CountSet{3, 5, 7, 9, 11, 12, 59});
    CHECK_THROWS_AS(golden_table(1), InputError);
    CHECK_THROWS_AS(golden_table(8), InputError);
  }

  TEST_CASE("closed forms agree with the table") {
    for (long d = 2; d <= 7; ++d) CHECK(golden_table(d).nu == hypercube_width(d));
    for (long d = 4; d <= 7; ++d) {
      CountSet below;
      for (long g : golden_table(d).gaps) {
        if (g < 4 * d - 9) below.insert(g);
      }
      CHECK(below == hypercube_first_gaps(d));
    }
    CHECK(golden_table(6).gaps.count(hypercube_penultimate_gap(6)) == 1);
  }

  TEST_CASE("small cut values avoid the first gaps") {
    for (long d = 4; d <= 10; ++d) {
      const CountSet g = hypercube_first_gaps(d);
      for (long k = 0; k <= 4; ++k) {
        for (long v : small_cut_values(d, k)) CHECK(g.count(v) == 0);
      }
    }
  }

  TEST_CASE("Gale sign pattern examples") {
    const std::vector<Rational> params{q(0), q(1), q(2)};
    CHECK(gale_sign_pattern(params, q(-1)) == 1);
    CHECK(gale_sign_pattern(params, q(1, 2)) == -1);
    CHECK(gale_sign_pattern(params, q(3, 2)) == 1);
    CHECK(gale_sign_pattern(params, q(5)) == -1);
    CHECK(gale_sign_pattern(params, q(1)) == 0);
  }

  TEST_CASE("Gale sign pattern agrees with the hyperplane through moment points") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-40, 40);
    for (int it = 0; it < 100; ++it) {
      const std::size_t d = 2 + it % 3;
      std::set<Rational> ps;
      while (ps.size() < d) ps.insert(q(num(rng), 4));
      const std::vector<Rational> params(ps.begin(), ps.end());
      std::vector<RVector> pts;
      for (const auto& p : params) pts.push_back(moment_point(p, d));
      const Hyperplane h = hyperplane_through(pts, d);
      const int ref = h.side(moment_point(params.front() - 1, d));
      for (int k = 0; k < 10; ++k) {
        const Rational t = q(num(rng), 3);
        CHECK(h.side(moment_point(t, d)) * ref == gale_sign_pattern(params, t));
      }
    }
  }
}
