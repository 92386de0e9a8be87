#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "polyslice/errors.hpp"
#include "polyslice/posets.hpp"
#include "polyslice/slicer.hpp"
#include "polyslice/theory.hpp"

using namespace polyslice;

namespace {

RVector iv(std::initializer_list<long> xs) { return RVector::from_ints(std::vector<long>(xs)); }

PosetElement V(int v) { return PosetElement::vertex(v); }
PosetElement E(int a, int b) { return PosetElement::edge(a, b); }

std::set<std::pair<PosetElement, PosetElement>> relation(const Poset& p) {
  std::set<std::pair<PosetElement, PosetElement>> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.less(a, b)) out.insert({p.element(a), p.element(b)});
    }
  }
  return out;
}

struct AntichainCensus {
  std::size_t best = 0;
  std::vector<std::uint32_t> maximum;  // all antichains of size best
};

// Every subset of a poset with at most 24 elements.
AntichainCensus brute_antichains(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> comp(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.comparable(a, b)) comp[a] |= 1u << b;
    }
  }
  AntichainCensus c;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (((s >> a) & 1) && (comp[a] & s)) ok = false;
    }
    if (!ok) continue;
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(s));
    if (k > c.best) {
      c.best = k;
      c.maximum.clear();
    }
    if (k == c.best) c.maximum.push_back(s);
  }
  return c;
}

Poset chain(std::size_t n) {
  std::vector<PosetElement> elems;
  std::vector<Bitset> less;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(V(static_cast<int>(i)));
    Bitset up(n);
    for (std::size_t j = i + 1; j < n; ++j) up.set(j);
    less.push_back(up);
  }
  return Poset(elems, less);
}

}  // namespace

TEST_SUITE("posets") {
  TEST_CASE("slicing poset of a square along (1,2), worked by hand") {
    // Vertex 0 = (0,0), 1 = (1,0), 2 = (0,1), 3 = (1,1); levels 0, 1, 2, 3.
    // Increasing paths: 0 reaches everything, 1 -> 3, 2 -> 3.
    const SlicingPoset sp = build_slicing_poset(hypercube(2), iv({1, 2}));
    CHECK(sp.poset.size() == 8);
    const std::set<std::pair<PosetElement, PosetElement>> expected{
        {V(0), V(1)},       {V(0), V(2)},       {V(0), V(3)},       {V(0), E(0, 1)},    {V(0), E(0, 2)},
        {V(0), E(1, 3)},    {V(0), E(2, 3)},    {V(1), V(3)},       {V(1), E(1, 3)},    {V(2), V(3)},
        {V(2), E(2, 3)},    {E(0, 1), V(1)},    {E(0, 1), V(3)},    {E(0, 1), E(1, 3)}, {E(0, 2), V(2)},
        {E(0, 2), V(3)},    {E(0, 2), E(2, 3)}, {E(1, 3), V(3)},    {E(2, 3), V(3)}};
    CHECK(relation(sp.poset) == expected);
    CHECK(sp.poset.is_strict_order());
  }

  TEST_CASE("orthogonal edges are dropped") {
    const SlicingPoset sp = build_slicing_poset(hypercube(3), iv({1, 1, 0}));
    CHECK(sp.poset.size() == 8 + 8);
    const SlicingPoset oct = build_slicing_poset(octahedron(), iv({0, 0, 1}));
    const SlicingPoset gen = build_slicing_poset(octahedron(), iv({1, 2, 3}));
    CHECK(oct.poset.size() == 6 + 8);
    CHECK(gen.poset.size() == 6 + 12);
    CHECK(width(oct.poset) == 4);
  }

  TEST_CASE("the six middle edges of Q_3 form a maximal antichain") {
    const SlicingPoset sp = build_slicing_poset(hypercube(3), iv({1, 1, 1}));
    const auto elems = slice_elements(hypercube(3), iv({1, 1, 1}), Rational(3, 2));
    CHECK(elems.size() == 6);
    const auto idx = indices_of(sp.poset, elems);
    CHECK(is_antichain(sp.poset, idx));
    CHECK(is_maximal_antichain(sp.poset, idx));
    CHECK(width(sp.poset) == 6);
  }

  TEST_CASE("non-maximal and non-antichain sets") {
    const SlicingPoset sp = build_slicing_poset(hypercube(2), iv({1, 1}));
    const auto v1 = indices_of(sp.poset, {V(1)});
    CHECK(is_antichain(sp.poset, v1));
    CHECK_FALSE(is_maximal_antichain(sp.poset, v1));
    const auto chain01 = indices_of(sp.poset, {V(0), V(1)});
    CHECK_FALSE(is_antichain(sp.poset, chain01));
    CHECK(is_maximal_antichain(sp.poset, indices_of(sp.poset, {V(1), V(2)})));
    CHECK_THROWS_AS(indices_of(sp.poset, {E(0, 3)}), InputError);
  }

  TEST_CASE("slice elements miss raises") {
    CHECK_THROWS_AS(slice_elements(hypercube(2), iv({1, 1}), Rational(3)), NoIntersectionError);
  }

  TEST_CASE("slices are maximal antichains of the matching size") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (const VPolytope& p : {hypercube(3), octahedron(), icosahedron_rational(), cyclic(CyclicSpec::standard(4, 7))}) {
      for (int i = 0; i < 15; ++i) {
        RVector u(p.dim());
        for (std::size_t k = 0; k < p.dim(); ++k) u[k] = entry(rng);
        if (u.is_zero()) u[0] = 1;
        const SlicingPoset sp = build_slicing_poset(p, u);
        CHECK(sp.poset.is_strict_order());
        const SweepProfile prof = sweep(p, u);
        for (std::size_t k = 0; k < prof.levels.size(); ++k) {
          const auto idx = indices_of(sp.poset, slice_elements(p, u, prof.levels[k]));
          CHECK(static_cast<int>(idx.size()) == prof.at_level[k]);
          CHECK(is_maximal_antichain(sp.poset, idx));
        }
        for (std::size_t k = 0; k + 1 < prof.levels.size(); ++k) {
          const auto idx = indices_of(sp.poset, slice_elements(p, u, prof.midpoint(k)));
          CHECK(is_maximal_antichain(sp.poset, idx));
        }
      }
    }
  }

  TEST_CASE("minimal and maximal elements are the extreme vertices") {
    const SlicingPoset sp = build_slicing_poset(hypercube(3), iv({1, 2, 4}));
    const auto lo = sp.poset.minimal_elements();
    const auto hi = sp.poset.maximal_elements();
    REQUIRE(lo.size() == 1);
    REQUIRE(hi.size() == 1);
    CHECK(sp.poset.element(lo[0]) == V(0));
    CHECK(sp.poset.element(hi[0]) == V(7));
  }

  TEST_CASE("O'Neil poset widths") {
    CHECK(oneil_poset(2).size() == 8);
    CHECK(width(oneil_poset(2)) == 2);
    CHECK(width(oneil_poset(3)) == 6);
    CHECK(width(oneil_poset(4)) == 12);
    CHECK(width(oneil_poset(5)) == 30);
    for (long d = 2; d <= 5; ++d) CHECK(static_cast<long>(width(oneil_poset(d))) == hypercube_width(d));
  }

  TEST_CASE("width of a chain and of an antichain") {
    CHECK(width(chain(5)) == 1);
    std::vector<PosetElement> elems{V(0), V(1), V(2)};
    CHECK(width(Poset(elems, {Bitset(3), Bitset(3), Bitset(3)})) == 3);
    CHECK_THROWS_AS(width(oneil_poset(4), 10), CapExceeded);
  }

  TEST_CASE("slicing posets of positive directions match the O'Neil poset") {
    for (const auto& u : {iv({1, 2, 4}), iv({1, 1, 1}), iv({3, 1, 2})}) {
      const IsomorphismResult r = poset_isomorphic(build_slicing_poset(hypercube(3), u).poset, oneil_poset(3));
      CHECK_MESSAGE(r.isomorphic, r.diagnostic);
    }
    const RVector neg = iv({-1, 2, 4});
    CHECK(reflection_mask(neg) == 1);
    const Poset pn = build_slicing_poset(hypercube(3), neg).poset;
    CHECK(poset_isomorphic(pn, oneil_poset(3), reflection_mask(neg)).isomorphic);
    CHECK_FALSE(poset_isomorphic(pn, oneil_poset(3)).isomorphic);
  }

  TEST_CASE("isomorphism reports size mismatches") {
    const IsomorphismResult r = poset_isomorphic(oneil_poset(2), oneil_poset(3));
    CHECK_FALSE(r.isomorphic);
    CHECK_FALSE(r.diagnostic.empty());
  }

  TEST_CASE("central edges") {
    CHECK(is_central_edge(E(0b001, 0b011), 3));
    CHECK_FALSE(is_central_edge(E(0b000, 0b001), 3));
    CHECK(is_central_edge(E(0b0001, 0b0011), 4));
    CHECK(is_central_edge(E(0b0011, 0b0111), 4));
    CHECK_FALSE(is_central_edge(V(0b0011), 4));
  }

  TEST_CASE("maximum antichains of small O'Neil posets by subset enumeration") {
    for (std::size_t d : {2u, 3u}) {
      const Poset p = oneil_poset(d);
      const AntichainCensus c = brute_antichains(p);
      CHECK(c.best == width(p));
      bool all_central = true;
      for (std::uint32_t s : c.maximum) {
        for (std::size_t a = 0; a < p.size(); ++a) {
          if (((s >> a) & 1) && !is_central_edge(p.element(a), d)) all_central = false;
        }
      }
      CHECK(max_antichains_central(d) == all_central);
    }
    // In Q_2 the two middle vertices already form a maximum antichain.
    CHECK_FALSE(max_antichains_central(2));
    CHECK(max_antichains_central(3));
    CHECK(max_antichains_central(4));
    CHECK(max_antichains_central(5));
    CHECK_THROWS_AS(max_antichains_central(7), CapExceeded);
  }

  TEST_CASE("both middle edge levels of Q_4 are maximum antichains") {
    const Poset p = oneil_poset(4);
    for (int upper : {2, 3}) {
      std::vector<std::size_t> level;
      for (std::size_t a = 0; a < p.size(); ++a) {
        const auto& e = p.element(a);
        if (e.kind == ElementKind::Edge && __builtin_popcount(static_cast<unsigned>(e.j)) == upper) level.push_back(a);
      }
      CHECK(level.size() == 12);
      CHECK(is_antichain(p, level));
    }
  }

  TEST_CASE("covering relation and restriction") {
    const Poset c = chain(4);
    CHECK(c.covering().size() == 3);
    const Poset r = c.restricted({0, 2});
    CHECK(r.size() == 2);
    CHECK(r.less(0, 1));
  }

  TEST_CASE("DOT output") {
    const std::string dot = to_dot(build_slicing_poset(hypercube(2), iv({1, 1})));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=ellipse") != std::string::npos);
    CHECK(dot.find("rank=same; n1; n2;") != std::string::npos);
  }
}
