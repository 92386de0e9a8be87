// Slicing posets: for a direction u, a partial order on the vertices and the
// non-u-orthogonal edges of a polytope in which the elements met by any
// hyperplane with normal u form a maximal antichain.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polyslice/polytope.hpp"

namespace polyslice {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  Bitset& subtract(const Bitset& o);
  std::size_t count() const;
  bool any() const;
  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class ElementKind { Vertex, Edge };

/// (i, i) is the vertex i; (i, j) is an edge whose endpoint i comes first in
/// the order of the owning poset.
struct PosetElement {
  ElementKind kind;
  int i;
  int j;

  static PosetElement vertex(int v) { return {ElementKind::Vertex, v, v}; }
  static PosetElement edge(int lo, int hi) { return {ElementKind::Edge, lo, hi}; }
  auto key() const { return std::make_tuple(static_cast<int>(kind), i, j); }
  bool operator==(const PosetElement& o) const { return key() == o.key(); }
  bool operator<(const PosetElement& o) const { return key() < o.key(); }
};

/// A finite strict partial order stored as its full "less than" relation.
class Poset {
 public:
  Poset(std::vector<PosetElement> elements, std::vector<Bitset> less);

  std::size_t size() const { return elements_.size(); }
  const std::vector<PosetElement>& elements() const { return elements_; }
  const PosetElement& element(std::size_t a) const { return elements_[a]; }
  /// Elements strictly above a.
  const Bitset& up_set(std::size_t a) const { return less_[a]; }
  bool less(std::size_t a, std::size_t b) const { return less_[a].test(b); }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }
  std::optional<std::size_t> index_of(const PosetElement& e) const;

  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covering() const;
  /// The induced sub-poset on `keep` (indices into this poset).
  Poset restricted(const std::vector<std::size_t>& keep) const;
  /// Irreflexive, antisymmetric and transitive.
  bool is_strict_order() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

 private:
  std::vector<PosetElement> elements_;
  std::vector<Bitset> less_;
  std::map<PosetElement, std::size_t> index_;
};

struct SlicingPoset {
  RVector direction;
  std::vector<Rational> vertex_level;  // u.v per vertex of the source polytope
  Poset poset;
};

/// Elements: every vertex, plus every edge not orthogonal to u (oriented from
/// the lower to the higher endpoint). a < b iff a != b and the upper endpoint
/// of a reaches the lower endpoint of b along a path that is strictly
/// increasing in u (the empty path included).
SlicingPoset build_slicing_poset(const VPolytope& p, const RVector& u);

/// Vertices on {u.x = t} and edges crossing it, as elements of the slicing
/// poset for u. Throws NoIntersectionError when the hyperplane misses p.
std::vector<PosetElement> slice_elements(const VPolytope& p, const RVector& u, const Rational& t);

/// No two members comparable and every non-member comparable to a member.
bool is_maximal_antichain(const Poset& poset, const std::vector<std::size_t>& members);
bool is_antichain(const Poset& poset, const std::vector<std::size_t>& members);

/// Maps elements to indices; throws InputError if one is not in the poset.
std::vector<std::size_t> indices_of(const Poset& poset, const std::vector<PosetElement>& elems);

/// The extended O'Neil poset on the vertices and edges of Q_d, vertices
/// indexed by their 0/1 bitmask. (a, b) < (c, d) iff they differ and c has a
/// one wherever b does.
Poset oneil_poset(std::size_t d);

struct IsomorphismResult {
  bool isomorphic;
  std::string diagnostic;
};

/// Bits k with u_k < 0: the coordinate reflections x_k -> 1 - x_k that carry
/// u to a positive direction.
unsigned reflection_mask(const RVector& u);

/// Checks that relabelling hypercube vertices by m -> m ^ reflect carries the
/// relation of `a` exactly onto that of `b`.
IsomorphismResult poset_isomorphic(const Poset& a, const Poset& b, unsigned reflect = 0);

/// Size of a largest antichain (Dilworth: |P| minus a maximum matching in
/// the comparability bipartite graph). Throws CapExceeded above max_elements.
std::size_t width(const Poset& poset, std::size_t max_elements = 10000);

/// Edge (v, w) of Q_d with |w| in {ceil(d/2), floor(d/2) + 1}: the levels
/// whose edges lie on the fewest maximal chains.
bool is_central_edge(const PosetElement& e, std::size_t d);

/// True iff every maximum antichain of oneil_poset(d) consists of central
/// edges. An element x lies in some maximum antichain iff 1 + width of the
/// elements incomparable to x equals the width, so each non-central element
/// is tested that way. Throws CapExceeded for d > 6.
bool max_antichains_central(std::size_t d);

/// Graphviz rendering of the covering relation: vertex elements as boxes,
/// edge elements as ellipses, vertices of equal level on one rank.
std::string to_dot(const SlicingPoset& sp);

}  // namespace polyslice
