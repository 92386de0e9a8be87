#include "polyslice/posets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "polyslice/errors.hpp"
#include "polyslice/linalg.hpp"
#include "polyslice/slicer.hpp"

namespace polyslice {

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

Poset::Poset(std::vector<PosetElement> elements, std::vector<Bitset> less)
    : elements_(std::move(elements)), less_(std::move(less)) {
  if (less_.size() != elements_.size()) throw InputError("Poset: relation size mismatch");
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    if (!index_.emplace(elements_[a], a).second) throw InputError("Poset: duplicate element");
  }
}

std::optional<std::size_t> Poset::index_of(const PosetElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covering() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    Bitset cover = less_[a];
    less_[a].for_each([&](std::size_t c) { cover.subtract(less_[c]); });
    cover.for_each([&](std::size_t b) { out.emplace_back(a, b); });
  }
  return out;
}

Poset Poset::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<PosetElement> elems;
  std::vector<Bitset> rel(keep.size(), Bitset(keep.size()));
  for (auto k : keep) elems.push_back(elements_[k]);
  for (std::size_t x = 0; x < keep.size(); ++x) {
    for (std::size_t y = 0; y < keep.size(); ++y) {
      if (less_[keep[x]].test(keep[y])) rel[x].set(y);
    }
  }
  return Poset(std::move(elems), std::move(rel));
}

bool Poset::is_strict_order() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (less_[a].test(a)) return false;
    bool ok = true;
    less_[a].for_each([&](std::size_t b) {
      if (less_[b].test(a)) ok = false;
      // Transitivity: up(b) must be inside up(a).
      Bitset extra = less_[b];
      extra.subtract(less_[a]);
      if (extra.any()) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<bool> has_below(size(), false);
  for (std::size_t a = 0; a < size(); ++a) less_[a].for_each([&](std::size_t b) { has_below[b] = true; });
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (!has_below[a]) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (!less_[a].any()) out.push_back(a);
  }
  return out;
}

SlicingPoset build_slicing_poset(const VPolytope& p, const RVector& u) {
  if (u.is_zero()) throw InputError("build_slicing_poset: direction must be nonzero");
  const std::vector<Rational> level = vertex_levels(p, u);
  const std::size_t n = p.num_vertices();

  // Ascending reachability, filled from the highest level down.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (level[a] != level[b]) return level[a] > level[b];
    return p.vertex(b) < p.vertex(a);
  });
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t v : order) {
    reach[v].set(v);
    for (int w : p.neighbors()[v]) {
      if (level[w] > level[v]) reach[v] |= reach[w];
    }
  }

  std::vector<PosetElement> elems;
  for (std::size_t v = 0; v < n; ++v) elems.push_back(PosetElement::vertex(static_cast<int>(v)));
  for (auto [a, b] : p.edges()) {
    if (level[a] == level[b]) continue;
    elems.push_back(level[a] < level[b] ? PosetElement::edge(a, b) : PosetElement::edge(b, a));
  }
  const std::size_t m = elems.size();
  std::vector<Bitset> starting_at(n, Bitset(m));
  for (std::size_t e = 0; e < m; ++e) starting_at[elems[e].i].set(e);
  std::vector<Bitset> less(m, Bitset(m));
  for (std::size_t e = 0; e < m; ++e) {
    reach[elems[e].j].for_each([&](std::size_t w) { less[e] |= starting_at[w]; });
    less[e].reset(e);
  }
  return SlicingPoset{u, level, Poset(std::move(elems), std::move(less))};
}

std::vector<PosetElement> slice_elements(const VPolytope& p, const RVector& u, const Rational& t) {
  const SlicePartition part = classify(p, Hyperplane{u, t});
  if (!part.meets()) throw NoIntersectionError("slice_elements: hyperplane does not meet the polytope");
  std::vector<PosetElement> out;
  for (int v : part.on) out.push_back(PosetElement::vertex(v));
  for (auto [a, b] : part.crossed) {
    // a is below iff u.v_a < t.
    out.push_back(dot(u, p.vertex(a)) < t ? PosetElement::edge(a, b) : PosetElement::edge(b, a));
  }
  return out;
}

std::vector<std::size_t> indices_of(const Poset& poset, const std::vector<PosetElement>& elems) {
  std::vector<std::size_t> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    auto idx = poset.index_of(e);
    if (!idx) throw InputError("element is not in the poset");
    out.push_back(*idx);
  }
  return out;
}

bool is_antichain(const Poset& poset, const std::vector<std::size_t>& members) {
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      if (members[x] == members[y] || poset.comparable(members[x], members[y])) return false;
    }
  }
  return true;
}

bool is_maximal_antichain(const Poset& poset, const std::vector<std::size_t>& members) {
  if (!is_antichain(poset, members)) return false;
  Bitset covered(poset.size());
  for (auto a : members) covered.set(a);
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (covered.test(a)) continue;
    bool hit = false;
    for (auto m : members) {
      if (poset.comparable(a, m)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

Poset oneil_poset(std::size_t d) {
  if (d < 1 || d > 12) throw InputError("oneil_poset: dimension must be in [1, 12]");
  const int n = 1 << d;
  std::vector<PosetElement> elems;
  for (int v = 0; v < n; ++v) elems.push_back(PosetElement::vertex(v));
  for (int v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < d; ++k) {
      if (!((v >> k) & 1)) elems.push_back(PosetElement::edge(v, v | (1 << k)));
    }
  }
  const std::size_t m = elems.size();
  std::vector<Bitset> less(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    const int top = elems[a].j;
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && (elems[b].i & top) == top) less[a].set(b);
    }
  }
  return Poset(std::move(elems), std::move(less));
}

unsigned reflection_mask(const RVector& u) {
  unsigned mask = 0;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (sgn(u[k]) < 0) mask |= 1u << k;
  }
  return mask;
}

IsomorphismResult poset_isomorphic(const Poset& a, const Poset& b, unsigned reflect) {
  if (a.size() != b.size()) {
    return {false, "element counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size())};
  }
  std::vector<std::size_t> image(a.size());
  std::vector<bool> hit(b.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x) {
    PosetElement e = a.element(x);
    e.i = static_cast<int>(static_cast<unsigned>(e.i) ^ reflect);
    e.j = static_cast<int>(static_cast<unsigned>(e.j) ^ reflect);
    auto y = b.index_of(e);
    if (!y || hit[*y]) {
      return {false, "element (" + std::to_string(a.element(x).i) + "," + std::to_string(a.element(x).j) +
                         ") has no image"};
    }
    hit[*y] = true;
    image[x] = *y;
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a.less(x, y) != b.less(image[x], image[y])) {
        return {false, "relation differs at (" + std::to_string(x) + "," + std::to_string(y) + ")"};
      }
    }
  }
  return {true, ""};
}

std::size_t width(const Poset& poset, std::size_t max_elements) {
  const std::size_t n = poset.size();
  if (n > max_elements) throw CapExceeded("width: poset has more than " + std::to_string(max_elements) + " elements");
  // Kuhn's augmenting paths on the bipartite graph a -> b for a < b.
  std::vector<long> match_right(n, -1);
  std::size_t matching = 0;
  std::vector<char> visited;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < n; ++a) poset.up_set(a).for_each([&](std::size_t b) { adj[a].push_back(b); });
  auto augment = [&](auto&& self, std::size_t a) -> bool {
    for (std::size_t b : adj[a]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (match_right[b] < 0 || self(self, static_cast<std::size_t>(match_right[b]))) {
        match_right[b] = static_cast<long>(a);
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    visited.assign(n, 0);
    if (augment(augment, a)) ++matching;
  }
  return n - matching;
}

bool is_central_edge(const PosetElement& e, std::size_t d) {
  if (e.kind != ElementKind::Edge) return false;
  const std::size_t upper = static_cast<std::size_t>(std::popcount(static_cast<unsigned>(e.j)));
  return upper == (d + 1) / 2 || upper == d / 2 + 1;
}

bool max_antichains_central(std::size_t d) {
  if (d > 6) throw CapExceeded("max_antichains_central: dimension above 6");
  const Poset p = oneil_poset(d);
  const std::size_t w = width(p);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (is_central_edge(p.element(x), d)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y != x && !p.comparable(x, y)) rest.push_back(y);
    }
    if (1 + width(p.restricted(rest)) == w) return false;
  }
  return true;
}

std::string to_dot(const SlicingPoset& sp) {
  const Poset& poset = sp.poset;
  std::ostringstream out;
  out << "digraph slicing_poset {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < poset.size(); ++a) {
    const auto& e = poset.element(a);
    out << "  n" << a << " [label=\"";
    if (e.kind == ElementKind::Vertex) {
      out << "v" << e.i << "\", shape=box];\n";
    } else {
      out << "v" << e.i << "-v" << e.j << "\", shape=ellipse];\n";
    }
  }
  // Vertex elements of equal level share a rank.
  std::map<Rational, std::vector<std::size_t>> by_level;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (poset.element(a).kind == ElementKind::Vertex) by_level[sp.vertex_level[poset.element(a).i]].push_back(a);
  }
  for (const auto& [lvl, ids] : by_level) {
    out << "  { rank=same;";
    for (auto a : ids) out << " n" << a << ";";
    out << " }  // level " << to_string(lvl) << "\n";
  }
  for (auto [a, b] : poset.covering()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace polyslice
