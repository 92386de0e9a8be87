#include "polyslice/slicer.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "polyslice/errors.hpp"

namespace polyslice {

SlicePartition classify(const VPolytope& p, const Hyperplane& h) {
  if (h.dim() != p.dim()) throw InputError("classify: hyperplane and polytope dimensions differ");
  SlicePartition part;
  std::vector<int> side(p.num_vertices());
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    side[i] = h.side(p.vertex(i));
    const int idx = static_cast<int>(i);
    if (side[i] < 0) {
      part.below.push_back(idx);
    } else if (side[i] == 0) {
      part.on.push_back(idx);
    } else {
      part.above.push_back(idx);
    }
  }
  for (auto e : p.edges()) {
    if (side[e.first] * side[e.second] < 0) part.crossed.push_back(e);
  }
  return part;
}

int cv(const VPolytope& p, const Hyperplane& h) {
  const SlicePartition part = classify(p, h);
  if (!part.meets()) throw NoIntersectionError("cv: hyperplane does not meet the polytope");
  return part.count();
}

std::vector<Rational> vertex_levels(const VPolytope& p, const RVector& u) {
  if (u.dim() != p.dim()) throw InputError("direction dimension does not match polytope");
  std::vector<Rational> out;
  out.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) out.push_back(dot(u, v));
  return out;
}

namespace {

// Distinct sorted values and the rank of each input value among them.
template <typename T>
std::vector<int> rank_values(const std::vector<T>& values, std::vector<T>& distinct) {
  distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ranks[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), values[i]) - distinct.begin());
  }
  return ranks;
}

// Integer dot products when every value provably fits in 62 bits.
bool integer_levels(const VPolytope& p, const RVector& u, std::vector<std::int64_t>& out) {
  if (!u.is_integral()) return false;
  const std::size_t d = p.dim();
  std::vector<std::int64_t> uu(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (!u[k].get_num().fits_slong_p()) return false;
    uu[k] = u[k].get_num().get_si();
    if (uu[k] > (1LL << 28) || uu[k] < -(1LL << 28)) return false;
  }
  out.assign(p.num_vertices(), 0);
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    const RVector& v = p.vertex(i);
    std::int64_t s = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (v[k].get_den() != 1 || !v[k].get_num().fits_slong_p()) return false;
      const std::int64_t c = v[k].get_num().get_si();
      if (c > (1LL << 28) || c < -(1LL << 28)) return false;
      s += uu[k] * c;
    }
    out[i] = s;
  }
  return true;
}

}  // namespace

SweepProfile sweep(const VPolytope& p, const RVector& u) {
  if (u.dim() != p.dim()) throw InputError("sweep: direction dimension does not match polytope");
  if (u.is_zero()) throw InputError("sweep: direction must be nonzero");
  SweepProfile prof;
  prof.direction = u;
  std::vector<int> ranks;
  std::vector<std::int64_t> ilev;
  if (p.dim() <= 16 && integer_levels(p, u, ilev)) {
    std::vector<std::int64_t> distinct;
    ranks = rank_values(ilev, distinct);
    for (auto x : distinct) prof.levels.emplace_back(static_cast<long>(x));
  } else {
    ranks = rank_values(vertex_levels(p, u), prof.levels);
  }
  const std::size_t m = prof.levels.size();
  // Difference arrays: an edge with ranks a < b crosses the open gaps a..b-1
  // and passes through the interior of levels a+1..b-1.
  std::vector<int> d_between(m + 1, 0), d_at(m + 1, 0);
  std::vector<int> at(m, 0);
  for (int r : ranks) ++at[r];
  for (auto [i, j] : p.edges()) {
    int a = ranks[i], b = ranks[j];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ++d_between[a];
    --d_between[b];
    ++d_at[a + 1];
    --d_at[b];
  }
  prof.at_level.resize(m);
  prof.between.resize(m ? m - 1 : 0);
  int run_at = 0, run_between = 0;
  for (std::size_t k = 0; k < m; ++k) {
    run_at += d_at[k];
    prof.at_level[k] = at[k] + run_at;
    if (k + 1 < m) {
      run_between += d_between[k];
      prof.between[k] = run_between;
    }
  }
#ifndef NDEBUG
  // cv is constant on each open interval between consecutive levels.
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const Rational gap = prof.levels[k + 1] - prof.levels[k];
    for (const Rational frac : {Rational(1, 3), Rational(2, 3)}) {
      const Hyperplane h{u, prof.levels[k] + gap * frac};
      if (cv(p, h) != prof.between[k]) throw Error("sweep: count not constant between levels");
    }
  }
#endif
  return prof;
}

Hyperplane nudge_off_vertices(const VPolytope& p, const Hyperplane& h) {
  const SlicePartition part = classify(p, h);
  if (!part.meets()) throw NoIntersectionError("nudge_off_vertices: hyperplane does not meet the polytope");
  if (part.on.empty()) return h;
  if (part.below.empty() && part.above.empty()) {
    throw DegenerateError("nudge_off_vertices: polytope lies in the hyperplane");
  }
  const bool go_up = part.above.size() >= part.below.size();
  std::optional<Rational> next;
  for (const auto& v : p.vertices()) {
    const Rational x = dot(h.u, v);
    if (go_up && x > h.t && (!next || x < *next)) next = x;
    if (!go_up && x < h.t && (!next || x > *next)) next = x;
  }
  return Hyperplane{h.u, (h.t + *next) / 2};
}

}  // namespace polyslice
