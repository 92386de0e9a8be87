#include "polyslice/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "polyslice/enumerator.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/graph.hpp"
#include "polyslice/linalg.hpp"
#include "polyslice/posets.hpp"
#include "polyslice/theory.hpp"

namespace polyslice {

long Fuzzer::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

RVector Fuzzer::direction(std::size_t d, long range, double zero_rate) {
  std::bernoulli_distribution zero(zero_rate);
  while (true) {
    std::vector<long> c(d);
    for (auto& x : c) x = zero(rng_) ? 0 : integer(-range, range);
    RVector u = RVector::from_ints(c);
    if (!u.is_zero()) return u;
  }
}

RVector Fuzzer::positive_direction(std::size_t d, long range) {
  std::vector<long> c(d);
  for (auto& x : c) x = integer(1, range);
  return RVector::from_ints(c);
}

RVector Fuzzer::nonzero_direction(std::size_t d, long range) {
  std::vector<long> c(d);
  for (auto& x : c) x = integer(1, range) * (integer(0, 1) ? 1 : -1);
  return RVector::from_ints(c);
}

Hyperplane Fuzzer::hyperplane(const VPolytope& p, const RVector& u) {
  std::vector<Rational> levels = vertex_levels(p, u);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const long m = static_cast<long>(levels.size());
  switch (m > 1 ? integer(0, 2) : 0) {
    case 0:
      return Hyperplane{u, levels[integer(0, m - 1)]};
    case 1: {
      const long k = integer(0, m - 2);
      return Hyperplane{u, (levels[k] + levels[k + 1]) / 2};
    }
    default: {
      const long den = integer(1, 12);
      const Rational frac(integer(0, den), den);
      return Hyperplane{u, levels.front() + (levels.back() - levels.front()) * frac};
    }
  }
}

void PropertyTally::check(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (!ok) {
    if (failures == 0) first_failure = describe();
    ++failures;
  }
}

namespace {

std::string show(const Hyperplane& h) { return "u=" + h.u.to_string() + " t=" + to_string(h.t); }

std::string show(const CountSet& s) {
  std::string out = "{";
  for (long x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

CountSet minus(CountSet a, const CountSet& b) {
  for (long x : b) a.erase(x);
  return a;
}

CountSet hypercube_row(long d) {
  const GoldenRow row = golden_table(d);
  return minus(interval(row.nu), row.gaps);
}

Hyperplane midpoint_hyperplane(Fuzzer& f, const VPolytope& p, const RVector& u) {
  const SweepProfile prof = sweep(p, u);
  if (prof.levels.size() < 2) return Hyperplane{u, prof.levels.front()};
  return Hyperplane{u, prof.midpoint(f.integer(0, static_cast<long>(prof.levels.size()) - 2))};
}

int antipode(int v, std::size_t d) { return v ^ ((1 << d) - 1); }

}  // namespace

std::vector<VPolytope> fuzz_families() {
  return {hypercube(3),   hypercube(4),         hypercube(5),
          octahedron(),   icosahedron_rational(), cyclic(CyclicSpec::standard(3, 7)),
          cyclic(CyclicSpec::standard(4, 8)), stack_all_facets(tetrahedron()), simplex(3),
          cross_polytope(4), tetrahedron()};
}

PropertyTally check_parity(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"parity (even d, no vertex on H)"};
  while (t.cases < cases) {
    const std::size_t d = 2 * f.integer(1, 3);
    const VPolytope q = hypercube(d);
    const Hyperplane h = midpoint_hyperplane(f, q, f.direction(d, 7, 0.2));
    const SlicePartition part = classify(q, h);
    if (!part.on.empty()) continue;
    t.check(part.count() % 2 == 0, [&] { return "Q_" + std::to_string(d) + " " + show(h); });
  }
  return t;
}

PropertyTally check_zero_entry(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"zero-entry reduction"};
  while (t.cases < cases) {
    const std::size_t d = f.integer(2, 6);
    const std::size_t zeros = f.integer(1, std::min<long>(3, d - 1));
    std::vector<std::size_t> pos(d);
    for (std::size_t k = 0; k < d; ++k) pos[k] = k;
    std::shuffle(pos.begin(), pos.end(), f.engine());
    const RVector small = f.nonzero_direction(d - zeros, 7);
    RVector u(d);
    for (std::size_t k = 0; k < d - zeros; ++k) u[pos[zeros + k]] = small[k];
    RVector reduced(d - zeros);
    for (std::size_t k = 0, j = 0; k < d; ++k) {
      if (u[k] != 0) reduced[j++] = u[k];
    }
    const Hyperplane h = f.hyperplane(hypercube(d), u);
    const int full = cv(hypercube(d), h);
    const int part = cv(hypercube(d - zeros), Hyperplane{reduced, h.t});
    t.check(full == (1 << zeros) * part, [&] {
      return "Q_" + std::to_string(d) + " " + show(h) + ": " + std::to_string(full) + " vs 2^" +
             std::to_string(zeros) + "*" + std::to_string(part);
    });
  }
  return t;
}

PropertyTally check_doubling(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"doubling lift Q_d -> Q_{d+1}"};
  while (t.cases < cases) {
    const std::size_t d = f.integer(1, 5);
    const VPolytope q = hypercube(d);
    const Hyperplane h = f.hyperplane(q, f.direction(d, 7, 0.2));
    const int k = cv(q, h);
    // d affinely independent points spanning h, lifted into R^{d+1}
    // together with one of them raised off the base.
    const RVector x0 = h.u * (h.t / dot(h.u, h.u));
    std::vector<RVector> span{x0};
    for (const auto& b : nullspace({h.u}, d)) span.push_back(x0 + b);
    std::vector<RVector> lifted;
    for (const auto& p : span) {
      std::vector<Rational> c(p.begin(), p.end());
      c.emplace_back(0);
      lifted.emplace_back(std::move(c));
    }
    std::vector<Rational> raised(x0.begin(), x0.end());
    raised.emplace_back(f.integer(1, 5));
    lifted.emplace_back(std::move(raised));
    const Hyperplane lift = hyperplane_through(lifted, d + 1);
    const int doubled = cv(hypercube(d + 1), lift);
    t.check(doubled == 2 * k, [&] {
      return "Q_" + std::to_string(d) + " " + show(h) + ": lift " + show(lift) + " gives " + std::to_string(doubled);
    });
  }
  return t;
}

PropertyTally check_antipodal(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"antipodal vertices of the lighter side"};
  while (t.cases < cases) {
    const std::size_t d = f.integer(2, 7);
    const VPolytope q = hypercube(d);
    const Hyperplane h = f.hyperplane(q, f.direction(d, 7, 0.2));
    const SlicePartition part = classify(q, h);
    const bool below_lighter = part.below.size() <= part.above.size();
    const auto& light = below_lighter ? part.below : part.above;
    const auto& heavy = below_lighter ? part.above : part.below;
    bool ok = true;
    for (int v : light) ok = ok && std::binary_search(heavy.begin(), heavy.end(), antipode(v, d));
    t.check(ok, [&] { return "Q_" + std::to_string(d) + " " + show(h); });
  }
  return t;
}

PropertyTally check_lower_bound(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"cv >= 4d-9 with 4 vertices on each side"};
  while (t.cases < cases) {
    const std::size_t d = f.integer(4, 7);
    const VPolytope q = hypercube(d);
    const Hyperplane h = f.hyperplane(q, f.direction(d, 7, 0.2));
    const SlicePartition part = classify(q, h);
    if (part.below.size() < 4 || part.above.size() < 4) continue;
    t.check(part.count() >= 4 * static_cast<int>(d) - 9,
            [&] { return "Q_" + std::to_string(d) + " " + show(h) + " cv=" + std::to_string(part.count()); });
  }
  return t;
}

PropertyTally check_small_cuts(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"small cuts match the table of possible values"};
  while (t.cases < cases) {
    const std::size_t d = f.integer(4, 7);
    const VPolytope q = hypercube(d);
    const RVector u = f.direction(d, 7, 0.2);
    const SweepProfile prof = sweep(q, u);
    // Offsets near either end of the sweep leave few vertices on one side.
    const long m = static_cast<long>(prof.levels.size());
    const long k = f.integer(0, std::min<long>(4, m - 1));
    const long idx = f.integer(0, 1) ? k : m - 1 - k;
    Rational offset = prof.levels[idx];
    if (f.integer(0, 1) && idx + 1 < m) offset = prof.midpoint(idx);
    const Hyperplane h{u, offset};
    const SlicePartition part = classify(q, h);
    const long light = static_cast<long>(std::min(part.below.size(), part.above.size()));
    if (light > 4) continue;
    const CountSet allowed = small_cut_values(d, light);
    t.check(allowed.count(part.count()) > 0, [&] {
      return "Q_" + std::to_string(d) + " " + show(h) + " lighter side " + std::to_string(light) + " cv=" +
             std::to_string(part.count());
    });
  }
  return t;
}

PropertyTally check_connectivity(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"open sides induce connected subgraphs"};
  const auto fams = fuzz_families();
  while (t.cases < cases) {
    const VPolytope& p = fams[f.integer(0, static_cast<long>(fams.size()) - 1)];
    const Hyperplane h = f.hyperplane(p, f.direction(p.dim(), 6, 0.1));
    const SlicePartition part = classify(p, h);
    if (part.below.empty() || part.above.empty()) continue;
    t.check(induced_connected(p.neighbors(), part.below) && induced_connected(p.neighbors(), part.above),
            [&] { return p.name() + " " + show(h); });
  }
  return t;
}

PropertyTally check_nudge(Fuzzer& f, std::size_t cases) {
  PropertyTally t{"nudge off vertices keeps cv"};
  const auto fams = fuzz_families();
  while (t.cases < cases) {
    const VPolytope& p = fams[f.integer(0, static_cast<long>(fams.size()) - 1)];
    const RVector u = f.direction(p.dim(), 6, 0.1);
    const Hyperplane h = f.hyperplane(p, u);
    const int before = cv(p, h);
    const Hyperplane moved = nudge_off_vertices(p, h);
    const SlicePartition part = classify(p, moved);
    t.check(moved.u == h.u && part.on.empty() && part.meets() && part.count() >= before, [&] {
      return p.name() + " " + show(h) + " -> " + show(moved) + " cv " + std::to_string(before) + " -> " +
             std::to_string(part.count());
    });
  }
  return t;
}

PropertyTally check_slices_are_antichains(const VPolytope& p, Fuzzer& f, std::size_t directions) {
  PropertyTally t{"slices of " + p.name() + " are maximal antichains"};
  for (std::size_t n = 0; n < directions; ++n) {
    const RVector u = f.direction(p.dim(), 5, 0.15);
    const SlicingPoset sp = build_slicing_poset(p, u);
    const SweepProfile prof = sweep(p, u);
    std::vector<Rational> offsets = prof.levels;
    for (std::size_t k = 0; k + 1 < prof.levels.size(); ++k) offsets.push_back(prof.midpoint(k));
    for (const auto& off : offsets) {
      const auto elems = slice_elements(p, u, off);
      const auto idx = indices_of(sp.poset, elems);
      const bool ok = is_maximal_antichain(sp.poset, idx) && static_cast<int>(elems.size()) == cv(p, {u, off});
      t.check(ok, [&] { return show(Hyperplane{u, off}); });
    }
  }
  return t;
}

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " MISMATCH " << what << ";";
    }
  }
  void note(const std::string& what) { detail << " " << what << ";"; }
  void tally(const PropertyTally& t) {
    note(t.name + ": " + std::to_string(t.cases) + " cases, " + std::to_string(t.failures) + " failures");
    if (t.failures) require(false, t.name + " first failure " + t.first_failure);
  }
};

const char* kTitles[] = {
    "",
    "cyclic formula vs oracle",
    "cyclic C_4(10) by subset-normal sweep",
    "hypercube rows d<=4 by oracle",
    "hypercube row d=5 by grid sweep",
    "hypercube rows d=6,7",
    "slices are maximal antichains",
    "slicer and hypercube fuzz properties",
    "poset equivalence and width",
    "stacked-polytope gaps by oracle",
    "gap certificates and persistence",
    "Gale evenness",
};

void criterion1(Check& c, const AcceptanceOptions& o) {
  for (auto [d, n] : std::vector<std::pair<long, long>>{{3, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}}) {
    const VPolytope p = cyclic(CyclicSpec::standard(d, n));
    const OracleResult r = partition_oracle(p, {20, 4, o.jobs});
    const CountSet expect = cyclic_vss(d, n);
    const std::string tag = "C_" + std::to_string(d) + "(" + std::to_string(n) + ")";
    c.require(r.report.realized == expect, tag + " oracle " + show(r.report.realized) + " formula " + show(expect));
    c.require(failed_witnesses(p, r.report).empty(), tag + " witness replay");
    c.note(tag + " " + show(r.report.realized));
  }
}

void criterion2(Check& c, const AcceptanceOptions& o) {
  const VPolytope p = cyclic(CyclicSpec::standard(4, 10));
  const VSSReport r = vss_by_sweep(p, {}, {o.jobs});
  const CountSet expected{1, 2, 3, 4, 9, 12, 13, 14, 15, 16, 17, 18, 19, 21, 24, 25};
  c.require(r.realized == expected, "sweep " + show(r.realized));
  c.require(cyclic_vss(4, 10) == expected, "formula " + show(cyclic_vss(4, 10)));
  c.require(failed_witnesses(p, r).empty(), "witness replay");
  c.note("realized " + show(r.realized) + " via " + r.generator);
}

void criterion3(Check& c, const AcceptanceOptions& o) {
  for (long d = 2; d <= 4; ++d) {
    const VPolytope q = hypercube(d);
    const OracleResult r = partition_oracle(q, {20, 4, o.jobs});
    const GoldenRow row = golden_table(d);
    c.require(r.report.realized == hypercube_row(d) && r.report.nu == row.nu && r.report.gaps == row.gaps,
              "Q_" + std::to_string(d) + " nu=" + std::to_string(r.report.nu) + " gaps " + show(r.report.gaps));
    c.require(failed_witnesses(q, r.report).empty(), "Q_" + std::to_string(d) + " witness replay");
    if (d % 2 == 0) {
      for (const auto& [below, on, above, count] : r.census) {
        if (on == 0) c.require(count % 2 == 0, "odd count without on-vertices in Q_" + std::to_string(d));
      }
    }
    c.note("Q_" + std::to_string(d) + " nu=" + std::to_string(r.report.nu) + " gaps " + show(r.report.gaps) + " (" +
           std::to_string(r.sign_vectors) + " sign vectors)");
  }
}

void criterion4(Check& c, const AcceptanceOptions& o) {
  const VPolytope q = hypercube(5);
  DirectionGenerator g;
  g.kind = GeneratorKind::PositiveGrid;
  const VSSReport r = vss_by_sweep(q, g, {o.jobs});
  c.require(r.realized == hypercube_row(5), "sweep gaps " + show(r.gaps) + " nu=" + std::to_string(r.nu));
  c.require(hypercube_first_gaps(5) == golden_table(5).gaps, "first gaps " + show(hypercube_first_gaps(5)));
  c.require(failed_witnesses(q, r).empty(), "witness replay");
  c.note("nu=" + std::to_string(r.nu) + " gaps " + show(r.gaps) + " via " + r.generator);
}

void criterion5(Check& c, const AcceptanceOptions& o) {
  {
    const VPolytope q = hypercube(6);
    DirectionGenerator g;
    g.kind = GeneratorKind::PositiveGrid;
    const VSSReport r = vss_by_sweep(q, g, {o.jobs});
    c.require(r.realized == hypercube_row(6), "Q_6 sweep gaps " + show(r.gaps));
    c.require(failed_witnesses(q, r).empty(), "Q_6 witness replay");
    CountSet theory = hypercube_first_gaps(6);
    theory.insert(hypercube_penultimate_gap(6));
    c.require(theory == golden_table(6).gaps, "Q_6 theory gaps " + show(theory));
    c.note("Q_6 sweep nu=" + std::to_string(r.nu) + " unwitnessed " + show(r.gaps) + " via " + r.generator +
           "; theory gaps " + show(theory));
  }
  c.require(hypercube_width(7) == 140, "width(7) = " + std::to_string(hypercube_width(7)));
  c.require(hypercube_first_gaps(7) == golden_table(7).gaps, "Q_7 first gaps " + show(hypercube_first_gaps(7)));
  c.note("Q_7 width 140, first gaps " + show(hypercube_first_gaps(7)));
  if (o.full) {
    const VPolytope q = hypercube(7);
    DirectionGenerator g;
    g.kind = GeneratorKind::PositiveGrid;
    const VSSReport r = vss_by_sweep(q, g, {o.jobs});
    c.require(r.realized == hypercube_row(7), "Q_7 sweep gaps " + show(r.gaps));
    c.note("Q_7 sweep unwitnessed " + show(r.gaps) + " via " + r.generator);
  }
}

void criterion6(Check& c, const AcceptanceOptions& o) {
  Fuzzer f(o.seed + 6);
  const std::size_t dirs = o.full ? 1000 : 200;
  for (const auto& p : {hypercube(3), hypercube(4), octahedron(), icosahedron_rational(),
                        cyclic(CyclicSpec::standard(3, 7)), stack_all_facets(tetrahedron())}) {
    c.tally(check_slices_are_antichains(p, f, dirs));
  }
}

void criterion7(Check& c, const AcceptanceOptions& o) {
  Fuzzer f(o.seed + 7);
  const std::size_t n = o.full ? 5000 : 1000;
  c.tally(check_parity(f, n));
  c.tally(check_zero_entry(f, n));
  c.tally(check_doubling(f, n));
  c.tally(check_antipodal(f, n));
  c.tally(check_lower_bound(f, n));
  c.tally(check_connectivity(f, n));
  c.tally(check_nudge(f, n));
  c.tally(check_small_cuts(f, n));
}

void criterion8(Check& c, const AcceptanceOptions& o) {
  Fuzzer f(o.seed + 8);
  std::size_t positive = 0, mixed = 0;
  for (std::size_t d = 2; d <= 5; ++d) {
    const Poset ref = oneil_poset(d);
    for (int n = 0; n < 50; ++n) {
      const RVector u = f.positive_direction(d, 9);
      const auto res = poset_isomorphic(build_slicing_poset(hypercube(d), u).poset, ref, reflection_mask(u));
      c.require(res.isomorphic, "positive u=" + u.to_string() + ": " + res.diagnostic);
      ++positive;
    }
    for (int n = 0; n < 50; ++n) {
      RVector u = f.nonzero_direction(d, 9);
      if (reflection_mask(u) == 0) u[0] = -u[0];
      const auto res = poset_isomorphic(build_slicing_poset(hypercube(d), u).poset, ref, reflection_mask(u));
      c.require(res.isomorphic, "mixed u=" + u.to_string() + ": " + res.diagnostic);
      ++mixed;
    }
    const std::size_t w = width(ref);
    c.require(static_cast<long>(w) == hypercube_width(d), "width(oneil_poset(" + std::to_string(d) + ")) = " +
                                                               std::to_string(w));
    c.note("d=" + std::to_string(d) + " width " + std::to_string(w));
  }
  c.note(std::to_string(positive) + " positive and " + std::to_string(mixed) + " mixed directions");
}

void criterion9(Check& c, const AcceptanceOptions& o) {
  const std::vector<std::pair<VPolytope, long>> cases{
      {stack_all_facets(tetrahedron()), 4}, {stack_all_facets(cube3()), 5}, {stack_all_facets(octahedron()), 5}};
  for (const auto& [p, gap] : cases) {
    const OracleResult r = partition_oracle(p, {20, 4, o.jobs});
    c.require(r.report.realized.count(gap) == 0, std::to_string(gap) + " realized by " + p.name());
    c.require(failed_witnesses(p, r.report).empty(), p.name() + " witness replay");
    c.note(p.name() + " oracle gaps " + show(r.report.gaps));
  }
  const VPolytope si = stack_all_facets(icosahedron_rational());
  bool capped = false;
  try {
    partition_oracle(si, {20, 4, o.jobs});
  } catch (const CapExceeded&) {
    capped = true;
  }
  c.require(capped, "oracle did not refuse sigma(icosahedron)");
  const VSSReport r = vss_by_sweep(si, {}, {o.jobs});
  c.require(!r.exhaustive, "sigma(icosahedron) report claims exhaustiveness");
  c.require(failed_witnesses(si, r).empty(), "sigma(icosahedron) witness replay");
  c.note("sigma(icosahedron) beyond oracle caps; sweep report (not exhaustive) leaves " + show(r.gaps) +
         " unwitnessed");
}

void criterion10(Check& c, const AcceptanceOptions& o) {
  const GapCertificate cert = gap_certificate(icosahedron_rational(), 4, 5);
  c.require(cert.certified, "icosahedron certificate refused: " + cert.reason);
  c.note("icosahedron " + std::to_string(cert.connectivity) + "-connected, face sizes " +
         show(CountSet(cert.face_sizes.begin(), cert.face_sizes.end())));
  const VPolytope ss = stack_all_facets(stack_all_facets(tetrahedron()));
  const GapCertificate refused = gap_certificate(ss, 4, 5);
  c.require(!refused.certified, "sigma(sigma(T)) certified by connectivity");
  const OracleResult r = partition_oracle(ss, {20, 4, o.jobs});
  c.require(r.report.realized.count(4) == 0, "4 realized by sigma(sigma(T))");
  c.require(failed_witnesses(ss, r.report).empty(), "sigma(sigma(T)) witness replay");
  c.note("sigma(sigma(T)) " + std::to_string(ss.num_vertices()) + " vertices, connectivity route refused (" +
         refused.reason + "), oracle gaps " + show(r.report.gaps));
}

void criterion11(Check& c, const AcceptanceOptions& o) {
  for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 6}, {4, 7}, {4, 8}}) {
    const CyclicSpec spec = CyclicSpec::standard(d, n);
    std::vector<Facet> gale;
    std::vector<int> s(d);
    for (std::size_t k = 0; k < d; ++k) s[k] = static_cast<int>(k);
    while (true) {
      if (gale_facet_check(s, spec)) gale.push_back(s);
      int i = static_cast<int>(d) - 1;
      while (i >= 0 && s[i] == static_cast<int>(n - d) + i) --i;
      if (i < 0) break;
      ++s[i];
      for (std::size_t j = i + 1; j < d; ++j) s[j] = s[j - 1] + 1;
    }
    std::vector<RVector> pts;
    for (const auto& t : spec.params) pts.push_back(moment_point(t, d));
    auto lp = supporting_simplex_facets(pts, d);
    std::sort(lp.begin(), lp.end());
    const std::string tag = "C_" + std::to_string(d) + "(" + std::to_string(n) + ")";
    c.require(gale == lp, tag + " Gale " + std::to_string(gale.size()) + " facets, LP " + std::to_string(lp.size()));
    c.note(tag + " " + std::to_string(gale.size()) + " facets");
  }
  Fuzzer f(o.seed + 11);
  PropertyTally t{"Gale sign pattern"};
  while (t.cases < 100) {
    const std::size_t d = f.integer(2, 5);
    std::set<Rational> ps;
    while (ps.size() < d) ps.insert(Rational(f.integer(-20, 20), f.integer(1, 4)));
    const std::vector<Rational> params(ps.begin(), ps.end());
    Rational t0(f.integer(-30, 30), f.integer(1, 5));
    if (ps.count(t0)) continue;
    std::vector<RVector> pts;
    for (const auto& p : params) pts.push_back(moment_point(p, d));
    const Hyperplane h = hyperplane_through(pts, d);
    const int reference = h.side(moment_point(params.front() - 1, d));
    const int actual = h.side(moment_point(t0, d));
    t.check(actual == reference * gale_sign_pattern(params, t0), [&] { return "t=" + to_string(t0); });
  }
  c.tally(t);
}

}  // namespace

std::vector<int> acceptance_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}; }

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  CriterionResult res;
  res.id = id;
  if (id < 1 || id > 11) throw InputError("unknown acceptance criterion " + std::to_string(id));
  res.title = kTitles[id];
  if (opts.progress) *opts.progress << "running [" << id << "] " << res.title << "\n" << std::flush;
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    switch (id) {
      case 1: criterion1(c, opts); break;
      case 2: criterion2(c, opts); break;
      case 3: criterion3(c, opts); break;
      case 4: criterion4(c, opts); break;
      case 5: criterion5(c, opts); break;
      case 6: criterion6(c, opts); break;
      case 7: criterion7(c, opts); break;
      case 8: criterion8(c, opts); break;
      case 9: criterion9(c, opts); break;
      case 10: criterion10(c, opts); break;
      case 11: criterion11(c, opts); break;
    }
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.pass = c.pass;
  res.detail = c.detail.str();
  if (!res.detail.empty() && res.detail.front() == ' ') res.detail.erase(0, 1);
  return res;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f s", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail +
         " (" + secs + ")";
}

}  // namespace polyslice
