// Reproduction suite: one check per acceptance criterion, shared by the
// acceptance test binary and `polyslice verify`.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyslice/polytope.hpp"
#include "polyslice/slicer.hpp"

namespace polyslice {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool full = false;  // larger fuzz counts and the Q_7 sweep
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  std::ostream* progress = nullptr;
};

std::vector<int> acceptance_ids();
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
/// "PASS [id] title: detail (1.23 s)"
std::string format_result(const CriterionResult& r);

/// Random inputs for property checks.
class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// Nonzero integer vector with entries in [-range, range]; `zero_rate` is
  /// the chance of forcing an entry to zero.
  RVector direction(std::size_t d, long range, double zero_rate = 0.0);
  /// Entries in [1, range].
  RVector positive_direction(std::size_t d, long range);
  /// Nonzero entries of random sign in [-range, range].
  RVector nonzero_direction(std::size_t d, long range);
  /// A hyperplane with normal u meeting p: a vertex level, a midpoint
  /// between levels, or a random rational between the extreme levels.
  Hyperplane hyperplane(const VPolytope& p, const RVector& u);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct PropertyTally {
  explicit PropertyTally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe);
};

// The slicer and hypercube properties, each over `cases` fuzzed inputs.
PropertyTally check_parity(Fuzzer& f, std::size_t cases);
PropertyTally check_zero_entry(Fuzzer& f, std::size_t cases);
PropertyTally check_doubling(Fuzzer& f, std::size_t cases);
PropertyTally check_antipodal(Fuzzer& f, std::size_t cases);
PropertyTally check_lower_bound(Fuzzer& f, std::size_t cases);
PropertyTally check_connectivity(Fuzzer& f, std::size_t cases);
PropertyTally check_nudge(Fuzzer& f, std::size_t cases);
PropertyTally check_small_cuts(Fuzzer& f, std::size_t cases);
/// Slices are maximal antichains, for `directions` directions of p.
PropertyTally check_slices_are_antichains(const VPolytope& p, Fuzzer& f, std::size_t directions);

/// The polytopes fuzzed by the slicer properties.
std::vector<VPolytope> fuzz_families();

}  // namespace polyslice
