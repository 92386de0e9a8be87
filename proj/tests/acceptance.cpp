// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
//
//   acceptance [--full] [--jobs N] [--seed S] [ID...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "polyslice/acceptance.hpp"

using namespace polyslice;

int main(int argc, char** argv) {
  AcceptanceOptions opts;
  if (const char* env = std::getenv("POLYSLICE_JOBS")) opts.jobs = static_cast<unsigned>(std::stoul(env));
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--full") {
      opts.full = true;
    } else if (arg == "--jobs" && i + 1 < argc) {
      opts.jobs = static_cast<unsigned>(std::stoul(argv[++i]));
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else {
      ids.push_back(std::stoi(arg));
    }
  }
  if (ids.empty()) ids = acceptance_ids();
  if (opts.jobs == 0) opts.jobs = 1;

  bool ok = true;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opts);
    std::cout << format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
