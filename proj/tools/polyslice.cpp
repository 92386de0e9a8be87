// polyslice: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 usage error (including missing
// input files).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "polyslice/acceptance.hpp"
#include "polyslice/enumerator.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/io.hpp"
#include "polyslice/posets.hpp"
#include "polyslice/slicer.hpp"
#include "polyslice/theory.hpp"

using namespace polyslice;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

VPolytope load_polytope(const std::string& path) { return polytope_from_json(read_json_file(path)); }

RVector load_direction(const std::string& text, const VPolytope& p) {
  RVector u = parse_direction(text);
  if (u.dim() != p.dim()) {
    throw InputError("direction has " + std::to_string(u.dim()) + " coordinates, polytope dimension is " +
                     std::to_string(p.dim()));
  }
  return u;
}

std::string show(const CountSet& s) {
  std::string out = "{";
  for (long x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

VPolytope make_family(const std::string& name, std::optional<std::size_t> dim, std::optional<std::size_t> n) {
  auto need_dim = [&] {
    if (!dim) throw UsageError("--dim is required for " + name);
    return *dim;
  };
  if (name == "hypercube") return hypercube(need_dim());
  if (name == "cyclic") {
    if (!n) throw UsageError("--n is required for cyclic");
    return cyclic(CyclicSpec::standard(need_dim(), *n));
  }
  if (name == "simplex") return simplex(need_dim());
  if (name == "crosspolytope") return cross_polytope(need_dim());
  if (dim && *dim != 3) throw InputError(name + " exists in dimension 3 only");
  if (name == "tetrahedron") return tetrahedron();
  if (name == "cube") return cube3();
  if (name == "octahedron") return octahedron();
  return icosahedron_rational();
}

void print_table(long d) {
  const GoldenRow row = golden_table(d);
  std::cout << "d=" << d << "\n";
  std::cout << "  table    nu=" << row.nu << " gaps=" << show(row.gaps) << "\n";
  std::cout << "  formula  nu=" << hypercube_width(d);
  if (d >= 4) {
    CountSet derived = hypercube_first_gaps(d);
    std::cout << " first_gaps=" << show(derived) << " (below " << 4 * d - 9 << ")";
    if (d % 2 == 0 && d > 4) {
      derived.insert(hypercube_penultimate_gap(d));
      std::cout << " penultimate_gap=" << hypercube_penultimate_gap(d);
    }
    std::cout << "\n  agree    " << ((derived == row.gaps && hypercube_width(d) == row.nu) ? "yes" : "no");
  } else {
    std::cout << "\n  agree    " << (hypercube_width(d) == row.nu ? "yes" : "no");
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex counts of hyperplane slices of convex polytopes"};
  app.require_subcommand(1);

  unsigned jobs = 1;
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads (default from POLYSLICE_JOBS, else 1)")
        ->envname("POLYSLICE_JOBS")
        ->check(CLI::PositiveNumber);
  };

  // family
  std::string fam_name, out_path;
  std::optional<std::size_t> fam_dim, fam_n;
  std::size_t stack = 0;
  auto* family = app.add_subcommand("family", "generate a polytope as JSON");
  family->add_option("--name", fam_name, "family name")
      ->required()
      ->check(CLI::IsMember(
          {"hypercube", "cyclic", "simplex", "crosspolytope", "tetrahedron", "cube", "octahedron", "icosahedron"}));
  family->add_option("--dim", fam_dim, "dimension");
  family->add_option("--n", fam_n, "number of vertices (cyclic)");
  family->add_option("--stack", stack, "apply all-facets stacking K times (d=3)");
  family->add_option("--out", out_path, "output file (default stdout)");

  // shared polytope/direction options
  std::string poly_path, direction, offset, dot_path, report_path, csv_path;
  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("--polytope", poly_path, "polytope JSON")->required()->check(CLI::ExistingFile);
  };

  auto* cv_cmd = app.add_subcommand("cv", "classify vertices and count slice vertices");
  add_polytope(cv_cmd);
  cv_cmd->add_option("--direction", direction, "normal \"c1,c2,...\"")->required();
  cv_cmd->add_option("--offset", offset, "offset p/q")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "slice counts at every threshold of a direction");
  add_polytope(sweep_cmd);
  sweep_cmd->add_option("--direction", direction, "direction \"c1,c2,...\"")->required();

  auto* poset_cmd = app.add_subcommand("poset", "slicing poset as Graphviz DOT");
  add_polytope(poset_cmd);
  poset_cmd->add_option("--direction", direction, "direction \"c1,c2,...\"")->required();
  poset_cmd->add_option("--dot", dot_path, "output file (default stdout)");

  std::string generator = "subsets";
  long bound = 0;
  auto* vss_cmd = app.add_subcommand("vss", "vertex slice sequence report");
  add_polytope(vss_cmd);
  vss_cmd->add_option("--generator", generator, "direction source")
      ->check(CLI::IsMember({"subsets", "grid", "facets", "oracle"}));
  vss_cmd->add_option("--bound", bound, "grid bound (default: smallest stable bound)")->check(CLI::NonNegativeNumber);
  vss_cmd->add_option("--out", out_path, "report file (default stdout)");
  vss_cmd->add_option("--csv", csv_path, "also write witnesses as CSV");
  add_jobs(vss_cmd);

  auto* gaps_cmd = app.add_subcommand("gaps", "gaps of a report");
  gaps_cmd->add_option("--report", report_path, "report JSON")->required()->check(CLI::ExistingFile);

  std::size_t max_vertices = 20, max_dim = 4;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive sign-vector census");
  add_polytope(oracle_cmd);
  oracle_cmd->add_option("--max-vertices", max_vertices, "vertex cap");
  oracle_cmd->add_option("--max-dim", max_dim, "dimension cap");
  oracle_cmd->add_option("--out", out_path, "output file (default stdout)");
  add_jobs(oracle_cmd);

  long table_dim = 0;
  auto* table_cmd = app.add_subcommand("table", "hypercube table rows next to the closed forms");
  table_cmd->add_option("--dim", table_dim, "dimension 2..7 (default all)")->check(CLI::Range(2, 7));

  std::string suite;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("suite", suite, "fast or full")->required()->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--seed", seed, "fuzz seed");
  add_jobs(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*family) {
      VPolytope p = make_family(fam_name, fam_dim, fam_n);
      for (std::size_t k = 0; k < stack; ++k) p = stack_all_facets(p);
      emit(dump(to_json(p)), out_path);
    } else if (*cv_cmd) {
      const VPolytope p = load_polytope(poly_path);
      const Hyperplane h{load_direction(direction, p), parse_rational(offset)};
      const SlicePartition part = classify(p, h);
      if (!part.meets()) throw NoIntersectionError("hyperplane does not meet the polytope");
      emit(dump(to_json(part)), "");
    } else if (*sweep_cmd) {
      const VPolytope p = load_polytope(poly_path);
      emit(dump(to_json(sweep(p, load_direction(direction, p)))), "");
    } else if (*poset_cmd) {
      const VPolytope p = load_polytope(poly_path);
      emit(to_dot(build_slicing_poset(p, load_direction(direction, p))), dot_path);
    } else if (*vss_cmd) {
      const VPolytope p = load_polytope(poly_path);
      VSSReport r;
      if (generator == "oracle") {
        r = partition_oracle(p, {20, 4, jobs}).report;
      } else {
        DirectionGenerator g;
        g.kind = generator == "grid"     ? GeneratorKind::PositiveGrid
                 : generator == "facets" ? GeneratorKind::FacetNormals
                                         : GeneratorKind::SubsetNormals;
        g.bound = bound;
        r = vss_by_sweep(p, g, {jobs});
      }
      emit(dump(to_json(r)), out_path);
      if (!csv_path.empty()) write_text_file(csv_path, report_csv(r));
    } else if (*gaps_cmd) {
      const VSSReport r = report_from_json(read_json_file(report_path));
      const CountSet g = gaps(r);
      Json j;
      j["gaps"] = std::vector<long>(g.begin(), g.end());
      j["nu"] = r.nu;
      j["exhaustive"] = r.exhaustive;
      emit(dump(j), "");
    } else if (*oracle_cmd) {
      const VPolytope p = load_polytope(poly_path);
      const OracleResult res = partition_oracle(p, {max_vertices, max_dim, jobs});
      Json census = Json::array();
      for (const auto& [below, on, above, count] : res.census) census.push_back({below, on, above, count});
      Json j;
      j["report"] = to_json(res.report);
      j["census"] = census;
      j["sign_vectors"] = res.sign_vectors;
      emit(dump(j), out_path);
    } else if (*table_cmd) {
      if (table_dim) {
        print_table(table_dim);
      } else {
        for (long d = 2; d <= 7; ++d) print_table(d);
      }
    } else if (*verify_cmd) {
      AcceptanceOptions opts;
      opts.full = suite == "full";
      opts.jobs = jobs;
      opts.seed = seed;
      opts.progress = &std::cerr;
      bool ok = true;
      for (int id : acceptance_ids()) {
        const CriterionResult r = run_criterion(id, opts);
        std::cout << format_result(r) << "\n" << std::flush;
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "polyslice: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "polyslice: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "polyslice: malformed JSON: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
