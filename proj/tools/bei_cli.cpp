// bei_cli: batch verification of regularity bounds for binomial edge ideals.
//
//   bei_cli bounds --n 6 --field 2 --format csv
//   bei_cli conjecture --n 7 --field 32003 --jobs 8
//   bei_cli crosscheck --n 5
//   bei_cli betti 'Bw'
//   bei_cli paths 'C^'
//
// Exit status: 0 all checks passed, 1 violations found, 2 usage or guard error.

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bei/verifier.hpp"

namespace {

constexpr int kPassed = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct Flags {
  int n = 0;
  std::string input;
  std::uint32_t field = 2;
  int jobs = 1;
  std::string format = "json";
  std::string out = "-";
  std::string cache;
  long long budget_ms = 0;
  int relabel_sweep = 0;
  bool timing = false;
  bool mutant = false;
  bool exact = false;
  std::string graph6;
};

std::vector<bei::Graph> load_graphs(const Flags& f) {
  if (!f.input.empty()) return bei::read_graph6_file(f.input);
  if (f.n <= 0) throw CLI::ValidationError("--n", "either --n or --input is required");
  return bei::scan_order(bei::enumerate_graphs(f.n, false));
}

bei::VerifyOptions verify_options(const Flags& f, std::unique_ptr<bei::ResultCache>& cache) {
  bei::VerifyOptions opt;
  opt.field = f.field;
  opt.jobs = f.jobs;
  opt.timing = f.timing;
  opt.budget_ms = f.budget_ms;
  opt.relabel_sweep = f.relabel_sweep;
  if (!f.cache.empty()) {
    cache = std::make_unique<bei::ResultCache>(f.cache);
    opt.cache = cache.get();
  }
  return opt;
}

int cmd_bounds(const Flags& f) {
  std::unique_ptr<bei::ResultCache> cache;
  const auto records = bei::run_bounds(load_graphs(f), verify_options(f, cache));
  bei::emit_report(records, f.format, f.out);
  int violations = 0, errors = 0;
  for (const auto& r : records) {
    violations += r.violation();
    errors += r.status == bei::RecordStatus::error;
  }
  std::cerr << records.size() << " graphs, " << violations << " violations, " << errors << " errors\n";
  return violations ? kViolations : errors ? kUsage : kPassed;
}

int cmd_conjecture(const Flags& f) {
  if (f.n <= 0) throw CLI::ValidationError("--n", "--n is required");
  std::unique_ptr<bei::ResultCache> cache;
  std::optional<std::vector<bei::Graph>> source;
  if (!f.input.empty()) source = bei::read_graph6_file(f.input);
  const auto scan = bei::run_conjecture_scan(f.n, verify_options(f, cache), source);
  if (f.format == "csv") {
    bei::write_output(bei::records_csv(scan.records), f.out);
  } else if (f.format == "json") {
    bei::Json j = bei::records_json(scan.records);
    j["summary"] = bei::to_json(scan.summary);
    bei::write_output(j.dump(2) + "\n", f.out);
  } else {
    throw CLI::ValidationError("--format", "expected json or csv");
  }
  const auto& s = scan.summary;
  std::cerr << "n=" << s.n << " field=" << s.field << " total=" << s.total << " extremal=" << s.extremal.size()
            << " conjecture_ok=" << (s.conjecture_ok ? "true" : "false") << "\n";
  if (s.violations || !s.conjecture_ok) return kViolations;
  return s.errors ? kUsage : kPassed;
}

int cmd_crosscheck(const Flags& f) {
  bei::CrosscheckOptions opt;
  opt.field = f.field;
  opt.jobs = f.jobs;
  opt.mutant = f.mutant;
  const auto report = bei::run_crosschecks(f.n > 0 ? f.n : 4, opt);
  if (f.format == "csv") bei::write_output(bei::crosscheck_csv(report), f.out);
  else if (f.format == "json") bei::write_output(bei::to_json(report).dump(2) + "\n", f.out);
  else throw CLI::ValidationError("--format", "expected json or csv");
  for (const auto& s : report.suites)
    std::cerr << s.name << ": " << s.cases << " cases, " << s.failures << " failures\n";
  return report.passed() ? kPassed : kViolations;
}

int cmd_betti(const Flags& f) {
  const bei::Graph g = bei::parse_graph6(f.graph6);
  const bei::PrimeField field(f.field);
  const bei::MonomialIdeal init = bei::initial_ideal(g);
  std::string text;
  if (init.is_zero()) {
    text = "i=0 deg=1 dim=1\n# reg=undefined pd=0 depth=" + std::to_string(2 * g.n()) +
           " field=" + std::to_string(f.field) + "\n";
  } else {
    text = bei::dump_betti_table(bei::hochster_betti(init, field), 2 * g.n());
  }
  if (f.exact) {
    const auto exact = bei::koszul_betti(g, field);
    text += "# groebner basis\n" + bei::dump_groebner_basis(exact.groebner_basis, field);
    text += "# exact N^n-graded table of S/J_G\n";
    for (const auto& [key, v] : exact.table.entries())
      text += "i=" + std::to_string(key.first) + " deg=" + bei::to_string(key.second) + " dim=" + std::to_string(v) + "\n";
    const auto reg = exact.regularity();
    text += "# reg=" + (reg ? std::to_string(*reg) : std::string("inconclusive")) +
            " pd=" + std::to_string(bei::projective_dimension(exact.table)) +
            " depth=" + std::to_string(bei::depth_of_quotient(exact.table, 2 * g.n())) +
            " field=" + std::to_string(f.field) + "\n";
  }
  bei::write_output(text, f.out);
  return kPassed;
}

int cmd_paths(const Flags& f) {
  const bei::Graph g = bei::parse_graph6(f.graph6);
  const auto gens = bei::path_generators(g);
  const bei::MonomialIdeal init = bei::minimalize(g.n(), gens.monomials);
  std::string text;
  for (std::size_t k = 0; k < gens.paths.size(); ++k) {
    const auto& gen = init.generators();
    const bool minimal = std::find(gen.begin(), gen.end(), gens.monomials[k]) != gen.end();
    text += bei::to_string(gens.paths[k]) + " " + bei::to_string(gens.monomials[k]) + (minimal ? "" : " (redundant)") + "\n";
  }
  bei::write_output(text, f.out);
  return kPassed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity-bound verifier for binomial edge ideals"};
  app.require_subcommand(1);
  Flags flags;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", flags.field, "prime field characteristic")->check(CLI::PositiveNumber);
    sub->add_option("--format", flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", flags.out, "output path, '-' for stdout");
  };
  auto batch = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--n", flags.n, "number of vertices");
    sub->add_option("--input", flags.input, "graph6 file");
    sub->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--cache", flags.cache, "result cache directory");
    sub->add_option("--budget-ms", flags.budget_ms, "wall-clock budget for the batch");
    sub->add_option("--relabel-sweep", flags.relabel_sweep, "random relabellings per graph")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--timing", flags.timing, "record per-graph milliseconds");
  };

  auto* bounds = app.add_subcommand("bounds", "verify ell+1 <= reg(in J_G) <= n per graph");
  batch(bounds);
  auto* conjecture = app.add_subcommand("conjecture", "scan all graphs on n vertices for reg(in J_G) = n");
  batch(conjecture);
  auto* crosscheck = app.add_subcommand("crosscheck", "run the cross-check suites against the oracles");
  common(crosscheck);
  crosscheck->add_option("--n", flags.n, "largest number of vertices (<= 5)");
  crosscheck->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::Range(1, 1024));
  crosscheck->add_flag("--mutant", flags.mutant, "drop one admissible path (negative control)");
  auto* betti = app.add_subcommand("betti", "Betti table of S/in(J_G)");
  betti->add_option("graph6", flags.graph6, "graph in graph6")->required();
  betti->add_option("--field", flags.field, "prime field characteristic")->check(CLI::PositiveNumber);
  betti->add_option("--out", flags.out, "output path, '-' for stdout");
  betti->add_flag("--exact", flags.exact, "also print the Groebner basis and the exact table of S/J_G (n <= 5)");
  auto* paths = app.add_subcommand("paths", "admissible paths and their monomials");
  paths->add_option("graph6", flags.graph6, "graph in graph6")->required();
  paths->add_option("--out", flags.out, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPassed : kUsage;
  }

  try {
    if (!bei::PrimeField::is_prime(flags.field)) throw CLI::ValidationError("--field", "must be a prime");
    if (*bounds) return cmd_bounds(flags);
    if (*conjecture) return cmd_conjecture(flags);
    if (*crosscheck) return cmd_crosscheck(flags);
    if (*betti) return cmd_betti(flags);
    if (*paths) return cmd_paths(flags);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
