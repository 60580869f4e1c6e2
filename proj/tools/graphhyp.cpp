// Command-line front end: census runs, identity suites, and single-graph
// polynomial and point-count queries.
//
// Exit codes: 0 all checks pass (or polynomial verdict), 1 an inconsistency
// was found, 2 the run is incomplete or the arguments are invalid.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "graphhyp/census.hpp"
#include "graphhyp/count.hpp"
#include "graphhyp/edge_poly.hpp"
#include "graphhyp/verify.hpp"
#include "json.hpp"

namespace {

using namespace graphhyp;

constexpr int kExitPass = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitIncomplete = 2;

struct CensusArgs {
  std::uint32_t n = 3;
  std::vector<std::uint64_t> fit_qs;
  std::vector<std::uint64_t> holdout_qs;
  std::string engine = "auto";
  std::string out;
  bool shortcut = false;
  unsigned threads = 1;
  bool timing = false;
  std::string fault;
};

FaultInjection parse_fault(const std::string& text) {
  FaultInjection f;
  std::uint64_t mask = 0;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> mask >> c1 >> f.q >> c2 >> f.delta) || c1 != ':' || c2 != ':') {
    throw std::invalid_argument("--inject-fault expects MASK:Q:DELTA");
  }
  f.cut = EdgeSubset(mask);
  return f;
}

int run_census(const CensusArgs& args) {
  CensusOptions opt;
  opt.n = args.n;
  opt.fit_qs = args.fit_qs.empty() ? default_fit_qs(args.n) : args.fit_qs;
  opt.holdout_qs = args.holdout_qs.empty() && args.fit_qs.empty() ? default_holdout_qs(args.n) : args.holdout_qs;
  opt.engine = parse_engine(args.engine);
  opt.threads = args.threads;
  opt.use_multiplicity_shortcut = args.shortcut;
  opt.record_timing = args.timing;
  if (!args.out.empty()) opt.out_dir = args.out;
  if (!args.fault.empty()) opt.fault = parse_fault(args.fault);

  const CensusReport report = main_theorem_check(opt);
  std::cout << "n=" << report.n << " terms=" << report.records.size()
            << " classes=" << report.multiplicities.classes.size()
            << " multiplicities=" << (report.multiplicities.ok() ? "ok" : "MISMATCH") << '\n';
  for (const auto& [q, total] : report.totals) std::cout << "S_" << report.n << "(" << q << ") = " << total << '\n';
  if (report.resumed_cells > 0) std::cout << "resumed cells: " << report.resumed_cells << '\n';
  if (report.shortcut) {
    std::cout << "shortcut check at q=" << report.shortcut->q << ": " << report.shortcut->shortcut_total
              << (report.shortcut->holds() ? " == " : " != ") << report.shortcut->direct_total << '\n';
  }
  if (report.failed_cells > 0) std::cout << "failed cells: " << report.failed_cells << '\n';
  if (report.verdict) {
    if (report.verdict->fitted) {
      std::cout << "fitted class: " << report.verdict->fitted->to_string() << '\n';
      std::cout << "counts are consistent with this class on the tested fields" << '\n';
    }
    if (!report.verdict->reason.empty()) std::cout << "reason: " << report.verdict->reason << '\n';
  }
  std::cout << "verdict: " << census_status_name(report.status) << '\n';
  switch (report.status) {
    case CensusStatus::kPolynomial:
      return kExitPass;
    case CensusStatus::kInconsistent:
      return kExitInconsistent;
    case CensusStatus::kIncomplete:
      return kExitIncomplete;
  }
  return kExitIncomplete;
}

int run_verify(const std::string& suite, std::uint32_t n) {
  const SuiteResult r = run_verify_suite(suite, n);
  for (const CheckLine& c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << '\n';
  }
  std::cout << suite << " n=" << n << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
  return r.passed() ? kExitPass : kExitInconsistent;
}

int run_psi(const std::string& path, bool dual) {
  const Graph g = read_graph_file(path);
  std::cout << (dual ? psi_dual(g) : psi(g)).to_string() << '\n';
  return kExitPass;
}

int run_count(const std::string& path, bool dual, const std::vector<std::uint64_t>& qs, const std::string& engine,
              bool as_json, bool timing) {
  const Graph g = read_graph_file(path);
  const EdgePoly p = dual ? psi_dual(g) : psi(g);
  const Engine e = parse_engine(engine);
  nlohmann::ordered_json per_q = nlohmann::ordered_json::object();
  for (std::uint64_t q : qs) {
    const auto start = std::chrono::steady_clock::now();
    const CountResult r = count_projective(p, FiniteField::of_order(q), e);
    const auto millis = timing ? std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count()
                               : 0;
    if (as_json) {
      per_q[std::to_string(q)] = {{"affine", r.affine_zero_count},
                                  {"projective", r.projective_count},
                                  {"engine", engine_name(r.engine)},
                                  {"millis", millis}};
    } else {
      std::cout << "q=" << q << " affine=" << r.affine_zero_count << " projective=" << r.projective_count
                << " engine=" << engine_name(r.engine) << '\n';
    }
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["graph"] = path;
    j["polynomial"] = dual ? "psi_dual" : "psi";
    j["per_q"] = per_q;
    std::cout << j.dump(2) << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph hypersurface point counts and the complete-graph census"};
  app.require_subcommand(1);

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Count every term of S_n and test for a polynomial class");
  census_cmd->add_option("--n", census.n, "Number of vertices")->required()->check(CLI::Range(3, 6));
  census_cmd->add_option("--fit-q", census.fit_qs, "Field sizes used for fitting");
  census_cmd->add_option("--holdout-q", census.holdout_qs, "Field sizes held out for validation");
  census_cmd->add_option("--engine", census.engine, "brute, recursive or auto")
      ->check(CLI::IsMember({"brute", "recursive", "auto"}));
  census_cmd->add_option("--out", census.out, "Directory for records.jsonl, census.csv and report.json");
  census_cmd->add_flag("--use-multiplicity-shortcut", census.shortcut,
                       "Count one graph per isomorphism class and scale by its multiplicity");
  census_cmd->add_option("--threads", census.threads, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--timing", census.timing, "Record per-cell wall-clock milliseconds");
  census_cmd->add_option("--inject-fault", census.fault, "Perturb one count: MASK:Q:DELTA");

  std::string suite;
  std::uint32_t verify_n = 4;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite on K_n");
  verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify_suite_names()));
  verify_cmd->add_option("--n", verify_n, "Number of vertices")->check(CLI::Range(3, 6));

  std::string graph_path;
  bool dual = false;
  auto* psi_cmd = app.add_subcommand("psi", "Print the Kirchhoff polynomial of a graph file");
  psi_cmd->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  psi_cmd->add_flag("--dual", dual, "Print the dual polynomial instead");

  std::vector<std::uint64_t> count_qs;
  std::string count_engine = "auto";
  bool as_json = false;
  bool count_timing = false;
  auto* count_cmd = app.add_subcommand("count", "Count points of a graph hypersurface");
  count_cmd->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  count_cmd->add_flag("--dual", dual, "Count the dual hypersurface");
  count_cmd->add_option("--q", count_qs, "Field sizes")->required();
  count_cmd->add_option("--engine", count_engine, "brute, recursive or auto")
      ->check(CLI::IsMember({"brute", "recursive", "auto"}));
  count_cmd->add_flag("--json", as_json, "Emit JSON");
  count_cmd->add_flag("--timing", count_timing, "Record wall-clock milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitIncomplete;
  }

  try {
    if (census_cmd->parsed()) return run_census(census);
    if (verify_cmd->parsed()) return run_verify(suite, verify_n);
    if (psi_cmd->parsed()) return run_psi(graph_path, dual);
    if (count_cmd->parsed()) return run_count(graph_path, dual, count_qs, count_engine, as_json, count_timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIncomplete;
  }
  return kExitIncomplete;
}
