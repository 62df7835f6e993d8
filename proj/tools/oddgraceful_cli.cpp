// oddgraceful: generate, verify and search odd graceful labelings.
//
// Exit codes: 0 success / Found, 1 verification failure or invalid
// parameters, 2 ExhaustedNone, 3 BudgetExhausted, 64 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "oddgraceful/bench.hpp"
#include "oddgraceful/constructor.hpp"
#include "oddgraceful/graph_spec.hpp"
#include "oddgraceful/io.hpp"
#include "oddgraceful/search.hpp"
#include "oddgraceful/verifier.hpp"

namespace og = oddgraceful;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kExhaustedNone = 2;
constexpr int kBudgetExhausted = 3;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct GenerateArgs {
  std::string spec;
  std::string method = "closed";
  std::string format = "json";
  bool force = false;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  const auto [m, n] = og::union_parameters(og::parse_graph_spec(args.spec));
  const og::ConstructionParams params = args.force ? og::force_params(m, n) : og::validate_params(m, n);

  const og::GraphTopology topology = og::build_union_graph(m, n);
  const og::Labeling labeling = args.method == "closed" ? og::closed_form_labeling(params)
                                                        : og::algorithmic_labeling(params);
  const og::VerificationReport report = og::verify_odd_graceful(topology, labeling);
  if (!report.is_odd_graceful) std::cerr << og::report_to_text(report, topology);

  std::string text;
  if (args.format == "json") {
    text = og::to_json(topology, labeling);
  } else if (args.format == "dot") {
    text = og::to_dot(topology, labeling, "C" + std::to_string(m) + "+P" + std::to_string(n));
  } else {
    text = og::to_csv(topology, labeling);
  }
  write_output(text, args.out);
  return report.is_odd_graceful ? kOk : kFailed;
}

struct VerifyArgs {
  std::string input;
  std::string report = "text";
};

int run_verify(const VerifyArgs& args) {
  const og::LabeledGraph doc = og::parse_labeling_json(read_input(args.input));
  for (auto [index, stated] : doc.stated_label_mismatches) {
    const og::Edge& e = doc.topology.edges()[index];
    std::cerr << "note: edge " << og::to_string(e.first) << '-' << og::to_string(e.second)
              << " states label " << stated << ", recomputed from vertex labels\n";
  }
  const og::VerificationReport report = og::verify_odd_graceful(doc.topology, doc.labeling);
  std::cout << (args.report == "json" ? og::report_to_json(report, doc.topology)
                                      : og::report_to_text(report, doc.topology));
  return report.is_odd_graceful ? kOk : kFailed;
}

struct SearchArgs {
  std::string spec;
  std::string edges;
  std::uint64_t max_nodes = og::SearchBudget{}.max_nodes;
  std::uint64_t timeout_ms = 0;
  bool no_symmetry = false;
  std::string out;
};

int run_search(const SearchArgs& args) {
  if (args.spec.empty() == args.edges.empty()) throw UsageError("give exactly one of --spec or --edges");
  const og::GraphTopology topology =
      args.spec.empty() ? og::build_free_graph(og::read_edge_list_file(args.edges))
                        : og::spec_topology(og::parse_graph_spec(args.spec));

  og::SearchBudget budget;
  budget.max_nodes = args.max_nodes;
  if (args.timeout_ms > 0) budget.timeout_ms = args.timeout_ms;
  const og::SearchOutcome outcome = og::exhaustive_search(
      topology, budget, args.no_symmetry ? og::SymmetryBreaking::None : og::SymmetryBreaking::Complement);

  std::cout << "status: " << og::to_string(outcome.status) << '\n'
            << "q: " << topology.size() << '\n'
            << "nodes_expanded: " << outcome.stats.nodes_expanded << '\n'
            << "assignments_tried: " << outcome.stats.assignments_tried << '\n';
  if (outcome.labeling) {
    std::cout << "certificate:";
    for (og::VertexId v : topology.vertices())
      std::cout << ' ' << og::to_string(v) << '=' << *outcome.labeling->get(v);
    std::cout << '\n';
    if (!args.out.empty()) write_output(og::to_json(topology, *outcome.labeling), args.out);
  }
  switch (outcome.status) {
    case og::SearchStatus::Found: return kOk;
    case og::SearchStatus::ExhaustedNone: return kExhaustedNone;
    case og::SearchStatus::BudgetExhausted: return kBudgetExhausted;
  }
  return kFailed;
}

struct BenchArgs {
  std::vector<og::Label> q_list;
  int reps = og::BenchConfig{}.repetitions;
  int cycle_length = 8;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  og::BenchConfig config;
  if (!args.q_list.empty()) config.q_values = args.q_list;
  config.repetitions = args.reps;
  config.cycle_length = args.cycle_length;
  const og::BenchResult result = og::run_bench(config);
  write_output(og::bench_to_csv(result), args.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd graceful labelings of C_m + P_n: construct, verify, search, benchmark"};
  app.require_subcommand(1);

  GenerateArgs generate;
  auto* gen = app.add_subcommand("generate", "Construct a labeling of C<m>+P<n>");
  gen->add_option("--spec", generate.spec, "Graph spec, e.g. C8+P12")->required();
  gen->add_option("--method", generate.method, "Construction route")
      ->check(CLI::IsMember({"closed", "algorithmic"}));
  gen->add_option("--format", generate.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv"}));
  gen->add_flag("--force", generate.force, "Skip the path-length bound");
  gen->add_option("--out", generate.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* ver = app.add_subcommand("verify", "Check a JSON labeling document");
  ver->add_option("--input", verify.input, "Document path, or - for stdin")->required();
  ver->add_option("--report", verify.report, "Report format")->check(CLI::IsMember({"text", "json"}));

  SearchArgs search;
  auto* sea = app.add_subcommand("search", "Exhaustive search on a small graph");
  sea->add_option("--spec", search.spec, "Graph spec, e.g. C3 or C4+P3");
  sea->add_option("--edges", search.edges, "Edge-list file");
  sea->add_option("--max-nodes", search.max_nodes, "Backtrack node cap")->check(CLI::PositiveNumber);
  sea->add_option("--timeout-ms", search.timeout_ms, "Wall-clock cap in milliseconds");
  sea->add_flag("--no-symmetry", search.no_symmetry, "Disable complement symmetry breaking");
  sea->add_option("--out", search.out, "Write the certificate as a JSON document");

  BenchArgs bench;
  auto* ben = app.add_subcommand("bench", "Time construction against q and fit a log-log slope");
  ben->add_option("--q-list", bench.q_list, "Edge counts to time")->delimiter(',');
  ben->add_option("--reps", bench.reps, "Timed repetitions per q");
  ben->add_option("--m", bench.cycle_length, "Fixed cycle length");
  ben->add_option("--out", bench.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_generate(generate);
    if (*ver) return run_verify(verify);
    if (*sea) return run_search(search);
    if (*ben) return run_bench(bench);
  } catch (const og::ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const og::SpecError& e) {
    std::cerr << "error: bad graph spec: " << e.what() << '\n';
    return kUsage;
  } catch (const og::DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const og::MissingVertexLabel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const og::BenchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const og::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
