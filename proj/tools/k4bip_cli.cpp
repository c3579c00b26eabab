// k4bip: bipartization certificates and bound reports for K4-free graphs.
//
// Exit codes: 0 success, 1 a checked inequality or suite property failed,
// 2 bad input (usage, unreadable or malformed files, K4 in a K4-free-only
// command, capacity caps).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k4bip/k4bip.hpp"

namespace {

using k4bip::Graph;
using k4bip::InputError;
using k4bip::Json;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

Graph load_graph(const std::string& path) {
  if (path == "-") return k4bip::read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return k4bip::read_edge_list(in);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw InputError("'" + path + "' is not valid JSON: " + ex.what());
  }
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + " must be an integer, got '" + s + "'");
  }
}

double to_probability(const std::string& s) {
  try {
    std::size_t used = 0;
    double p = std::stod(s, &used);
    if (used != s.size() || !(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(s);
    return p;
  } catch (const std::exception&) {
    throw InputError("probability must be a number in [0,1], got '" + s + "'");
  }
}

void need_params(const std::vector<std::string>& params, std::size_t count, const std::string& usage) {
  if (params.size() != count) throw InputError("usage: generate " + usage);
}

struct GenerateArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string base;
  std::int64_t max_edges = -1;
};

Graph generate(const GenerateArgs& a) {
  const auto& p = a.params;
  if (a.family == "complete_multipartite") {
    if (p.empty()) throw InputError("usage: generate complete_multipartite <size>...");
    std::vector<int> parts;
    for (const auto& s : p) parts.push_back(to_int(s, "part size"));
    return k4bip::complete_multipartite(parts);
  }
  if (a.family == "blowup") {
    need_params(p, 1, "blowup <t> --base <edge-list>");
    if (a.base.empty()) throw InputError("blowup needs --base <edge-list>");
    return k4bip::blowup(load_graph(a.base), to_int(p[0], "t"));
  }
  if (a.family == "random_tripartite") {
    need_params(p, 2, "random_tripartite <n> <p> [--seed S]");
    return k4bip::random_tripartite(to_int(p[0], "n"), to_probability(p[1]), a.seed);
  }
  if (a.family == "random_k4free_process") {
    need_params(p, 1, "random_k4free_process <n> [--max-edges M] [--seed S]");
    std::optional<std::int64_t> cap;
    if (a.max_edges >= 0) cap = a.max_edges;
    return k4bip::random_k4free_process(to_int(p[0], "n"), a.seed, cap);
  }
  if (a.family == "random_gnp") {
    need_params(p, 2, "random_gnp <n> <p> [--seed S]");
    return k4bip::random_gnp(to_int(p[0], "n"), to_probability(p[1]), a.seed);
  }
  if (a.family == "random_regular") {
    need_params(p, 2, "random_regular <n> <d> [--seed S]");
    return k4bip::random_regular(to_int(p[0], "n"), to_int(p[1], "d"), a.seed);
  }
  if (a.family == "cycle") {
    need_params(p, 1, "cycle <n>");
    return k4bip::cycle_graph(to_int(p[0], "n"));
  }
  if (a.family == "complete") {
    need_params(p, 1, "complete <n>");
    return k4bip::complete_graph(to_int(p[0], "n"));
  }
  if (a.family == "petersen") {
    need_params(p, 0, "petersen");
    return k4bip::petersen_graph();
  }
  throw InputError("unknown family '" + a.family + "'");
}

void print_summary(std::ostream& out, const k4bip::BipartizeResult& r) {
  const auto& b = r.report;
  out << "n=" << b.n << " e=" << b.e << " triangles=" << b.m << '\n'
      << "method=" << k4bip::method_name(r.certificate.method) << " cut=" << b.cut_best
      << " deletions=" << b.deletions << " limit=n^2/9=" << k4bip::to_string(b.deletion_limit) << '\n';
}

void print_table(std::ostream& out, const k4bip::BipartizeResult& r) {
  const auto& b = r.report;
  auto opt = [](const auto& v) { return v ? k4bip::to_string(k4bip::Rational(*v)) : std::string("-"); };
  out << "quantity                     value\n"
      << "t = 6e/n^2                   " << k4bip::to_string(b.t) << '\n'
      << "proof branch                 " << b.proof_branch << '\n'
      << "4e^2/n^2 - 6m/n              " << k4bip::to_string(b.bound_neighborhood) << '\n'
      << "2e/7 + 8e^2/(7n^2)           " << k4bip::to_string(b.bound_k4free) << '\n'
      << "2(e - e(X))/3                " << opt(b.bound_4partite) << '\n'
      << "9m/e                         " << opt(b.bound_codegree) << '\n'
      << "codegree sum                 " << opt(b.codegree_sum) << '\n'
      << "cut: neighbourhood           " << b.cut_neighborhood << '\n'
      << "cut: K4-free refinement      " << b.cut_k4free << '\n'
      << "cut: triangle 4-partition    " << opt(b.cut_triangle_4partite) << '\n'
      << "f(t)                         " << opt(b.f_of_t) << '\n'
      << "g(t)                         " << opt(b.g_of_t) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartization certificates for K4-free graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --verbose follow the subcommand
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Human-readable tables on stderr");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a graph in edge-list format");
  generate_cmd->add_option("family", gen.family,
                           "complete_multipartite | blowup | random_tripartite | random_k4free_process | "
                           "random_gnp | random_regular | cycle | complete | petersen")
      ->required();
  generate_cmd->add_option("params", gen.params, "Family parameters");
  generate_cmd->add_option("--seed", gen.seed, "PRNG seed");
  generate_cmd->add_option("--base", gen.base, "Base graph for blowup");
  generate_cmd->add_option("--max-edges", gen.max_edges, "Edge cap for random_k4free_process");

  std::string input;
  bool as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Bipartize a K4-free graph and report every bound");
  analyze_cmd->add_option("--input", input, "Edge-list file ('-' for stdin)")->required();
  analyze_cmd->add_flag("--json", as_json, "Emit the bound report as JSON");

  int limit = k4bip::kDefaultOracleLimit;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact maximum cut by enumeration");
  oracle_cmd->add_option("--input", input, "Edge-list file ('-' for stdin)")->required();
  oracle_cmd->add_option("--limit", limit, "Vertex cap");

  k4bip::SuiteConfig suite;
  std::string suite_name;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded property suite");
  verify_cmd->add_option("--suite", suite_name,
                         "lemmas | theorem | oracle_equivalence | exhaustive | technical | regularity | regular_split")
      ->required();
  verify_cmd->add_option("--trials", suite.trials, "Random trials");
  verify_cmd->add_option("--seed", suite.seed, "Base seed");
  verify_cmd->add_option("--min-n", suite.min_n, "Smallest random instance");
  verify_cmd->add_option("--max-n", suite.max_n, "Largest random instance");
  verify_cmd->add_option("--oracle-max-n", suite.oracle_max_n, "Largest instance sent to the oracle");
  verify_cmd->add_option("--sweep-n", suite.sweep_n, "Order of the exhaustive sweep");

  std::string partition_path;
  std::string mode = "exact";
  k4bip::SamplingOptions sampling;
  auto* regularity_cmd = app.add_subcommand("regularity", "Bipartize through the reduced graph of a partition");
  regularity_cmd->add_option("--input", input, "Edge-list file ('-' for stdin)")->required();
  regularity_cmd->add_option("--partition", partition_path, "Partition JSON")->required();
  regularity_cmd->add_option("--mode", mode, "exact | sampled")->check(CLI::IsMember({"exact", "sampled"}));
  regularity_cmd->add_option("--samples", sampling.samples, "Subset pairs per class pair in sampled mode");
  regularity_cmd->add_option("--seed", sampling.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (generate_cmd->parsed()) {
      k4bip::write_edge_list(std::cout, generate(gen));
      return 0;
    }
    if (analyze_cmd->parsed()) {
      const Graph g = load_graph(input);
      const auto r = k4bip::bipartize(g);
      if (as_json)
        std::cout << k4bip::to_json(r).dump(2) << '\n';
      else
        print_summary(std::cout, r);
      if (verbose) print_table(std::cerr, r);
      return 0;
    }
    if (oracle_cmd->parsed()) {
      const Graph g = load_graph(input);
      std::cout << k4bip::to_json(k4bip::exact_max_cut(g, limit)).dump(2) << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto parsed = k4bip::parse_suite(suite_name);
      if (!parsed) throw InputError("unknown suite '" + suite_name + "'");
      suite.suite = *parsed;
      const Json report = k4bip::run_suite(suite);
      std::cout << report.dump(2) << '\n';
      if (verbose)
        for (const auto& p : report["properties"])
          std::cerr << (p["failures"].get<std::int64_t>() == 0 ? "PASS " : "FAIL ") << p["name"].get<std::string>()
                    << " (" << p["checked"] << " checks)\n";
      return report["passed"].get<bool>() ? 0 : kExitFailure;
    }
    if (regularity_cmd->parsed()) {
      const Graph g = load_graph(input);
      const auto partition = k4bip::partition_from_json(load_json(partition_path));
      const auto m = mode == "exact" ? k4bip::RegularityMode::exact : k4bip::RegularityMode::sampled;
      std::cout << k4bip::to_json(k4bip::hfree_bipartize(g, partition, m, sampling)).dump(2) << '\n';
      return 0;
    }
  } catch (const k4bip::TheoremViolation& ex) {
    std::cerr << "assertion failure: " << ex.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& ex) {
    // InputError, CapacityError, K4Error and I/O problems
    std::cerr << "error: " << ex.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
