// Command-line driver. Talks to the library only through the C API.
//
// Exit codes: 0 success / verified, 1 search exhausted or verification
// failed, 2 usage or input error.

#include <cws/cws.h>

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int report_error(cws_status status) {
  std::cerr << "error: " << cws_status_name(status) << ": " << cws_last_error() << "\n";
  return kExitUsage;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

struct Owned {
  char* s = nullptr;
  ~Owned() { cws_string_free(s); }
};

void print_progress(uint64_t attempts, uint64_t passes, void*) {
  std::cerr << "progress: attempts=" << attempts << " disjointness_passes=" << passes << "\n";
}

int cmd_bound(int n) {
  uint64_t k = 0;
  if (auto st = cws_rains_kmax(n, &k); st != CWS_OK) return report_error(st);
  std::cout << n << " " << k << "\n";
  return kExitOk;
}

struct SearchArgs {
  std::string graph;
  uint64_t target_k = 0;
  uint64_t seed = 1;
  uint64_t max_attempts = 100000;
  uint32_t workers = 1;
  uint64_t node_budget = 0;
  uint64_t progress = 0;
  std::string out;
};

void fill_config(const SearchArgs& a, cws_search_config& cfg) {
  cws_search_config_init(&cfg);
  cfg.master_seed = a.seed;
  cfg.max_attempts = a.max_attempts;
  cfg.target_k = a.target_k;
  cfg.workers = a.workers;
  cfg.node_budget = a.node_budget;
  cfg.progress_interval = a.progress;
  cfg.progress = a.progress != 0 ? print_progress : nullptr;
}

void print_stats(const cws_search_result* r) {
  std::cerr << (cws_search_found(r) ? "found" : "exhausted") << ": target_k="
            << cws_search_target_k(r) << " attempts_used=" << cws_search_attempts_used(r)
            << " disjointness_passes=" << cws_search_disjointness_passes(r)
            << " nodes=" << cws_search_nodes_explored(r)
            << " elapsed_s=" << cws_search_elapsed_seconds(r) << "\n";
}

int cmd_search(const SearchArgs& a) {
  cws_graph* g = nullptr;
  if (auto st = cws_graph_from_spec(a.graph.c_str(), a.seed, &g); st != CWS_OK) {
    return report_error(st);
  }
  cws_search_config cfg;
  fill_config(a, cfg);
  cws_search_result* r = nullptr;
  const cws_status st = cws_search(g, &cfg, &r);
  cws_graph_free(g);
  if (st != CWS_OK) return report_error(st);

  print_stats(r);
  int code = kExitFailed;
  if (cws_search_found(r)) {
    Owned json;
    if (auto cst = cws_search_certificate_json(r, &json.s); cst != CWS_OK) {
      code = report_error(cst);
    } else if (!write_output(a.out, json.s)) {
      std::cerr << "error: cannot write '" << a.out << "'\n";
      code = kExitUsage;
    } else {
      code = kExitOk;
    }
  }
  cws_search_result_free(r);
  return code;
}

int finish_verify(cws_status st, cws_verify_report* rep) {
  if (st != CWS_OK) return report_error(st);
  std::cout << cws_verify_describe(rep) << "\n";
  const int code = cws_verify_pass(rep) ? kExitOk : kExitFailed;
  std::cout << (code == kExitOk ? "verified" : "NOT verified") << "\n";
  cws_verify_report_free(rep);
  return code;
}

int cmd_verify_certificate(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  cws_verify_report* rep = nullptr;
  const cws_status st = cws_verify_certificate_json(text.c_str(), &rep);
  return finish_verify(st, rep);
}

int cmd_verify_codewords(const std::string& spec, uint64_t seed, const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  cws_graph* g = nullptr;
  if (auto st = cws_graph_from_spec(spec.c_str(), seed, &g); st != CWS_OK) return report_error(st);
  cws_code* c = nullptr;
  cws_status st = cws_code_parse(cws_graph_vertex_count(g), text.c_str(), &c);
  cws_verify_report* rep = nullptr;
  if (st == CWS_OK) st = cws_verify_code(g, c, &rep);
  cws_code_free(c);
  cws_graph_free(g);
  return finish_verify(st, rep);
}

int cmd_gen_graph(const std::string& spec, uint64_t seed, const std::string& out) {
  cws_graph* g = nullptr;
  if (auto st = cws_graph_from_spec(spec.c_str(), seed, &g); st != CWS_OK) return report_error(st);
  Owned text;
  const cws_status st = cws_graph_to_edge_list(g, &text.s);
  cws_graph_free(g);
  if (st != CWS_OK) return report_error(st);
  if (!write_output(out, text.s)) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct ExploreArgs {
  int n = 7;
  double p = 0.5;
  uint64_t graphs = 100;
  SearchArgs search;
};

// Tries random graphs seeded seed, seed+1, ... until one yields a code.
int cmd_explore(const ExploreArgs& a) {
  for (uint64_t i = 0; i < a.graphs; ++i) {
    const uint64_t graph_seed = a.search.seed + i;
    cws_graph* g = nullptr;
    if (auto st = cws_graph_random(a.n, a.p, graph_seed, &g); st != CWS_OK) {
      return report_error(st);
    }
    cws_search_config cfg;
    fill_config(a.search, cfg);
    cfg.master_seed = graph_seed;
    cws_search_result* r = nullptr;
    const cws_status st = cws_search(g, &cfg, &r);
    if (st == CWS_ERR_ISOLATED_VERTEX) {
      std::cerr << "graph seed " << graph_seed << ": isolated vertex, skipped\n";
      cws_graph_free(g);
      continue;
    }
    if (st != CWS_OK) {
      cws_graph_free(g);
      return report_error(st);
    }
    std::cerr << "graph seed " << graph_seed << " (" << cws_graph_edge_count(g) << " edges): ";
    print_stats(r);
    cws_graph_free(g);
    if (cws_search_found(r)) {
      Owned json;
      const cws_status cst = cws_search_certificate_json(r, &json.s);
      cws_search_result_free(r);
      if (cst != CWS_OK) return report_error(cst);
      return write_output(a.search.out, json.s) ? kExitOk : kExitUsage;
    }
    cws_search_result_free(r);
  }
  return kExitFailed;
}

void add_search_options(CLI::App* cmd, SearchArgs& a) {
  cmd->add_option("--target-k", a.target_k, "Codeword count to reach (default: bound for n)");
  cmd->add_option("--seed", a.seed, "Master seed")->capture_default_str();
  cmd->add_option("--max-attempts", a.max_attempts, "Attempt limit M")->capture_default_str();
  cmd->add_option("--workers", a.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  cmd->add_option("--node-budget", a.node_budget, "Backtracking nodes per attempt (0 = auto)");
  cmd->add_option("--progress", a.progress, "Report progress every N attempts on stderr");
  cmd->add_option("--out", a.out, "Certificate path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search and verification of distance-2 codeword-stabilized codes"};
  app.set_version_flag("--version", std::string(cws_version()));
  app.require_subcommand(1);

  int bound_n = 0;
  auto* bound = app.add_subcommand("bound", "Print n and the largest admissible K");
  bound->add_option("n", bound_n, "Qubit count")->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Randomized coset search for a code on a graph");
  search->add_option("--graph", search_args.graph, "cycle:<n> | edges:<path> | random:<n>,<p>")
      ->required();
  add_search_options(search, search_args);

  std::string cert_path;
  std::string verify_graph;
  std::string codewords_path;
  uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Check a certificate or a codeword file");
  auto* cert_opt = verify->add_option("certificate", cert_path, "Certificate JSON file");
  auto* graph_opt = verify->add_option("--graph", verify_graph, "Graph spec");
  auto* words_opt = verify->add_option("--codewords", codewords_path, "Codeword file");
  verify->add_option("--seed", verify_seed, "Seed for random:<n>,<p> graph specs");
  cert_opt->excludes(graph_opt)->excludes(words_opt);
  graph_opt->needs(words_opt);
  words_opt->needs(graph_opt);

  std::string gen_spec;
  uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-graph", "Write a graph as an edge list");
  gen->add_option("spec", gen_spec, "cycle:<n> | random:<n>,<p> | edges:<path>")->required();
  gen->add_option("--seed", gen_seed, "Seed for random graphs")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  ExploreArgs explore_args;
  explore_args.search.max_attempts = 2000;
  auto* explore = app.add_subcommand("explore", "Search over seeded random graphs");
  explore->add_option("--n", explore_args.n, "Vertex count")->required();
  explore->add_option("--p", explore_args.p, "Edge probability")->capture_default_str();
  explore->add_option("--graphs", explore_args.graphs, "Number of graphs to try")
      ->capture_default_str();
  add_search_options(explore, explore_args.search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*bound) return cmd_bound(bound_n);
  if (*search) return cmd_search(search_args);
  if (*verify) {
    if (!cert_path.empty()) return cmd_verify_certificate(cert_path);
    if (!verify_graph.empty()) return cmd_verify_codewords(verify_graph, verify_seed, codewords_path);
    std::cerr << "error: verify needs a certificate or --graph with --codewords\n";
    return kExitUsage;
  }
  if (*gen) return cmd_gen_graph(gen_spec, gen_seed, gen_out);
  if (*explore) return cmd_explore(explore_args);
  return kExitUsage;
}
