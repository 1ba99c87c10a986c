#include "cws/cws.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cws/certificate.hpp"
#include "cws/classical.hpp"
#include "cws/error.hpp"
#include "cws/graph.hpp"
#include "cws/search.hpp"

struct cws_graph {
  cws::Graph graph;
};

struct cws_code {
  cws::Code code;
};

struct cws_search_result {
  cws::Graph graph;
  cws::SearchConfig config;
  cws::SearchResult result;
};

struct cws_verify_report {
  cws::VerifyReport report;
  std::string description;
};

namespace {

thread_local std::string last_error;

cws_status fail(cws_status status, const std::string& message) {
  last_error = message;
  return status;
}

cws_status map_code(cws::ErrorCode code) {
  switch (code) {
    case cws::ErrorCode::InvalidInput: return CWS_ERR_INVALID_INPUT;
    case cws::ErrorCode::IsolatedVertex: return CWS_ERR_ISOLATED_VERTEX;
    case cws::ErrorCode::ResourceLimit: return CWS_ERR_RESOURCE_LIMIT;
    case cws::ErrorCode::Parse: return CWS_ERR_PARSE;
  }
  return CWS_ERR_INTERNAL;
}

template <class F>
cws_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CWS_OK;
  } catch (const cws::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CWS_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CWS_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define CWS_REQUIRE(ptr)                                                 \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(CWS_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

cws_status wrap_graph(cws::Graph g, cws_graph** out) {
  *out = new cws_graph{std::move(g)};
  return CWS_OK;
}

cws_verify_report* wrap_report(cws::VerifyReport r) {
  auto* out = new cws_verify_report{std::move(r), {}};
  out->description = out->report.describe();
  return out;
}

}  // namespace

extern "C" {

const char* cws_version(void) { return cws::kToolVersion; }

const char* cws_last_error(void) { return last_error.c_str(); }

const char* cws_status_name(cws_status status) {
  switch (status) {
    case CWS_OK: return "Ok";
    case CWS_ERR_INVALID_INPUT: return "InvalidInput";
    case CWS_ERR_ISOLATED_VERTEX: return "IsolatedVertex";
    case CWS_ERR_RESOURCE_LIMIT: return "ResourceLimit";
    case CWS_ERR_PARSE: return "ParseError";
    case CWS_ERR_NULL_ARGUMENT: return "NullArgument";
    case CWS_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void cws_string_free(char* s) { std::free(s); }

cws_status cws_rains_kmax(int n, uint64_t* out) {
  CWS_REQUIRE(out);
  return guarded([&] { *out = cws::rains_kmax(n); });
}

cws_status cws_graph_cycle(int n, cws_graph** out) {
  CWS_REQUIRE(out);
  return guarded([&] { wrap_graph(cws::make_cycle(n), out); });
}

cws_status cws_graph_random(int n, double edge_probability, uint64_t seed, cws_graph** out) {
  CWS_REQUIRE(out);
  return guarded([&] {
    std::mt19937_64 rng(seed);
    wrap_graph(cws::random_graph(n, edge_probability, rng), out);
  });
}

cws_status cws_graph_parse_edge_list(const char* text, cws_graph** out) {
  CWS_REQUIRE(text);
  CWS_REQUIRE(out);
  return guarded([&] { wrap_graph(cws::parse_edge_list(text), out); });
}

cws_status cws_graph_from_spec(const char* spec, uint64_t seed, cws_graph** out) {
  CWS_REQUIRE(spec);
  CWS_REQUIRE(out);
  return guarded([&] { wrap_graph(cws::graph_from_spec(spec, seed), out); });
}

void cws_graph_free(cws_graph* g) { delete g; }

int cws_graph_vertex_count(const cws_graph* g) { return g ? g->graph.size() : 0; }

size_t cws_graph_edge_count(const cws_graph* g) { return g ? g->graph.edges().size() : 0; }

cws_status cws_graph_to_edge_list(const cws_graph* g, char** out) {
  CWS_REQUIRE(g);
  CWS_REQUIRE(out);
  return guarded([&] { *out = dup_string(g->graph.to_edge_list()); });
}

cws_status cws_graph_neighbor_mask(const cws_graph* g, int k, char** out) {
  CWS_REQUIRE(g);
  CWS_REQUIRE(out);
  return guarded([&] { *out = dup_string(g->graph.neighbor_mask(k).to_string()); });
}

cws_status cws_code_parse(int n, const char* text, cws_code** out) {
  CWS_REQUIRE(text);
  CWS_REQUIRE(out);
  return guarded([&] { *out = new cws_code{cws::parse_codewords(n, text)}; });
}

void cws_code_free(cws_code* c) { delete c; }

size_t cws_code_size(const cws_code* c) { return c ? c->code.size() : 0; }

cws_status cws_code_word(const cws_code* c, size_t index, char* buf, size_t buf_len) {
  CWS_REQUIRE(c);
  CWS_REQUIRE(buf);
  if (index >= c->code.size()) return fail(CWS_ERR_INVALID_INPUT, "codeword index out of range");
  const std::string s = c->code.words[index].to_string();
  if (buf_len < s.size() + 1) return fail(CWS_ERR_INVALID_INPUT, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return CWS_OK;
}

void cws_search_config_init(cws_search_config* config) {
  if (config == nullptr) return;
  const cws::SearchConfig defaults;
  *config = cws_search_config{};
  config->master_seed = defaults.master_seed;
  config->max_attempts = defaults.max_attempts;
  config->workers = 1;
}

cws_status cws_search(const cws_graph* g, const cws_search_config* config,
                      cws_search_result** out) {
  CWS_REQUIRE(g);
  CWS_REQUIRE(config);
  CWS_REQUIRE(out);
  return guarded([&] {
    cws::SearchConfig cfg;
    cfg.master_seed = config->master_seed;
    cfg.max_attempts = config->max_attempts;
    if (config->target_k != 0) cfg.target_k = config->target_k;
    cfg.worker_count = config->workers;
    cfg.per_attempt_node_budget = config->node_budget;
    cfg.progress_interval = config->progress_interval;
    if (config->progress != nullptr) {
      cfg.progress = [fn = config->progress, user = config->progress_user_data](
                         const cws::SearchProgress& p) {
        fn(p.attempts_done, p.disjointness_passes, user);
      };
    }
    auto result = cws::search(g->graph, cfg);
    *out = new cws_search_result{g->graph, std::move(cfg), std::move(result)};
  });
}

void cws_search_result_free(cws_search_result* r) { delete r; }

int cws_search_found(const cws_search_result* r) { return r && r->result.found() ? 1 : 0; }

uint64_t cws_search_target_k(const cws_search_result* r) { return r ? r->result.target_k : 0; }

uint64_t cws_search_attempts_used(const cws_search_result* r) {
  return r ? r->result.attempts_used : 0;
}

uint64_t cws_search_disjointness_passes(const cws_search_result* r) {
  return r ? r->result.disjointness_passes : 0;
}

uint64_t cws_search_nodes_explored(const cws_search_result* r) {
  return r ? r->result.nodes_explored : 0;
}

double cws_search_elapsed_seconds(const cws_search_result* r) {
  return r ? r->result.elapsed_seconds : 0.0;
}

cws_status cws_search_code(const cws_search_result* r, cws_code** out) {
  CWS_REQUIRE(r);
  CWS_REQUIRE(out);
  if (!r->result.found()) return fail(CWS_ERR_INVALID_INPUT, "search did not find a code");
  return guarded([&] { *out = new cws_code{*r->result.code}; });
}

cws_status cws_search_certificate_json(const cws_search_result* r, char** out) {
  CWS_REQUIRE(r);
  CWS_REQUIRE(out);
  if (!r->result.found()) return fail(CWS_ERR_INVALID_INPUT, "search did not find a code");
  return guarded([&] {
    *out = dup_string(cws::to_json(cws::make_certificate(r->graph, r->result, r->config)));
  });
}

cws_status cws_verify_code(const cws_graph* g, const cws_code* c, cws_verify_report** out) {
  CWS_REQUIRE(g);
  CWS_REQUIRE(c);
  CWS_REQUIRE(out);
  return guarded([&] {
    if (c->code.has_duplicates()) cws::throw_invalid("duplicate codewords");
    *out = wrap_report(cws::verify_code(g->graph, c->code));
  });
}

cws_status cws_verify_certificate_json(const char* json, cws_verify_report** out) {
  CWS_REQUIRE(json);
  CWS_REQUIRE(out);
  return guarded([&] {
    *out = wrap_report(cws::verify_certificate(cws::parse_certificate(json)));
  });
}

void cws_verify_report_free(cws_verify_report* r) { delete r; }

int cws_verify_pass(const cws_verify_report* r) { return r && r->report.pass() ? 1 : 0; }

int cws_verify_classical_pass(const cws_verify_report* r) {
  return r && r->report.classical.pass ? 1 : 0;
}

int cws_verify_oracle_pass(const cws_verify_report* r) {
  if (r == nullptr || !r->report.oracle) return -1;
  return r->report.oracle->pass ? 1 : 0;
}

const char* cws_verify_describe(const cws_verify_report* r) {
  return r ? r->description.c_str() : "";
}

}  // extern "C"
