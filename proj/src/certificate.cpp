#include "cws/certificate.hpp"

#include <json.hpp>

#include "cws/error.hpp"

namespace cws {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void invariant(const std::string& msg) {
  throw_invalid("certificate invariant violated: " + msg);
}

}  // namespace

std::string VerifyReport::describe() const {
  std::string out = "classical: ";
  if (classical.pass) {
    out += "pass";
  } else {
    const auto& v = *classical.violation;
    out += "violation: codewords (" + std::to_string(v.first) + ", " + std::to_string(v.second) +
           ") conflict via " + v.reason.to_string();
  }
  out += "\noracle: ";
  out += oracle ? oracle->describe()
                : "unavailable (more than " + std::to_string(kMaxOracleQubits) + " qubits)";
  if (recorded_mismatch) out += "\ncertificate: " + *recorded_mismatch;
  return out;
}

VerifyReport verify_code(const Graph& g, const Code& code, unsigned workers) {
  if (code.n != g.size()) throw_invalid("codeword length differs from graph size");
  VerifyReport report;
  report.classical = detects_distance2(code, ErrorModel(g));
  if (g.size() <= kMaxOracleQubits) report.oracle = kl_check(g, code, workers);
  return report;
}

Certificate make_certificate(const Graph& g, const SearchResult& result,
                             const SearchConfig& config) {
  if (!result.code) throw_invalid("make_certificate: search did not find a code");
  Certificate cert;
  cert.graph = g;
  cert.code = *result.code;
  cert.target_k = result.target_k;
  const VerifyReport report = verify_code(g, cert.code, config.worker_count);
  cert.classical_check = report.classical.pass;
  if (report.oracle) cert.oracle_check = report.oracle->pass;
  cert.provenance.master_seed = config.master_seed;
  cert.provenance.attempts_used = result.attempts_used;
  cert.provenance.disjointness_passes = result.disjointness_passes;
  cert.provenance.max_attempts = config.max_attempts;
  cert.provenance.node_budget = result.node_budget;
  return cert;
}

std::string to_json(const Certificate& cert) {
  json edges = json::array();
  for (auto [i, j] : cert.graph.edges()) edges.push_back({i, j});
  const json graph = {{"n", cert.graph.size()}, {"edges", edges}};
  const json checks = {{"classical", cert.classical_check},
                       {"oracle", cert.oracle_check ? json(*cert.oracle_check) : json(nullptr)}};
  const json provenance = {{"master_seed", cert.provenance.master_seed},
                           {"attempts_used", cert.provenance.attempts_used},
                           {"disjointness_passes", cert.provenance.disjointness_passes},
                           {"max_attempts", cert.provenance.max_attempts},
                           {"node_budget", cert.provenance.node_budget},
                           {"tool_version", cert.provenance.tool_version}};

  // One top-level field per line and one codeword per line keeps large
  // certificates diffable.
  std::string out = "{\n";
  out += "  \"format\": \"cws-certificate\",\n";
  out += "  \"n\": " + std::to_string(cert.graph.size()) + ",\n";
  out += "  \"graph\": " + graph.dump() + ",\n";
  out += "  \"K\": " + std::to_string(cert.code.size()) + ",\n";
  out += "  \"target_k\": " + std::to_string(cert.target_k) + ",\n";
  out += "  \"codewords\": [";
  for (std::size_t i = 0; i < cert.code.size(); ++i) {
    out += (i == 0 ? "\n    \"" : ",\n    \"") + cert.code.words[i].to_string() + "\"";
  }
  out += cert.code.size() == 0 ? "],\n" : "\n  ],\n";
  out += "  \"checks\": " + checks.dump() + ",\n";
  out += "  \"provenance\": " + provenance.dump() + "\n";
  out += "}\n";
  return out;
}

Certificate parse_certificate(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    Certificate cert;
    const int n = doc.at("n").get<int>();
    const json& graph = doc.at("graph");
    if (graph.at("n").get<int>() != n) invariant("graph.n differs from n");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : graph.at("edges")) {
      if (!e.is_array() || e.size() != 2) invariant("edges must be [i, j] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    cert.graph = Graph::from_edges(n, edges);

    std::vector<BitString> words;
    for (const auto& w : doc.at("codewords")) {
      const auto s = w.get<std::string>();
      if (static_cast<int>(s.size()) != n) invariant("codeword '" + s + "' does not have n bits");
      words.push_back(BitString::parse(s));
    }
    cert.code = Code(n, std::move(words));
    if (doc.at("K").get<std::uint64_t>() != cert.code.size()) {
      invariant("K does not match the number of codewords");
    }
    if (cert.code.size() == 0) invariant("no codewords");
    if (!cert.code.words.front().is_zero()) invariant("first codeword must be all zeros");
    if (cert.code.has_duplicates()) invariant("duplicate codewords");

    cert.target_k = doc.at("target_k").get<std::uint64_t>();
    const json& checks = doc.at("checks");
    cert.classical_check = checks.at("classical").get<bool>();
    if (!checks.at("oracle").is_null()) cert.oracle_check = checks.at("oracle").get<bool>();

    const json& prov = doc.at("provenance");
    cert.provenance.master_seed = prov.at("master_seed").get<std::uint64_t>();
    cert.provenance.attempts_used = prov.at("attempts_used").get<std::uint64_t>();
    cert.provenance.disjointness_passes = prov.at("disjointness_passes").get<std::uint64_t>();
    cert.provenance.max_attempts = prov.value("max_attempts", std::uint64_t{0});
    cert.provenance.node_budget = prov.value("node_budget", std::uint64_t{0});
    cert.provenance.tool_version = prov.at("tool_version").get<std::string>();
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed certificate: ") + e.what());
  }
}

VerifyReport verify_certificate(const Certificate& cert, unsigned workers) {
  VerifyReport report = verify_code(cert.graph, cert.code, workers);
  const std::optional<bool> oracle =
      report.oracle ? std::optional<bool>(report.oracle->pass) : std::nullopt;
  if (report.classical.pass != cert.classical_check) {
    report.recorded_mismatch = "recorded classical check disagrees with recomputation";
  } else if (oracle != cert.oracle_check) {
    report.recorded_mismatch = "recorded oracle check disagrees with recomputation";
  }
  return report;
}

Code parse_codewords(int n, std::string_view text) {
  std::vector<BitString> words;
  std::string token;
  bool comment = false;
  auto flush = [&] {
    if (token.empty()) return;
    if (static_cast<int>(token.size()) != n) {
      throw_invalid("codeword '" + token + "' does not have " + std::to_string(n) + " bits");
    }
    words.push_back(BitString::parse(token));
    token.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      flush();
    } else if (comment) {
      continue;
    } else if (c == '#') {
      flush();
      comment = true;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Code(n, std::move(words));
}

}  // namespace cws
