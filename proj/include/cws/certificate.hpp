#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cws/classical.hpp"
#include "cws/graph.hpp"
#include "cws/oracle.hpp"
#include "cws/search.hpp"

namespace cws {

inline constexpr const char* kToolVersion = "cws 1.0.0";

struct Provenance {
  std::uint64_t master_seed = 0;
  std::uint64_t attempts_used = 0;
  std::uint64_t disjointness_passes = 0;
  std::uint64_t max_attempts = 0;
  std::uint64_t node_budget = 0;
  std::string tool_version = kToolVersion;
};

/// Self-contained record of a code found on a graph. `oracle_check` is empty
/// when the graph is too large for the statevector oracle.
struct Certificate {
  Graph graph{1};
  Code code;
  std::uint64_t target_k = 0;
  bool classical_check = false;
  std::optional<bool> oracle_check;
  Provenance provenance;
};

/// Both verifiers run independently on the same (graph, code).
struct VerifyReport {
  DetectionVerdict classical;
  std::optional<KLReport> oracle;  // empty above kMaxOracleQubits
  /// Set by verify_certificate when the recorded verdicts are stale.
  std::optional<std::string> recorded_mismatch;

  bool pass() const { return classical.pass && oracle && oracle->pass && !recorded_mismatch; }
  std::string describe() const;
};

VerifyReport verify_code(const Graph& g, const Code& code, unsigned workers = 1);

/// Builds the certificate for a successful search, recomputing both checks.
Certificate make_certificate(const Graph& g, const SearchResult& result, const SearchConfig& config);

std::string to_json(const Certificate& cert);

/// Parses and validates a certificate: codeword count and lengths, distinct
/// codewords, leading all-zeros word. Throws InvalidInput or Parse.
Certificate parse_certificate(std::string_view json_text);

/// Re-verifies the certificate and compares against its recorded verdicts.
VerifyReport verify_certificate(const Certificate& cert, unsigned workers = 1);

/// One word per record (newline or whitespace separated), '#' comments.
Code parse_codewords(int n, std::string_view text);

}  // namespace cws
