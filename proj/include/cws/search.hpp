#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cws/bitlinalg.hpp"
#include "cws/classical.hpp"
#include "cws/graph.hpp"

namespace cws {

/// Seed for attempt `index` of a run seeded with `master_seed`. Attempt
/// streams are independent of scheduling and of each other.
std::uint64_t derive_attempt_seed(std::uint64_t master_seed, std::uint64_t index);

/// Translates s + V1 of the qubit-1 subspace by the elements s of a span.
struct CosetFamily {
  int n = 0;
  std::vector<BitString> base_span;  // base_span[0] is 0^n
  /// Member offsets in the order tried by the search:
  /// 0, Gamma_1^0, 1_1, Gamma_1^1.
  std::array<Word, 4> offsets{};

  std::size_t coset_count() const { return base_span.size(); }
  BitString member(std::size_t coset, int slot) const {
    return BitString(n, base_span[coset].word() ^ offsets[static_cast<std::size_t>(slot)]);
  }
};

/// Accepts the basis iff its span meets V1 only in 0, which is equivalent to
/// the cosets being pairwise disjoint.
std::optional<CosetFamily> build_cosets(const Basis& basis, const QubitOneSubspace& v1);

struct SelectionResult {
  std::optional<Code> code;
  std::uint64_t nodes = 0;
};

/// Picks one codeword from each of `target_k` cosets, 0^n from the first,
/// such that no pairwise difference is an error string.
///
/// With target_k equal to the coset count this is a depth-first search over
/// cosets in span order; members are tried in offset order and a branch is
/// cut as soon as the new member conflicts with a chosen one. With fewer
/// targets it becomes a branch-and-bound independent-set search in which a
/// coset may also be skipped. Each placement tried costs one node; the search
/// gives up once `node_budget` is spent.
SelectionResult select_representatives(const CosetFamily& family, const ErrorModel& em,
                                       std::size_t target_k, std::uint64_t node_budget);

struct AttemptResult {
  bool disjoint = false;
  std::optional<Code> code;
  std::uint64_t nodes = 0;
};

/// One pass of: random (n-2)-dimensional basis, coset construction, and
/// representative selection. Deterministic in the rng state.
AttemptResult attempt(const ErrorModel& em, const QubitOneSubspace& v1, std::mt19937_64& rng,
                      std::size_t target_k, std::uint64_t node_budget);

struct SearchProgress {
  std::uint64_t attempts_done;
  std::uint64_t disjointness_passes;
};

struct SearchConfig {
  std::uint64_t master_seed = 1;
  std::uint64_t max_attempts = 100000;
  std::optional<std::uint64_t> target_k;  // defaults to rains_kmax(n)
  unsigned worker_count = 1;
  /// 0 selects default_node_budget() for the target.
  std::uint64_t per_attempt_node_budget = 0;
  std::uint64_t progress_interval = 0;  // attempts between callbacks; 0 = off
  std::function<void(const SearchProgress&)> progress;
};

std::uint64_t default_node_budget(int n, std::uint64_t target_k);

struct SearchResult {
  std::optional<Code> code;  // set iff found
  std::uint64_t target_k = 0;
  std::uint64_t node_budget = 0;
  std::uint64_t attempts_used = 0;
  std::uint64_t disjointness_passes = 0;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0;

  bool found() const { return code.has_value(); }
};

/// Runs up to max_attempts attempts. The reported attempt is the lowest
/// successful index and every statistic except elapsed_seconds covers
/// attempts 0..that index, so the result does not depend on worker_count.
SearchResult search(const Graph& graph, const SearchConfig& config);

}  // namespace cws
