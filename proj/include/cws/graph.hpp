#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cws/bitlinalg.hpp"

namespace cws {

/// Simple undirected graph on vertices 1..n, stored as neighbor masks.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  bool adjacent(int i, int j) const;
  int degree(int k) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Row k of the adjacency matrix: bit j set iff (k, j) is an edge.
  BitString neighbor_mask(int k) const;

  /// Canonical edge-list text: "n=<n>" then one "i j" line per edge, i < j.
  std::string to_edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int k) const;
  void add_edge(int i, int j);

  int n_;
  std::vector<Word> rows_;
};

Graph make_cycle(int n);

/// Accepts newline- or ';'-separated records; '#' starts a comment.
Graph parse_edge_list(std::string_view text);

/// Each pair i < j, in lexicographic order, is kept with probability p.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

/// Resolves "cycle:<n>", "random:<n>,<p>" (seeded) or "edges:<path>".
Graph graph_from_spec(std::string_view spec, std::uint64_t seed);

enum class PauliKind : std::uint8_t { X, Y, Z };

char pauli_letter(PauliKind kind);

struct PauliLabel {
  PauliKind kind;
  int qubit;  // 1-indexed

  std::string to_string() const;
  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

struct LabeledError {
  PauliLabel label;
  BitString string;
};

/// Classical images of all single-qubit Paulis on a graph: Z_k flips bit k,
/// X_k flips the neighbors of k, Y_k flips both.
class ErrorModel {
 public:
  /// Throws IsolatedVertex when some vertex has no neighbors.
  explicit ErrorModel(const Graph& g);

  int size() const { return n_; }
  /// 3n entries ordered by qubit, then Z, X, Y.
  const std::vector<LabeledError>& entries() const { return entries_; }

  /// Index into entries() of the first entry whose string equals `word`,
  /// or -1 when the word is not an error string.
  int first_match(Word word) const { return lookup_[word]; }
  bool contains(Word word) const { return lookup_[word] >= 0; }

  /// Distinct error strings in entry order.
  const std::vector<Word>& distinct_strings() const { return distinct_; }

 private:
  int n_;
  std::vector<LabeledError> entries_;
  std::vector<Word> distinct_;
  std::vector<std::int16_t> lookup_;
};

}  // namespace cws
