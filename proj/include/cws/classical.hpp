#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cws/bitlinalg.hpp"
#include "cws/graph.hpp"

namespace cws {

/// Largest K allowed for a distance-2 code on n qubits: 2^(n-2) for even n,
/// floor(2^(n-2) * (1 - 1/(n-1))) for odd n. Requires 2 <= n <= 60.
std::uint64_t rains_kmax(int n);

/// Ordered list of codewords of a common length. Duplicates are representable
/// so checkers can report them; see has_duplicates().
struct Code {
  int n = 0;
  std::vector<BitString> words;

  Code() = default;
  Code(int n, std::vector<BitString> words);

  std::size_t size() const { return words.size(); }
  bool has_duplicates() const;
  bool contains_zero() const;
};

/// Why two codewords cannot coexist: identical, or their difference is the
/// classical image of a single-qubit Pauli.
struct Conflict {
  enum class Kind { Equal, Pauli };
  Kind kind = Kind::Equal;
  PauliLabel label{PauliKind::Z, 0};

  std::string to_string() const;
};

std::optional<Conflict> conflict(const BitString& a, const BitString& b, const ErrorModel& em);

struct Violation {
  std::size_t first;   // index into Code::words
  std::size_t second;  // first < second
  Conflict reason;
};

struct DetectionVerdict {
  bool pass = true;
  std::optional<Violation> violation;  // set iff !pass
};

/// Pairwise classical distance-2 test. Pairs are scanned in lexicographic
/// index order, so the reported violation is the first such pair.
DetectionVerdict detects_distance2(const Code& code, const ErrorModel& em);

/// {0, Z_1 string, X_1 string, Y_1 string}: the XOR-closed set of images of
/// Paulis on qubit 1.
struct QubitOneSubspace {
  std::array<BitString, 4> elements;  // 0, 1_1, Gamma_1^0, Gamma_1^1
  int cardinality = 0;

  const BitString& z_offset() const { return elements[1]; }
  const BitString& x_offset() const { return elements[2]; }
  const BitString& y_offset() const { return elements[3]; }
};

QubitOneSubspace qubit1_subspace(const ErrorModel& em);

}  // namespace cws
