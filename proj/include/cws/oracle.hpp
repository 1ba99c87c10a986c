#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cws/bitlinalg.hpp"
#include "cws/classical.hpp"
#include "cws/graph.hpp"

namespace cws {

inline constexpr int kMaxOracleQubits = 12;

/// Complex number (re + i*im) / 2^log2_den with integer numerators.
struct ExactComplex {
  std::int64_t re = 0;
  std::int64_t im = 0;
  int log2_den = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;
  friend bool operator==(const ExactComplex& a, const ExactComplex& b);
};

/// Exact n-qubit state whose amplitudes are phase * sign(x) / 2^(n/2);
/// phase is i^phase_power, stored as 0 or 1.
class SignState {
 public:
  SignState(int n, std::vector<std::int8_t> signs, int phase_power = 0);

  int size() const { return n_; }
  int phase_power() const { return phase_; }
  std::int8_t sign(Word x) const { return signs_[x]; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  friend bool operator==(const SignState&, const SignState&) = default;

 private:
  int n_;
  std::vector<std::int8_t> signs_;
  int phase_;
};

/// Controlled-phase along every edge applied to |+>^n. Throws ResourceLimit
/// above kMaxOracleQubits.
SignState graph_state(const Graph& g);

SignState apply_z_string(const SignState& state, const BitString& b);

/// Single-qubit Pauli on qubit `label.qubit`; Y = i X Z.
SignState apply_pauli(const SignState& state, const PauliLabel& label);

/// <a|b>.
ExactComplex inner(const SignState& a, const SignState& b);

struct OperatorLabel {
  std::optional<PauliLabel> pauli;  // empty for the identity

  std::string to_string() const { return pauli ? pauli->to_string() : std::string("I"); }
};

struct KLViolation {
  OperatorLabel op;
  std::size_t row;     // codeword index L of <c_L|E|c_M>
  std::size_t column;  // codeword index M
  ExactComplex value;
};

struct KLReport {
  bool pass = true;
  std::vector<OperatorLabel> checked_errors;  // I, then X_k, Y_k, Z_k per qubit
  std::optional<KLViolation> violation;

  std::string describe() const;
};

/// Checks <c_L|E|c_M> = lambda_E * delta_LM for E in {I, X_k, Y_k, Z_k},
/// with |c_L> the Z-translates of the graph state by the codewords.
///
/// Each column E|c_M> is paired against every Z-translate at once with a
/// Walsh-Hadamard transform of g(x) * (E c_M)(x), so the cost per operator is
/// K * n * 2^n. The first violation is reported in (operator, column, row)
/// order regardless of `workers`.
KLReport kl_check(const Graph& g, const Code& code, unsigned workers = 1);

}  // namespace cws
