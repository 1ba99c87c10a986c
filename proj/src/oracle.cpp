#include "cws/oracle.hpp"

#include <bit>
#include <sstream>
#include <thread>

#include "cws/error.hpp"

namespace cws {

namespace {

std::int8_t parity_sign(Word w) { return (std::popcount(w) & 1) ? -1 : 1; }

void check_same_size(const SignState& s, int n, const char* what) {
  if (s.size() != n) throw_invalid(std::string(what) + ": qubit count mismatch");
}

// Multiplies (re + i im) by i^p.
void rotate(std::int64_t& re, std::int64_t& im, int p) {
  for (int t = 0; t < (p & 3); ++t) {
    const std::int64_t r = -im;
    im = re;
    re = r;
  }
}

void walsh_hadamard(std::vector<std::int64_t>& f) {
  const std::size_t size = f.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = f[j];
        const std::int64_t b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
}

struct OperatorOutcome {
  std::optional<KLViolation> violation;
};

OperatorOutcome check_operator(const SignState& base, const std::vector<SignState>& codewords,
                               const Code& code, const OperatorLabel& op) {
  const int n = base.size();
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t k = codewords.size();
  std::vector<std::int64_t> f(dim);
  std::optional<ExactComplex> lambda;

  for (std::size_t m = 0; m < k; ++m) {
    const SignState image = op.pauli ? apply_pauli(codewords[m], *op.pauli) : codewords[m];
    for (std::size_t x = 0; x < dim; ++x) {
      f[x] = static_cast<std::int64_t>(base.sign(static_cast<Word>(x))) *
             image.sign(static_cast<Word>(x));
    }
    walsh_hadamard(f);
    // Row L of column M is <G| Z^{b_L} |image> = i^phase * F(b_L) / 2^n.
    for (std::size_t l = 0; l < k; ++l) {
      ExactComplex value{f[code.words[l].word()], 0, n};
      rotate(value.re, value.im, image.phase_power() - codewords[l].phase_power());
      if (l != m) {
        if (!value.is_zero()) return {KLViolation{op, l, m, value}};
      } else if (!lambda) {
        lambda = value;
      } else if (!(value == *lambda)) {
        return {KLViolation{op, l, m, value}};
      }
    }
  }
  return {};
}

}  // namespace

bool operator==(const ExactComplex& a, const ExactComplex& b) {
  const int d = std::max(a.log2_den, b.log2_den);
  return (a.re << (d - a.log2_den)) == (b.re << (d - b.log2_den)) &&
         (a.im << (d - a.log2_den)) == (b.im << (d - b.log2_den));
}

std::string ExactComplex::to_string() const {
  std::ostringstream os;
  os << "(" << re << (im < 0 ? " - " : " + ") << (im < 0 ? -im : im) << "i)/2^" << log2_den;
  return os.str();
}

SignState::SignState(int n, std::vector<std::int8_t> signs, int phase_power)
    : n_(n), signs_(std::move(signs)), phase_(phase_power & 3) {
  if (n < 1 || n > kMaxBits) throw_invalid("SignState: bad qubit count");
  if (signs_.size() != (std::size_t{1} << n)) throw_invalid("SignState: sign table size mismatch");
  // Fold -1 into the signs so equal states compare equal.
  if (phase_ >= 2) {
    for (auto& s : signs_) s = static_cast<std::int8_t>(-s);
    phase_ -= 2;
  }
}

SignState graph_state(const Graph& g) {
  const int n = g.size();
  if (n > kMaxOracleQubits) {
    throw Error(ErrorCode::ResourceLimit, "graph_state supports at most " +
                                              std::to_string(kMaxOracleQubits) + " qubits");
  }
  std::vector<Word> rows;
  for (int k = 1; k <= n; ++k) rows.push_back(g.neighbor_mask(k).word());
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::int8_t> signs(dim);
  for (std::size_t xs = 0; xs < dim; ++xs) {
    const Word x = static_cast<Word>(xs);
    // Edges (i, j) with x_i = x_j = 1, each counted from both ends.
    int twice_edges = 0;
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1U) twice_edges += std::popcount(rows[static_cast<std::size_t>(i)] & x);
    }
    signs[xs] = ((twice_edges / 2) & 1) ? -1 : 1;
  }
  return SignState(n, std::move(signs));
}

SignState apply_z_string(const SignState& state, const BitString& b) {
  check_same_size(state, b.size(), "apply_z_string");
  std::vector<std::int8_t> signs = state.signs();
  for (std::size_t x = 0; x < signs.size(); ++x) {
    signs[x] = static_cast<std::int8_t>(signs[x] * parity_sign(b.word() & static_cast<Word>(x)));
  }
  return SignState(state.size(), std::move(signs), state.phase_power());
}

SignState apply_pauli(const SignState& state, const PauliLabel& label) {
  const int n = state.size();
  if (label.qubit < 1 || label.qubit > n) {
    throw_invalid("apply_pauli: qubit " + std::to_string(label.qubit) + " out of range");
  }
  const Word e = Word{1} << (label.qubit - 1);
  if (label.kind == PauliKind::Z) return apply_z_string(state, BitString(n, e));

  const auto& old = state.signs();
  std::vector<std::int8_t> signs(old.size());
  int phase = state.phase_power();
  for (std::size_t xs = 0; xs < old.size(); ++xs) {
    const Word src = static_cast<Word>(xs) ^ e;
    std::int8_t s = old[src];
    if (label.kind == PauliKind::Y && (src & e)) s = static_cast<std::int8_t>(-s);
    signs[xs] = s;
  }
  if (label.kind == PauliKind::Y) phase += 1;
  return SignState(n, std::move(signs), phase);
}

ExactComplex inner(const SignState& a, const SignState& b) {
  check_same_size(a, b.size(), "inner");
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < a.signs().size(); ++x) {
    sum += static_cast<std::int64_t>(a.signs()[x]) * b.signs()[x];
  }
  ExactComplex out{sum, 0, a.size()};
  rotate(out.re, out.im, b.phase_power() - a.phase_power());
  return out;
}

std::string KLReport::describe() const {
  if (pass) return "pass (" + std::to_string(checked_errors.size()) + " operators)";
  const auto& v = *violation;
  return "violation: <c_" + std::to_string(v.row) + "|" + v.op.to_string() + "|c_" +
         std::to_string(v.column) + "> = " + v.value.to_string();
}

KLReport kl_check(const Graph& g, const Code& code, unsigned workers) {
  if (code.n != g.size()) throw_invalid("kl_check: code and graph sizes differ");
  const SignState base = graph_state(g);

  KLReport report;
  report.checked_errors.push_back({std::nullopt});
  for (int k = 1; k <= g.size(); ++k) {
    for (PauliKind kind : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
      report.checked_errors.push_back({PauliLabel{kind, k}});
    }
  }

  std::vector<SignState> codewords;
  codewords.reserve(code.size());
  for (const auto& w : code.words) codewords.push_back(apply_z_string(base, w));

  const std::size_t ops = report.checked_errors.size();
  std::vector<OperatorOutcome> outcomes(ops);
  const unsigned pool = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(ops)));
  if (pool == 1) {
    for (std::size_t i = 0; i < ops; ++i) {
      outcomes[i] = check_operator(base, codewords, code, report.checked_errors[i]);
      if (outcomes[i].violation) break;
    }
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < pool; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = t; i < ops; i += pool) {
          outcomes[i] = check_operator(base, codewords, code, report.checked_errors[i]);
        }
      });
    }
  }
  for (auto& o : outcomes) {
    if (o.violation) {
      report.pass = false;
      report.violation = o.violation;
      break;
    }
  }
  return report;
}

}  // namespace cws
