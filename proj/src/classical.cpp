#include "cws/classical.hpp"

#include <algorithm>
#include <unordered_set>

#include "cws/error.hpp"

namespace cws {

std::uint64_t rains_kmax(int n) {
  if (n < 2 || n > 60) throw_invalid("rains_kmax: n must be in 2..60, got " + std::to_string(n));
  const std::uint64_t base = std::uint64_t{1} << (n - 2);
  if (n % 2 == 0) return base;
  const auto u = static_cast<std::uint64_t>(n);
  return base / (u - 1) * (u - 2) + (base % (u - 1)) * (u - 2) / (u - 1);
}

Code::Code(int n_, std::vector<BitString> words_) : n(n_), words(std::move(words_)) {
  for (const auto& w : words) {
    if (w.size() != n) {
      throw_invalid("codeword '" + w.to_string() + "' has length " + std::to_string(w.size()) +
                    ", expected " + std::to_string(n));
    }
  }
}

bool Code::has_duplicates() const {
  std::unordered_set<Word> seen;
  for (const auto& w : words) {
    if (!seen.insert(w.word()).second) return true;
  }
  return false;
}

bool Code::contains_zero() const {
  return std::any_of(words.begin(), words.end(), [](const BitString& w) { return w.is_zero(); });
}

std::string Conflict::to_string() const {
  return kind == Kind::Equal ? std::string("Equal") : label.to_string();
}

std::optional<Conflict> conflict(const BitString& a, const BitString& b, const ErrorModel& em) {
  if (a.size() != b.size() || a.size() != em.size()) {
    throw_invalid("conflict: length mismatch");
  }
  const Word diff = a.word() ^ b.word();
  if (diff == 0) return Conflict{Conflict::Kind::Equal, {PauliKind::Z, 0}};
  const int idx = em.first_match(diff);
  if (idx < 0) return std::nullopt;
  return Conflict{Conflict::Kind::Pauli, em.entries()[static_cast<std::size_t>(idx)].label};
}

DetectionVerdict detects_distance2(const Code& code, const ErrorModel& em) {
  if (code.n != em.size()) throw_invalid("detects_distance2: code and error model lengths differ");
  const auto& w = code.words;
  for (std::size_t l = 0; l < w.size(); ++l) {
    for (std::size_t m = l + 1; m < w.size(); ++m) {
      if (auto c = conflict(w[l], w[m], em)) return {false, Violation{l, m, *c}};
    }
  }
  return {true, std::nullopt};
}

QubitOneSubspace qubit1_subspace(const ErrorModel& em) {
  QubitOneSubspace v1;
  const auto& e = em.entries();
  v1.elements = {BitString::zeros(em.size()), e[0].string, e[1].string, e[2].string};
  std::unordered_set<Word> distinct;
  for (const auto& s : v1.elements) distinct.insert(s.word());
  v1.cardinality = static_cast<int>(distinct.size());
  return v1;
}

}  // namespace cws
