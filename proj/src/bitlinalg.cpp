#include "cws/bitlinalg.hpp"

#include <array>
#include <bit>

#include "cws/error.hpp"

namespace cws {

namespace {

void check_length(int n) {
  if (n < 1 || n > kMaxBits) {
    throw_invalid("bit string length must be in 1.." + std::to_string(kMaxBits) +
                  ", got " + std::to_string(n));
  }
}

// Pivot table indexed by leading bit; pivots[b] has highest set bit b or is 0.
struct Eliminator {
  std::array<Word, 32> pivots{};
  int rank = 0;

  bool insert(Word v) {
    while (v != 0) {
      const int top = std::bit_width(v) - 1;
      if (pivots[top] == 0) {
        pivots[top] = v;
        ++rank;
        return true;
      }
      v ^= pivots[top];
    }
    return false;
  }

  bool reduces_to_zero(Word v) const {
    while (v != 0) {
      const int top = std::bit_width(v) - 1;
      if (pivots[top] == 0) return false;
      v ^= pivots[top];
    }
    return true;
  }
};

}  // namespace

BitString::BitString(int n, Word word) : n_(n), word_(word) {
  check_length(n);
  if ((word & ~low_mask(n)) != 0) {
    throw_invalid("bits set beyond position " + std::to_string(n));
  }
}

BitString BitString::unit(int n, int k) {
  if (k < 1 || k > n) {
    throw_invalid("bit index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
  return BitString(n, Word{1} << (k - 1));
}

BitString BitString::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  check_length(n);
  Word w = 0;
  for (int i = 0; i < n; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      w |= Word{1} << i;
    } else if (c != '0') {
      throw Error(ErrorCode::Parse, "invalid bit string '" + std::string(text) + "'");
    }
  }
  return BitString(n, w);
}

int BitString::weight() const { return std::popcount(word_); }

std::string BitString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((word_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

BitString BitString::operator^(const BitString& other) const {
  BitString r = *this;
  r ^= other;
  return r;
}

BitString& BitString::operator^=(const BitString& other) {
  if (n_ != other.n_) {
    throw_invalid("length mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
  word_ ^= other.word_;
  return *this;
}

Basis::Basis(int n, std::vector<BitString> vectors) : n_(n), vectors_(std::move(vectors)) {
  check_length(n);
  for (const auto& v : vectors_) {
    if (v.size() != n) throw_invalid("basis vector length differs from basis length");
  }
  if (rank_gf2(vectors_) != dimension()) {
    throw_invalid("basis vectors are linearly dependent");
  }
}

int rank_gf2(std::span<const BitString> vectors) {
  if (vectors.empty()) return 0;
  const int n = vectors.front().size();
  Eliminator elim;
  for (const auto& v : vectors) {
    if (v.size() != n) throw_invalid("rank_gf2: mixed vector lengths");
    elim.insert(v.word());
  }
  return elim.rank;
}

Basis random_basis(int n, int k, std::mt19937_64& rng) {
  check_length(n);
  if (k < 0 || k > n) {
    throw_invalid("random_basis: dimension " + std::to_string(k) + " not in 0.." +
                  std::to_string(n));
  }
  const Word mask = low_mask(n);
  std::vector<BitString> draw(static_cast<std::size_t>(k));
  for (;;) {
    Eliminator elim;
    for (auto& v : draw) {
      v = BitString(n, static_cast<Word>(rng()) & mask);
      elim.insert(v.word());
    }
    if (elim.rank == k) return Basis(n, std::move(draw));
  }
}

std::vector<BitString> span(const Basis& basis) {
  const int k = basis.dimension();
  const auto& vs = basis.vectors();
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << k);
  out.push_back(BitString::zeros(basis.length()));
  // Element c is the XOR of vs[i] over the set bits i of c.
  for (int i = 0; i < k; ++i) {
    const std::size_t half = out.size();
    for (std::size_t j = 0; j < half; ++j) out.push_back(out[j] ^ vs[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool in_span(const Basis& basis, const BitString& v) {
  if (v.size() != basis.length()) throw_invalid("in_span: length mismatch");
  Eliminator elim;
  for (const auto& b : basis.vectors()) elim.insert(b.word());
  return elim.reduces_to_zero(v.word());
}

}  // namespace cws
