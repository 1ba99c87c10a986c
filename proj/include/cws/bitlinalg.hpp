#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cws {

inline constexpr int kMaxBits = 16;

using Word = std::uint32_t;

/// Fixed-width bit vector over F2 with n <= 16.
///
/// Qubit/vertex k (1-indexed) lives in word bit k-1. The textual form puts
/// bit 1 leftmost, so "10100" has qubits 1 and 3 set.
class BitString {
 public:
  BitString() = default;
  BitString(int n, Word word);

  static BitString zeros(int n) { return BitString(n, 0); }
  /// The string with only bit `k` set (1-indexed).
  static BitString unit(int n, int k);
  static BitString parse(std::string_view text);

  int size() const { return n_; }
  Word word() const { return word_; }
  bool test(int k) const { return (word_ >> (k - 1)) & 1U; }
  int weight() const;
  bool is_zero() const { return word_ == 0; }

  std::string to_string() const;

  BitString operator^(const BitString& other) const;
  BitString& operator^=(const BitString& other);
  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  int n_ = 0;
  Word word_ = 0;
};

inline Word low_mask(int n) { return n >= 32 ? ~Word{0} : ((Word{1} << n) - 1); }

/// Ordered list of linearly independent vectors of a common length.
class Basis {
 public:
  /// Throws InvalidInput unless the vectors are independent and share length n.
  Basis(int n, std::vector<BitString> vectors);

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(vectors_.size()); }
  const std::vector<BitString>& vectors() const { return vectors_; }

 private:
  int n_;
  std::vector<BitString> vectors_;
};

int rank_gf2(std::span<const BitString> vectors);

/// Rejection samples k uniform n-bit strings until they are independent.
Basis random_basis(int n, int k, std::mt19937_64& rng);

/// All 2^k combinations; coefficient b_1 is the least significant counter
/// bit, so element 0 is the zero string.
std::vector<BitString> span(const Basis& basis);

bool in_span(const Basis& basis, const BitString& v);

}  // namespace cws
