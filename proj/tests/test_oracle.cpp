#include <doctest.h>

#include "cws/error.hpp"
#include "cws/oracle.hpp"
#include "reference.hpp"

using cws::BitString;
using cws::PauliKind;
using cws::PauliLabel;

namespace {

cws::Code code_of(int n, std::initializer_list<const char*> words) {
  std::vector<BitString> out;
  for (const char* w : words) out.push_back(BitString::parse(w));
  return cws::Code(n, out);
}

// Library state as an unnormalized complex vector, for comparison with ref::.
ref::Vec as_vec(const cws::SignState& s) {
  static const ref::Amp phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ref::Vec v(s.signs().size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    v[x] = phases[s.phase_power()] * static_cast<long long>(s.signs()[x]);
  }
  return v;
}

cws::SignState apply_stabilizer(const cws::Graph& g, const cws::SignState& s, int i) {
  cws::SignState out = s;
  for (int j = 1; j <= g.size(); ++j) {
    if (g.adjacent(i, j)) out = cws::apply_pauli(out, {PauliKind::Z, j});
  }
  return cws::apply_pauli(out, {PauliKind::X, i});
}

BitString random_bits(int n, std::mt19937_64& rng) {
  return BitString(n, static_cast<cws::Word>(rng()) & cws::low_mask(n));
}

const cws::ExactComplex kOne{1, 0, 0};
const cws::ExactComplex kZero{0, 0, 0};

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("graph_state signs") {
    const auto plus = cws::graph_state(cws::Graph(3));
    for (auto s : plus.signs()) CHECK(s == 1);

    const auto pair = cws::graph_state(cws::Graph::from_edges(2, {{1, 2}}));
    CHECK(pair.sign(0b00) == 1);
    CHECK(pair.sign(0b01) == 1);
    CHECK(pair.sign(0b10) == 1);
    CHECK(pair.sign(0b11) == -1);

    CHECK(cws::graph_state(cws::make_cycle(3)).sign(0b111) == -1);
    CHECK_THROWS_AS(cws::graph_state(cws::make_cycle(13)), cws::Error);
  }

  TEST_CASE("graph_state equals controlled-phase circuit") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto edges = ref::random_connectedish_edges(n, rng);
      CHECK(as_vec(cws::graph_state(cws::Graph::from_edges(n, edges))) ==
            ref::graph_state(n, edges));
    }
  }

  TEST_CASE("Pauli actions match dense matrices") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const auto edges = ref::random_connectedish_edges(n, rng);
      const auto b = random_bits(n, rng);
      auto s = cws::apply_z_string(cws::graph_state(cws::Graph::from_edges(n, edges)), b);
      ref::Vec v = ref::z_string(ref::graph_state(n, edges), b.to_string());
      CHECK(as_vec(s) == v);
      for (int step = 0; step < 4; ++step) {
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        const char which = "XYZ"[rng() % 3];
        const PauliKind kind = which == 'X' ? PauliKind::X : which == 'Y' ? PauliKind::Y : PauliKind::Z;
        s = cws::apply_pauli(s, {kind, k});
        v = ref::pauli(v, which, k);
        CHECK(as_vec(s) == v);
      }
    }
  }

  TEST_CASE("involutions") {
    const auto g = cws::graph_state(cws::make_cycle(5));
    CHECK(cws::apply_z_string(g, BitString::zeros(5)) == g);
    const auto b = BitString::parse("10110");
    CHECK(cws::apply_z_string(cws::apply_z_string(g, b), b) == g);
    for (auto kind : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
      const PauliLabel p{kind, 3};
      CHECK(cws::apply_pauli(cws::apply_pauli(g, p), p) == g);
    }
    const auto plus = cws::graph_state(cws::Graph(3));
    const auto z1 = cws::apply_z_string(plus, BitString::unit(3, 1));
    for (cws::Word x = 0; x < 8; ++x) CHECK(z1.sign(x) == ((x & 1U) ? -1 : 1));
    CHECK_THROWS_AS(cws::apply_pauli(g, {PauliKind::X, 6}), cws::Error);
    CHECK_THROWS_AS(cws::apply_z_string(g, BitString::zeros(4)), cws::Error);
  }

  TEST_CASE("inner products") {
    const auto g = cws::graph_state(cws::make_cycle(5));
    CHECK(cws::inner(g, g) == kOne);
    const auto z1 = cws::apply_pauli(g, {PauliKind::Z, 1});
    CHECK(cws::inner(g, z1) == kZero);
    CHECK(cws::inner(cws::apply_z_string(g, BitString::parse("11000")),
                     cws::apply_z_string(g, BitString::parse("00110"))) == kZero);
    const auto y = cws::apply_pauli(g, {PauliKind::Y, 2});
    CHECK(cws::inner(y, y) == kOne);
    CHECK_THROWS_AS(cws::inner(g, cws::graph_state(cws::make_cycle(4))), cws::Error);
  }

  TEST_CASE("property: stabilizer generators fix the graph state") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto g = cws::random_graph(n, 0.5, rng);
      const auto s = cws::graph_state(g);
      for (int i = 1; i <= n; ++i) CHECK(cws::inner(s, apply_stabilizer(g, s, i)) == kOne);
    }
  }

  TEST_CASE("property: Z_i anticommutes with g_i") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto g = cws::random_graph(n, 0.5, rng);
      const auto s = cws::apply_z_string(cws::graph_state(g), random_bits(n, rng));
      const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      const auto zg = cws::apply_pauli(apply_stabilizer(g, s, i), {PauliKind::Z, i});
      const auto gz = apply_stabilizer(g, cws::apply_pauli(s, {PauliKind::Z, i}), i);
      CHECK(cws::inner(zg, gz) == cws::ExactComplex{-1, 0, 0});
    }
  }

  TEST_CASE("property: X_k acts as Z on the neighbors of k") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto g = cws::random_graph(n, 0.5, rng);
      const auto base = cws::graph_state(g);
      const auto b = random_bits(n, rng);
      const auto c = cws::apply_z_string(base, b);
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      CHECK(cws::apply_pauli(base, {PauliKind::X, k}) ==
            cws::apply_z_string(base, g.neighbor_mask(k)));
      // Moving X_k past Z^b costs (-1)^b_k, so on |c_L> the two sides agree
      // up to exactly that sign.
      const std::int64_t sign = b.test(k) ? -1 : 1;
      CHECK(cws::inner(cws::apply_z_string(c, g.neighbor_mask(k)),
                       cws::apply_pauli(c, {PauliKind::X, k})) == cws::ExactComplex{sign, 0, 0});
    }
  }

  TEST_CASE("property: g_j eigenvalue on a Z-translate is (-1)^b_j") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 60; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto g = cws::random_graph(n, 0.5, rng);
      const auto b = random_bits(n, rng);
      const auto c = cws::apply_z_string(cws::graph_state(g), b);
      for (int j = 1; j <= n; ++j) {
        const std::int64_t expect = b.test(j) ? -1 : 1;
        CHECK(cws::inner(c, apply_stabilizer(g, c, j)) == cws::ExactComplex{expect, 0, 0});
      }
    }
  }

  TEST_CASE("kl_check basics") {
    const auto c5 = cws::make_cycle(5);
    const auto single = cws::kl_check(c5, code_of(5, {"00000"}));
    CHECK(single.pass);
    CHECK(single.checked_errors.size() == 16);

    const auto bad = cws::kl_check(c5, code_of(5, {"00000", "10000"}));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.violation);
    REQUIRE(bad.violation->op.pauli);
    CHECK(bad.violation->op.to_string() == "Z_1");

    CHECK_FALSE(cws::kl_check(c5, code_of(5, {"00000", "01011", "01011"})).pass);
    CHECK_THROWS_AS(cws::kl_check(c5, code_of(4, {"0000"})), cws::Error);
  }

  TEST_CASE("kl_check accepts the five-cycle ((5,6,2)) code") {
    // Words produced by the coset search on cycle:5 with seed 1.
    const auto code = code_of(5, {"00000", "10101", "11000", "11110", "00011", "01111"});
    CHECK(cws::kl_check(cws::make_cycle(5), code).pass);
    CHECK(ref::kl_detects(5, cws::make_cycle(5).edges(),
                          {"00000", "10101", "11000", "11110", "00011", "01111"}));
  }

  TEST_CASE("property: transform-based kl_check equals the dense definition") {
    std::mt19937_64 rng(45);
    int passes = 0;
    for (int t = 0; t < 150; ++t) {
      const int n = 2 + static_cast<int>(rng() % 5);
      // Edgeless vertices allowed here: the oracle must handle degenerate errors.
      const auto g = cws::random_graph(n, 0.5, rng);
      const int k = 1 + static_cast<int>(rng() % 4);
      std::vector<BitString> words{BitString::zeros(n)};
      std::vector<std::string> text{words[0].to_string()};
      while (static_cast<int>(words.size()) < k) {
        const auto w = random_bits(n, rng);
        if (std::find(words.begin(), words.end(), w) != words.end()) continue;
        words.push_back(w);
        text.push_back(w.to_string());
        if (words.size() == (std::size_t{1} << n)) break;
      }
      const bool got = cws::kl_check(g, cws::Code(n, words)).pass;
      CHECK(got == ref::kl_detects(n, g.edges(), text));
      passes += got;
    }
    CHECK(passes > 10);
  }

  TEST_CASE("kl_check report is independent of worker count") {
    const auto g = cws::make_cycle(6);
    const auto code = code_of(6, {"000000", "110000", "001100", "111100", "000011", "100000"});
    const auto one = cws::kl_check(g, code, 1);
    const auto many = cws::kl_check(g, code, 4);
    CHECK(one.pass == many.pass);
    REQUIRE(one.violation);
    REQUIRE(many.violation);
    CHECK(one.describe() == many.describe());
  }
}
