#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "cws/error.hpp"
#include "cws/graph.hpp"

using cws::BitString;
using cws::PauliKind;

TEST_SUITE("graphmodel") {
  TEST_CASE("cycle neighbor masks match the five-cycle X strings") {
    const auto g = cws::make_cycle(5);
    CHECK(g.neighbor_mask(1).to_string() == "01001");
    CHECK(g.neighbor_mask(2).to_string() == "10100");
    CHECK(g.neighbor_mask(3).to_string() == "01010");
    CHECK(g.neighbor_mask(4).to_string() == "00101");
    CHECK(g.neighbor_mask(5).to_string() == "10010");
    CHECK(g.edges().size() == 5);
  }

  TEST_CASE("small cycles") {
    const auto tri = cws::make_cycle(3);
    for (int k = 1; k <= 3; ++k) CHECK(tri.degree(k) == 2);
    const auto hex = cws::make_cycle(6);
    for (int k = 1; k <= 6; ++k) CHECK(hex.neighbor_mask(k).weight() == 2);
    CHECK_THROWS_AS(cws::make_cycle(2), cws::Error);
  }

  TEST_CASE("neighbor_mask edge cases") {
    const cws::Graph g = cws::Graph::from_edges(4, {{1, 2}});
    CHECK(g.neighbor_mask(3).is_zero());
    CHECK_FALSE(g.neighbor_mask(1).test(1));
    CHECK_THROWS_AS(g.neighbor_mask(0), cws::Error);
    CHECK_THROWS_AS(g.neighbor_mask(5), cws::Error);
  }

  TEST_CASE("parse_edge_list") {
    const auto tri = cws::parse_edge_list("n=3; 1 2; 2 3; 1 3");
    CHECK(tri == cws::make_cycle(3));
    CHECK(cws::parse_edge_list("n=5; 1 2; 2 3; 3 4; 4 5; 1 5") == cws::make_cycle(5));
    CHECK(cws::parse_edge_list("# ring\nn=5\n5 1\n1 2 # dup below\n2 1\n2 3\n3 4\n4 5\n") ==
          cws::make_cycle(5));

    try {
      cws::parse_edge_list("n=2; 1 1");
      FAIL("expected self-loop rejection");
    } catch (const cws::Error& e) {
      CHECK(e.code() == cws::ErrorCode::InvalidInput);
    }
    try {
      cws::parse_edge_list("n=3; 1 4");
      FAIL("expected range rejection");
    } catch (const cws::Error& e) {
      CHECK(e.code() == cws::ErrorCode::InvalidInput);
    }
    CHECK_THROWS_AS(cws::parse_edge_list("1 2"), cws::Error);
    CHECK_THROWS_AS(cws::parse_edge_list("n=3; 1"), cws::Error);
    CHECK_THROWS_AS(cws::parse_edge_list(""), cws::Error);
  }

  TEST_CASE("edge list text round trips") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const auto g = cws::random_graph(8, 0.4, rng);
      CHECK(cws::parse_edge_list(g.to_edge_list()) == g);
    }
  }

  TEST_CASE("random_graph") {
    std::mt19937_64 a(3);
    std::mt19937_64 b(3);
    CHECK(cws::random_graph(4, 0.5, a) == cws::random_graph(4, 0.5, b));

    std::mt19937_64 dense(1);
    const auto g = cws::random_graph(5, 0.999, dense);
    CHECK(g.edges().size() >= 9);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
      const auto r = cws::random_graph(9, 0.3, rng);
      for (int i = 1; i <= 9; ++i) {
        CHECK_FALSE(r.adjacent(i, i));
        for (int j = 1; j <= 9; ++j) CHECK(r.adjacent(i, j) == r.adjacent(j, i));
      }
    }
    CHECK_THROWS_AS(cws::random_graph(4, 0.0, rng), cws::Error);
    CHECK_THROWS_AS(cws::random_graph(4, 1.0, rng), cws::Error);
  }

  TEST_CASE("graph_from_spec") {
    CHECK(cws::graph_from_spec("cycle:6", 0) == cws::make_cycle(6));
    CHECK(cws::graph_from_spec("random:7,0.4", 9) == cws::graph_from_spec("random:7,0.4", 9));
    const char* path = "test_graph_spec_edges.txt";
    {
      std::ofstream out(path);
      out << "n=3\n1 2\n2 3\n1 3\n";
    }
    CHECK(cws::graph_from_spec(std::string("edges:") + path, 0) == cws::make_cycle(3));
    std::remove(path);
    CHECK_THROWS_AS(cws::graph_from_spec("cycle", 0), cws::Error);
    CHECK_THROWS_AS(cws::graph_from_spec("wheel:5", 0), cws::Error);
    CHECK_THROWS_AS(cws::graph_from_spec("random:5", 0), cws::Error);
    CHECK_THROWS_AS(cws::graph_from_spec("edges:/nonexistent/file", 0), cws::Error);
  }

  TEST_CASE("error model of the five-cycle") {
    const cws::ErrorModel em(cws::make_cycle(5));
    REQUIRE(em.entries().size() == 15);
    int w1 = 0, w2 = 0, w3 = 0;
    for (const auto& e : em.entries()) {
      const int w = e.string.weight();
      w1 += w == 1;
      w2 += w == 2;
      w3 += w == 3;
    }
    CHECK(w1 == 5);
    CHECK(w2 == 5);
    CHECK(w3 == 5);
    for (const char* s : {"10100", "01010", "00101", "10010", "01001"}) {
      const int idx = em.first_match(BitString::parse(s).word());
      REQUIRE(idx >= 0);
      CHECK(em.entries()[static_cast<std::size_t>(idx)].label.kind == PauliKind::X);
    }
  }

  TEST_CASE("triangle Y_1 string") {
    const cws::ErrorModel em(cws::make_cycle(3));
    CHECK(em.entries()[2].label.to_string() == "Y_1");
    CHECK(em.entries()[2].string.to_string() == "111");
  }

  TEST_CASE("isolated vertices are rejected") {
    const auto g = cws::Graph::from_edges(3, {{1, 2}});
    try {
      cws::ErrorModel em(g);
      FAIL("expected IsolatedVertex");
    } catch (const cws::Error& e) {
      CHECK(e.code() == cws::ErrorCode::IsolatedVertex);
    }
  }

  TEST_CASE("degree-one duplicates keep labels but dedupe membership") {
    // Path 1-2-3: X_1 = 010 = Z_2 and X_3 = 010.
    const cws::ErrorModel em(cws::Graph::from_edges(3, {{1, 2}, {2, 3}}));
    CHECK(em.entries().size() == 9);
    CHECK(em.distinct_strings().size() < 9);
    const int idx = em.first_match(BitString::parse("010").word());
    CHECK(em.entries()[static_cast<std::size_t>(idx)].label.to_string() == "X_1");
  }

  TEST_CASE("property: error model structure") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
      const int n = 3 + static_cast<int>(rng() % 8);
      const auto g = cws::random_graph(n, 0.5, rng);
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          CHECK(g.neighbor_mask(k).test(j) == g.neighbor_mask(j).test(k));
        }
      }
      bool isolated = false;
      for (int k = 1; k <= n; ++k) isolated = isolated || g.degree(k) == 0;
      if (isolated) continue;
      const cws::ErrorModel em(g);
      for (int k = 1; k <= n; ++k) {
        const auto& z = em.entries()[static_cast<std::size_t>(3 * (k - 1))];
        const auto& x = em.entries()[static_cast<std::size_t>(3 * (k - 1) + 1)];
        const auto& y = em.entries()[static_cast<std::size_t>(3 * (k - 1) + 2)];
        CHECK(y.string == (x.string ^ z.string));
        CHECK_FALSE(x.string.test(k));
        CHECK(y.string.test(k));
        CHECK_FALSE(x.string.is_zero());
      }
    }
  }

  TEST_CASE("property: cycle error strings are cyclic shifts") {
    for (int n = 3; n <= 12; ++n) {
      const cws::ErrorModel em(cws::make_cycle(n));
      auto rotate = [](const BitString& s) {
        std::string t = s.to_string();
        std::rotate(t.rbegin(), t.rbegin() + 1, t.rend());
        return BitString::parse(t);
      };
      for (int k = 1; k < n; ++k) {
        for (int c = 0; c < 3; ++c) {
          const auto& cur = em.entries()[static_cast<std::size_t>(3 * (k - 1) + c)].string;
          const auto& next = em.entries()[static_cast<std::size_t>(3 * k + c)].string;
          CHECK(rotate(cur) == next);
        }
      }
    }
  }
}
