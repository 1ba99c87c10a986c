#include <doctest.h>

#include <json.hpp>

#include "cws/certificate.hpp"
#include "cws/error.hpp"

using nlohmann::ordered_json;

namespace {

cws::Certificate five_cycle_certificate() {
  const auto g = cws::make_cycle(5);
  cws::SearchConfig cfg;
  const auto r = cws::search(g, cfg);
  REQUIRE(r.found());
  return cws::make_certificate(g, r, cfg);
}

cws::ErrorCode parse_error_code(const std::string& text) {
  try {
    cws::parse_certificate(text);
  } catch (const cws::Error& e) {
    return e.code();
  }
  FAIL("certificate was accepted");
  return cws::ErrorCode::Parse;
}

}  // namespace

TEST_SUITE("certificate") {
  TEST_CASE("round trip") {
    const auto cert = five_cycle_certificate();
    CHECK(cert.classical_check);
    REQUIRE(cert.oracle_check);
    CHECK(*cert.oracle_check);
    CHECK(cert.target_k == 6);
    CHECK(cert.provenance.master_seed == 1);

    const auto text = cws::to_json(cert);
    const auto back = cws::parse_certificate(text);
    CHECK(back.graph == cert.graph);
    CHECK(back.code.words == cert.code.words);
    CHECK(back.provenance.attempts_used == cert.provenance.attempts_used);
    CHECK(back.provenance.disjointness_passes == cert.provenance.disjointness_passes);
    CHECK(cws::to_json(back) == text);

    const auto report = cws::verify_certificate(back);
    CHECK(report.pass());
    CHECK_FALSE(report.recorded_mismatch);
  }

  TEST_CASE("invariant violations are input errors") {
    const auto doc = ordered_json::parse(cws::to_json(five_cycle_certificate()));

    auto dup = doc;
    dup["codewords"][2] = dup["codewords"][1];
    CHECK(parse_error_code(dup.dump()) == cws::ErrorCode::InvalidInput);

    auto count = doc;
    count["K"] = 7;
    CHECK(parse_error_code(count.dump()) == cws::ErrorCode::InvalidInput);

    auto first = doc;
    std::swap(first["codewords"][0], first["codewords"][1]);
    CHECK(parse_error_code(first.dump()) == cws::ErrorCode::InvalidInput);

    auto width = doc;
    width["codewords"][1] = "0101";
    CHECK(parse_error_code(width.dump()) != cws::ErrorCode::IsolatedVertex);

    auto size = doc;
    size["n"] = 6;
    CHECK(parse_error_code(size.dump()) == cws::ErrorCode::InvalidInput);

    CHECK(parse_error_code("{") == cws::ErrorCode::Parse);
    CHECK(parse_error_code("{\"n\": 5}") == cws::ErrorCode::Parse);
  }

  TEST_CASE("stale recorded verdict fails verification") {
    auto doc = ordered_json::parse(cws::to_json(five_cycle_certificate()));
    doc["checks"]["oracle"] = false;
    const auto report = cws::verify_certificate(cws::parse_certificate(doc.dump()));
    CHECK(report.classical.pass);
    REQUIRE(report.oracle);
    CHECK(report.oracle->pass);
    CHECK(report.recorded_mismatch);
    CHECK_FALSE(report.pass());
  }

  TEST_CASE("verify_code reports both paths") {
    const auto g = cws::make_cycle(5);
    const auto bad = cws::verify_code(g, cws::parse_codewords(5, "00000\n10000\n"));
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.classical.pass);
    REQUIRE(bad.oracle);
    CHECK_FALSE(bad.oracle->pass);
    CHECK(bad.describe().find("Z_1") != std::string::npos);
  }

  TEST_CASE("parse_codewords") {
    const auto c = cws::parse_codewords(5, "# header\n00000 11011\n\n10101  # trailing\n");
    REQUIRE(c.size() == 3);
    CHECK(c.words[1].to_string() == "11011");
    CHECK_THROWS_AS(cws::parse_codewords(5, "0000"), cws::Error);
    CHECK_THROWS_AS(cws::parse_codewords(5, "0000a"), cws::Error);
  }

  TEST_CASE("oracle verdict is null above the statevector limit") {
    const auto g = cws::make_cycle(13);
    cws::SearchConfig cfg;
    cfg.target_k = 8;
    const auto r = cws::search(g, cfg);
    REQUIRE(r.found());
    const auto cert = cws::make_certificate(g, r, cfg);
    CHECK(cert.classical_check);
    CHECK_FALSE(cert.oracle_check);
    const auto doc = ordered_json::parse(cws::to_json(cert));
    CHECK(doc["checks"]["oracle"].is_null());
    const auto report = cws::verify_certificate(cws::parse_certificate(doc.dump()));
    CHECK_FALSE(report.oracle);
    CHECK_FALSE(report.pass());
  }
}
