#include "doctest.h"
#include "knockout/io.hpp"
#include "knockout/pattern_builder.hpp"
#include "test_support.hpp"

using namespace knockout;

TEST_SUITE_BEGIN("io");

TEST_CASE("pattern JSON layout") {
  const auto doc = io::pattern_to_json(eta_base());
  CHECK(doc.at("n_exponent") == 3);
  REQUIRE(doc.at("edges").size() == 28);
  CHECK(doc.at("edges")[0] == nlohmann::json::array({1, 2}));
  CHECK(doc.at("edges")[11] == nlohmann::json::array({4, 1}));
  CHECK(doc.at("edges")[27] == nlohmann::json::array({8, 5}));
}

TEST_CASE("serialisations re-parse to equal objects") {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned n = 1 + trial % 5;
    const auto p = testing::random_pattern(n, gen);
    const auto text = io::pattern_to_json(p).dump();
    CHECK(io::pattern_from_json(nlohmann::json::parse(text)) == p);

    const Bracket b(testing::random_permutation(p.size(), gen));
    CHECK(io::bracket_from_json(nlohmann::json::parse(io::bracket_to_json(b).dump())) == b);
  }
  for (unsigned n = 0; n <= 2; ++n) {
    const auto profile = build_profile(n);
    CHECK(io::profile_from_csv(io::profile_to_csv(profile)) == profile);
  }
}

TEST_CASE("malformed pattern JSON") {
  using nlohmann::json;
  CHECK_THROWS_AS(io::pattern_from_json(json::array()), DomainError);
  CHECK_THROWS_AS(io::pattern_from_json(json{{"n_exponent", 1}}), DomainError);
  CHECK_THROWS_AS(io::pattern_from_json(json{{"n_exponent", 1}, {"edges", json::array()}}), DomainError);
  CHECK_THROWS_AS(io::pattern_from_json(json{{"n_exponent", 1}, {"edges", {{1, 1}}}}), DomainError);
  CHECK_THROWS_AS(io::pattern_from_json(json{{"n_exponent", 1}, {"edges", {{1, -2}}}}), DomainError);
  CHECK_THROWS_AS(io::pattern_from_json(json{{"n_exponent", -1}, {"edges", {{1, 2}}}}), DomainError);
  CHECK(io::pattern_from_json(json{{"n_exponent", 1}, {"edges", {{2, 1}}}}).beats(2, 1));
}

TEST_CASE("malformed bracket JSON") {
  using nlohmann::json;
  CHECK_THROWS_AS(io::bracket_from_json(json{{"a", 1}}), DomainError);
  CHECK_THROWS_AS(io::bracket_from_json(json::array({1, 2, 2, 4})), DomainError);
  CHECK_THROWS_AS(io::bracket_from_json(json::array({1, "2"})), DomainError);
}

TEST_CASE("profile CSV parsing") {
  const auto p = io::profile_from_csv("1, 2,3\r\n3,2,1\n\n");
  CHECK(p.row_count() == 2);
  CHECK(io::profile_to_csv(p) == "1,2,3\n3,2,1\n");
  CHECK_THROWS_AS(io::profile_from_csv("1,x\n"), DomainError);
  CHECK_THROWS_AS(io::profile_from_csv("1,,2\n"), DomainError);
  CHECK_THROWS_AS(io::profile_from_csv("1,2\n1,3\n"), DomainError);
}

TEST_SUITE_END();
