#include <cmath>
#include <string>

#include "doctest.h"
#include "groverian/state_io.hpp"
#include "test_support.hpp"

using namespace groverian;

namespace {
std::string data(const char* name) { return std::string(GROVERIAN_TEST_DATA) + "/" + name; }
}  // namespace

TEST_SUITE("state files") {
  TEST_CASE("fixtures parse into validated states") {
    const PureState s = read_state_file(data("maximally_entangled.json"));
    CHECK(s.parties() == 2);
    CHECK(s.local_dim() == 3);
    CHECK(std::abs(s[4] - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(read_state_file(data("complex_phase.json"))[0].imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(read_state_file(data("ghz3.json")).size() == 27);
  }

  TEST_CASE("normalize mode rescales, strict mode rejects") {
    CHECK_THROWS_AS(read_state_file(data("uniform_unnormalized.json")), StateFormatError);
    const PureState u = read_state_file(data("uniform_unnormalized.json"), NormalizationMode::normalize);
    for (const Cx& a : u.amps()) CHECK(std::abs(a - 1.0 / 3.0) < 1e-15);
    CHECK_THROWS_AS(read_state_file(data("norm_098.json")), StateFormatError);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(read_state_file(data("eight_amps.json")), StateFormatError);
    CHECK_THROWS_AS(read_state_file(data("malformed.json")), StateFormatError);
    CHECK_THROWS_AS(read_state_file(data("does_not_exist.json")), StateFormatError);
    CHECK_THROWS_AS(parse_state_json("not json"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json("[1, 2]"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"d": 3, "amps": []})"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": -2, "d": 3, "amps": []})"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 1, "d": 3, "amps": [[1, 0], [0, 0], ["x", 0]]})"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 1, "d": 3, "amps": [[0, 0], [0, 0], [0, 0]]})"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 1, "d": 3, "amps": {"0": [1, 0]}})"), StateFormatError);
  }

  TEST_CASE("documents written by to_state_json read back exactly") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const PureState s = groverian::testing::random_pure_state(1 + trial % 3, 2 + trial % 3, rng);
      const PureState back = parse_state_json(to_state_json(s));
      REQUIRE(back.size() == s.size());
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(back[i] - s[i]) <= 1e-15);
    }
  }
}
